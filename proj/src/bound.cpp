#include "tck/bound.hpp"

#include "tck/errors.hpp"

namespace tck {

std::int64_t t_bound(std::int64_t n, std::int64_t k) {
  if (n < 1) fail(ErrorCode::OutOfRange, "need n >= 1");
  if (k < 0 || k > n - 1)
    fail(ErrorCode::OutOfRange, "need 0 <= k <= n-1, got k=" + std::to_string(k) +
                                    " for n=" + std::to_string(n));
  if (k == 0) return 1;
  if (k == 1) return 2;
  if (k > 125) fail(ErrorCode::OutOfRange, "t(n,k) exceeds 64-bit range for k > 125");
  if (k % 2 == 0) return std::int64_t{1} << (k / 2);
  return std::int64_t{3} << ((k - 3) / 2);
}

IdentityReport tnk_identity_suite(int n_max) {
  if (n_max < 1) fail(ErrorCode::OutOfRange, "need n_max >= 1");
  IdentityReport report;
  report.n_max = n_max;
  auto push = [&](std::string what, std::int64_t n, std::int64_t k, bool pass) {
    report.checks.push_back({std::move(what), n, k, pass});
    report.all_pass = report.all_pass && report.checks.back().pass;
  };
  auto t = [](std::int64_t n, std::int64_t k) { return t_bound(n, k); };

  for (std::int64_t n = 1; n <= n_max; ++n) {
    if (n >= 2) push("t(n,1) = 2*t(n,0)", n, 1, t(n, 1) == 2 * t(n, 0));
    if (n >= 3) push("t(n,2) = 2*t(n,0)", n, 2, t(n, 2) == 2 * t(n, 0));
    if (n >= 4)
      push("t(n,3) = t(n,2)+t(n,0) < 2*t(n,1) = t(n,2)+t(n,1)", n, 3,
           t(n, 3) == t(n, 2) + t(n, 0) && t(n, 3) < 2 * t(n, 1) &&
               2 * t(n, 1) == t(n, 2) + t(n, 1));
    for (std::int64_t k = 2; k <= n - 2; ++k)
      push("t(n,k) < t(n,k+1)", n, k, t(n, k) < t(n, k + 1));
    for (std::int64_t k = 3; k <= n - 1; ++k)
      push("t(n,k) < 4*t(n,k-3)", n, k, t(n, k) < 4 * t(n, k - 3));
    for (std::int64_t k = 4; k <= n - 1; ++k)
      push("t(n,k) = 2*t(n,k-2) < t(n,k-1)+t(n,k-2)", n, k,
           t(n, k) == 2 * t(n, k - 2) && t(n, k) < t(n, k - 1) + t(n, k - 2));
    for (std::int64_t k = 3; k <= n - 1; ++k) {
      if (k % 2 == 1)
        push("t(n,k) = t(n,k-1)+t(n,k-3) (odd k)", n, k, t(n, k) == t(n, k - 1) + t(n, k - 3));
      else if (k >= 4)
        push("t(n,k) < t(n,k-1)+t(n,k-3) (even k)", n, k, t(n, k) < t(n, k - 1) + t(n, k - 3));
    }
  }
  return report;
}

}  // namespace tck
