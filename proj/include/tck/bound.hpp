#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tck {

// Lower bound for the number of trees displayed by a tree-child network with n
// leaves and k reticulations (exact integer arithmetic):
//   t(n,0) = 1, t(n,1) = 2, t(n,k) = 2^(k/2) for even k >= 2,
//   t(n,k) = 3 * 2^((k-3)/2) for odd k >= 3.
// Domain: n >= 1, 0 <= k <= n-1; throws OutOfRange outside or when the value
// would not fit in 64 bits.
std::int64_t t_bound(std::int64_t n, std::int64_t k);

struct IdentityCheck {
  std::string identity;  // human-readable instance, e.g. "t(7,5) = 2*t(7,3)"
  std::int64_t n = 0;
  std::int64_t k = 0;
  bool pass = false;
};

struct IdentityReport {
  int n_max = 0;
  std::vector<IdentityCheck> checks;
  bool all_pass = true;
  std::uint64_t checked() const { return checks.size(); }
};

// Exhaustively checks the arithmetic identities/inequalities obeyed by t(n,k)
// for all valid (n,k) with n <= n_max:
//   (1) t(n,1) = 2 t(n,0) and t(n,2) = 2 t(n,0)
//   (2) t(n,3) = t(n,2) + t(n,0) < 2 t(n,1) = t(n,2) + t(n,1)
//   (3) t(n,k) < t(n,k+1) for 2 <= k <= n-2
//   (4) t(n,k) < 4 t(n,k-3) for 3 <= k <= n-1
//   (5) t(n,k) = 2 t(n,k-2) < t(n,k-1) + t(n,k-2) for 4 <= k <= n-1
//   (6) t(n,k) = t(n,k-1) + t(n,k-3) for odd k >= 3, strict < for even k >= 4
IdentityReport tnk_identity_suite(int n_max);

}  // namespace tck
