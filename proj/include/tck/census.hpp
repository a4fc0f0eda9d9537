#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "tck/network.hpp"

namespace tck {

// Exhaustive-generation scale guard (vertex counts and per-cell populations
// explode past this).
inline constexpr int kMaxCensusLeaves = 5;

// Exhaustive generator of tree-child networks on the labeled leaf set
// {x1..xn}, up to label-fixing isomorphism. Closure of the n single-leaf
// networks under cherry expansion (new leaf as sibling of an existing leaf)
// and reticulated-cherry expansion (ordered leaf pair (a,b): subdivide a's
// in-arc with a new reticulation, b's with a new tree vertex, connect them).
// Complete: every tree-child network has a cherry or reticulated cherry whose
// reduction these two operations invert. Cells are cached; instances are
// independent per thread, but one instance's cell() is not reentrant.
class TreeChildGenerator {
 public:
  explicit TreeChildGenerator(int max_leaves = kMaxCensusLeaves, int jobs = 1);

  // All networks with exactly n leaves {x1..xn} and k reticulations, sorted by
  // canonical code. 3-cycles are NOT filtered here (intermediate networks of a
  // reduction path may legitimately contain them).
  const std::vector<Network>& cell(int n, int k);

  // The same cell with networks containing underlying 3-cycles removed.
  std::vector<Network> cell_3cycle_free(int n, int k);

  int max_leaves() const { return max_leaves_; }

 private:
  struct CompactNet {  // storage form: arcs + (vertex, label index) pairs
    std::uint8_t vertex_count = 0;
    std::vector<std::pair<std::uint8_t, std::uint8_t>> arcs;
    std::vector<std::pair<std::uint8_t, std::uint8_t>> leaf_labels;
  };

  // networks on the initial label segment {x1..xm} with k reticulations,
  // keyed by canonical code
  std::map<std::string, CompactNet>& level(int m, int k);

  Network materialize(const CompactNet& c) const;

  int max_leaves_;
  int jobs_;
  std::map<std::pair<int, int>, std::map<std::string, CompactNet>> levels_;
  std::map<std::pair<int, int>, std::vector<Network>> cells_;
};

// Convenience wrapper for one cell.
std::vector<Network> generate_tree_child(int n, int k, bool forbid_3cycles,
                                         int max_leaves = kMaxCensusLeaves);

// Independent oracle: enumerates ALL digraphs on the forced vertex multiset
// (root, n+k-2 tree vertices, k reticulations, n labeled leaves), keeps the
// valid tree-child ones, dedups by canonical code. Tractable for n <= 3 only
// (ScaleExceeded beyond).
std::vector<Network> brute_force_generate(int n, int k, bool forbid_3cycles = false);

struct CensusCell {
  int n = 0;
  int k = 0;
  std::uint64_t generated = 0;
  std::uint64_t min_T = 0;  // 0 when the cell is empty
  std::uint64_t max_T = 0;
  std::int64_t bound = 0;  // t(n,k)
  std::uint64_t equality_count = 0;
  std::uint64_t octopus_count = 0;
  bool all_equality_octopus = true;  // scoped to k >= 2; vacuously true below
  std::vector<std::string> violations;
};

struct CensusReport {
  int n_max = 0;
  bool forbid_3cycles = true;
  int jobs = 1;
  bool oracle_certified = false;   // generator == brute force at n <= 3
  bool generator_fallback = false; // certification failed, oracle cells used
  bool injected_violation = false;
  std::vector<CensusCell> cells;
  std::vector<std::string> artifacts;  // files written for violations
  double wall_ms = 0.0;

  std::uint64_t violation_total() const;
  bool ok() const { return violation_total() == 0; }
};

struct CensusOptions {
  bool forbid_3cycles = true;
  int jobs = 1;
  int max_leaves = kMaxCensusLeaves;
  bool certify_with_oracle = true;       // n <= 3 cells compared against brute force
  std::string artifact_dir;              // where violating networks are serialized ("" = cwd)
  bool inject_fake_violation = false;    // test hook for the abort path
};

// Checks, for every cell (n <= n_max, k <= n-1) of the (by default
// 3-cycle-free) census: k=0 => |T| = 1; k=1 => |T| = 2; k>=2 => |T| >= t(n,k)
// with equality iff the network is an octopus. Violating networks are recorded
// (canonical code + reason) and serialized to disk. Deterministic: the report
// is byte-identical for any job count (wall_ms aside).
CensusReport verify_main_theorem(int n_max, const CensusOptions& opts = {});

struct DeletionLemmaReport {
  std::uint64_t networks = 0;
  std::uint64_t deletion_checks = 0;   // N\e tree-child for every reticulation arc e
  std::uint64_t tail_checks = 0;       // minimal-depth tails preserve 3-cycle-freeness
  std::uint64_t followup_checks = 0;   // 3-cycles born in N\e die with either of their
                                       // reticulation arcs deleted next
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Per-network deletion laws (see fields above); n must be tree-child.
DeletionLemmaReport verify_deletion_lemmas(const Network& n);
DeletionLemmaReport verify_deletion_lemmas_census(int n_max, const CensusOptions& opts = {});

struct NormalStrictnessReport {
  std::uint64_t networks = 0;
  std::uint64_t with_normal_reticulation = 0;
  std::uint64_t normal_networks = 0;  // shortcut-free; must display exactly 2^k
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Over the 3-cycle-free census: every network with k >= 2 possessing a normal
// reticulation displays strictly more than t(n,k) trees, and every normal
// network displays exactly 2^k.
NormalStrictnessReport verify_normal_strictness(int n_max, const CensusOptions& opts = {});

// Serialization of reports (stable field order; wall_ms is the only
// run-dependent field).
nlohmann::ordered_json census_report_json(const CensusReport& report);
std::string census_report_csv(const CensusReport& report);

}  // namespace tck
