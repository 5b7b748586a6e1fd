#pragma once
// Experiment drivers behind the CLI: blow-up sweeps with identity
// assertions, growth verdicts, order-robustness studies, size-bound
// verification, and the randomized oracle-equivalence self test.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "famdd/explicit_family.hpp"
#include "famdd/family_ops.hpp"
#include "famdd/kernel.hpp"

namespace famdd {

struct BlowupRecord {
  OpKind op{};
  std::size_t m = 0;
  std::size_t z_f = 0;
  std::size_t z_g = 0;  // 0 for unary ops
  std::size_t z_out = 0;
  std::uint64_t count_out = 0;
  std::uint64_t elapsed_ms = 0;  // wall time of the operation itself
};

// One record per m in [m_min, m_max]. Wherever the instance carries an
// independently built expected family, the output root is asserted equal to
// it; a mismatch throws std::logic_error. Range and op are validated against
// the per-op caps (std::invalid_argument).
std::vector<BlowupRecord> run_blowup(OpKind op, std::size_t m_min, std::size_t m_max);

// Header `op,m,z_f,z_g,z_out,count_out,elapsed_ms`, decimal values, one row
// per record. Bodies are deterministic apart from the elapsed_ms column.
void write_blowup_csv(std::ostream&, const std::vector<BlowupRecord>&);

struct GrowthVerdict {
  bool pass = false;
  std::string detail;  // measured rates or the reason for failure
};

// Pinned growth thresholds. Weighted-slice ops: records must cover at least
// 6 consecutive m, inputs obey z_f + z_g <= 32*m^3, z_out strictly
// increases, and log2(z_out) gains at least 0.8 over every window of 5
// consecutive steps. Grid ops: at least 3 consecutive m, inputs obey
// z_f + z_g <= 32*m^4, z_out strictly increases by at least 0.8 in log2 per
// step. The thresholds sit below the theoretical rates to absorb small-m
// transients.
GrowthVerdict check_growth(OpKind op, const std::vector<BlowupRecord>&);

struct OrderStudyRecord {
  OpKind op{};
  std::size_t m = 0;
  std::uint64_t order_id = 0;  // permutation index, or the sample's seed
  std::size_t z_out = 0;
};

struct OrderStudySummary {
  std::vector<OrderStudyRecord> records;
  std::size_t natural_size = 0;  // size under the instance's own order
  std::size_t min_size = 0;
  std::size_t max_size = 0;
  std::size_t median_size = 0;  // lower median
};

// Builds the op's instance output once, then rebuilds it from its explicit
// enumeration under each candidate order. Exhaustive mode walks every
// permutation of the instance universe (allowed only up to 8 elements) with
// the permutation index as order_id; sampled mode draws `samples` shuffles,
// the i-th seeded with seed + i.
OrderStudySummary run_order_study(OpKind op, std::size_t m, bool exhaustive,
                                  std::size_t samples, std::uint64_t seed);

struct BoundsRow {
  std::string family;
  std::size_t m = 0;
  std::size_t k = 0;         // 0 where the family has no line/slice parameter
  std::size_t max_size = 0;  // worst node count over natural + sampled orders
  std::size_t bound = 0;
  bool ok = false;
};

struct BoundsReport {
  std::vector<BoundsRow> rows;
  std::size_t violations = 0;
};

// Verifies the four size bounds: slice families up to min(m_max, 24) over
// every slice size, one-per-line families up to min(m_max, 24) over every
// line, and the m-subset / off-line families up to min(m_max, 8). Each
// family is measured under its natural order plus `sampled_orders` shuffled
// orders drawn from one deterministic stream.
BoundsReport verify_bounds(std::size_t m_max, std::size_t sampled_orders = 20,
                           std::uint64_t seed = 2024);

// One randomized oracle-equivalence case. Fully determined by (op,
// case_seed), so a later pass can regenerate the exact suite an earlier
// pass ran.
struct RandomOpCase {
  OpKind op{};
  std::vector<std::string> universe;
  ExplicitFamily f;
  ExplicitFamily g;  // used by binary ops only (never empty for quotient/remainder)
  std::vector<std::string> required;  // condition only
  std::vector<std::string> excluded;  // condition only
};

RandomOpCase make_random_case(OpKind op, std::uint64_t case_seed);

// Seed scheme shared by the self test and the acceptance checks that replay
// its suite.
inline std::uint64_t suite_case_seed(std::uint64_t base, std::size_t op_index,
                                     std::size_t case_index) {
  return base + op_index * 1000000ull + case_index;
}

struct SelfTestFailure {
  OpKind op{};
  std::uint64_t case_seed = 0;
  std::string detail;
};

struct SelfTestReport {
  std::size_t cases = 0;
  std::vector<SelfTestFailure> failures;
  bool pass() const { return failures.empty(); }
};

// Runs cases_per_op random cases for every operation kind against the
// brute-force oracle, comparing exact explicit contents.
SelfTestReport run_selftest(std::size_t cases_per_op, std::uint64_t seed);

}  // namespace famdd
