// Acceptance gate: one timed criterion per line, [PASS]/[FAIL] verdicts with
// the measured numbers. Exit status 0 iff every criterion passes. All seeds
// and tolerances are pinned here so reruns are bit-comparable.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "famdd/experiments.hpp"
#include "famdd/explicit_family.hpp"
#include "famdd/family_ops.hpp"
#include "famdd/generators.hpp"
#include "famdd/kernel.hpp"
#include "famdd/oracle.hpp"
#include "famdd/rand_util.hpp"

using namespace famdd;

namespace {

constexpr std::uint64_t kSuiteSeed = 20240817;  // criteria 1 and 8 replay the same suite
constexpr std::uint64_t kCanonSeed = 0x5eedcafeull;
constexpr std::uint64_t kOrderSeed = 424242;
constexpr std::uint64_t kBoundsSeed = 2024;
constexpr std::uint64_t kConditionSeedBase = kSuiteSeed + 100000000ull;
constexpr std::size_t kCasesPerOp = 500;
constexpr std::size_t kCanonFamilies = 1000;
constexpr std::size_t kConditionCases = 200;
constexpr std::size_t kSampledOrders = 200;

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

template <typename Body>
void criterion(int id, const std::string& name, double budget_seconds, Body&& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome.ok = false;
    outcome.detail = std::string("exception: ") + e.what();
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool pass = outcome.ok && seconds <= budget_seconds;
  if (!pass) ++failures;
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << name << ": "
            << outcome.detail;
  if (outcome.ok && seconds > budget_seconds) std::cout << "; exceeded time budget";
  std::cout << " (" << std::fixed << std::setprecision(1) << seconds << "s of " << std::setprecision(0)
            << budget_seconds << "s)" << std::endl;
}

std::string one_line(const ExplicitFamily& fam) {
  std::string text = fam.to_text();
  while (!text.empty() && text.back() == '\n') text.pop_back();
  for (char& c : text)
    if (c == '\n') c = ' ';
  return text;
}

std::uint64_t factorial(std::uint64_t m) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= m; ++i) r *= i;
  return r;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Slice-instance predicates over the weight universe, used for the
// enumeration cross-checks: does S (a mask over y1..ym) sit in no slice, and
// is S in the k-tagged slice complement?
bool in_no_slice(std::uint64_t s) {
  unsigned size = static_cast<unsigned>(std::popcount(s));
  return size == 0 || ((s >> (size - 1)) & 1) == 0;
}

bool in_slice_complement(std::uint64_t s, std::size_t k) {
  unsigned size = static_cast<unsigned>(std::popcount(s));
  return !(size == k && ((s >> (k - 1)) & 1) != 0);
}

Outcome check_oracle_equivalence() {
  SelfTestReport report = run_selftest(kCasesPerOp, kSuiteSeed);
  Outcome out;
  out.ok = report.pass();
  std::ostringstream os;
  os << report.cases << " random cases across " << std::size(all_op_kinds) << " ops, "
     << report.failures.size() << " oracle mismatches";
  if (!report.failures.empty()) os << "; first: " << report.failures.front().detail;
  out.detail = os.str();
  return out;
}

Outcome check_canonicity() {
  const std::vector<std::string> pool = {"a", "b", "c", "d", "e", "f", "g", "h"};
  SplitMix64 rng(kCanonSeed);
  std::size_t shuffles = 0;
  for (std::size_t i = 0; i < kCanonFamilies; ++i) {
    std::size_t n = 1 + rng.below(8);
    std::vector<std::string> universe(pool.begin(), pool.begin() + n);
    std::vector<std::uint64_t> masks;
    std::uint64_t limit = 1ull << n;
    std::uint64_t density = 1 + rng.below(4);
    for (std::uint64_t s = 0; s < limit; ++s)
      if (rng.below(8) < density) masks.push_back(s);

    DiagramManager mgr(Semantics::zdd, VariableOrder(universe));
    Family base = from_explicit(mgr, ExplicitFamily(universe, masks));
    for (int round = 0; round < 3; ++round) {
      deterministic_shuffle(masks, rng);
      Family again = from_explicit(mgr, ExplicitFamily(universe, masks));
      ++shuffles;
      if (again.root() != base.root())
        return {false, "insertion order changed the root for family " + std::to_string(i)};
    }
    if (from_explicit(mgr, to_explicit(base)).root() != base.root())
      return {false, "to_explicit round trip changed the root for family " + std::to_string(i)};
    validate_reduced(base);
  }
  std::ostringstream os;
  os << kCanonFamilies << " families, " << shuffles
     << " reshuffled rebuilds, all roots identical and reduced, round trips exact";
  return {true, os.str()};
}

Outcome check_bounds() {
  BoundsReport report = verify_bounds(24, 20, kBoundsSeed);
  Outcome out;
  out.ok = report.violations == 0;
  double worst = 0.0;
  const BoundsRow* worst_row = nullptr;
  for (const auto& row : report.rows) {
    double r = static_cast<double>(row.max_size) / static_cast<double>(row.bound);
    if (r > worst) {
      worst = r;
      worst_row = &row;
    }
  }
  std::ostringstream os;
  os << report.rows.size() << " family/size rows up to m=24 (grid kinds to m=8), "
     << report.violations << " bound violations";
  if (worst_row)
    os << "; tightest: " << worst_row->family << " m=" << worst_row->m << " k=" << worst_row->k
       << " uses " << worst_row->max_size << " of " << worst_row->bound << " ("
       << std::fixed << std::setprecision(2) << worst << ")";
  out.detail = os.str();
  return out;
}

Outcome check_identities() {
  std::size_t checks = 0;

  // Closed forms asserted inside run_blowup at every step.
  const std::pair<OpKind, std::size_t> ranged[] = {
      {OpKind::join, 10},      {OpKind::disjoint_join, 10}, {OpKind::joint_join, 10},
      {OpKind::meet, 10},      {OpKind::delta, 8},          {OpKind::quotient, 8},
      {OpKind::remainder, 8},
  };
  for (auto [op, hi] : ranged) {
    auto records = run_blowup(op, 1, hi);
    checks += records.size();
  }
  const OpKind grid_ops[] = {OpKind::restrict,  OpKind::permit,  OpKind::nonsuperset,
                             OpKind::nonsubset, OpKind::maximal, OpKind::minimal};
  for (OpKind op : grid_ops) {
    auto records = run_blowup(op, 2, 3);
    checks += records.size();
  }

  // Hitting: exact permutation family at m=2. At m=3 the minimal covers
  // include two-star unions beyond the permutation matrices, so the pinned
  // checks are the m-cell identity plus full agreement with enumeration.
  checks += run_blowup(OpKind::minimal_hitting, 2, 2).size();
  {
    auto inst = gen_scaling_instance(OpKind::minimal_hitting, 3, false);
    auto out = minimal_hitting_sets(*inst.f);
    auto cells = gen_base_family(*inst.manager, BaseFamilyKind::m_subsets, 3);
    auto perms = gen_base_family(*inst.manager, BaseFamilyKind::permutation_matrices, 3);
    if (!(set_intersection(out, cells) == perms))
      return {false, "hitting m-cell identity mismatch at m=3"};
    if (to_explicit(out) != oracle_apply(OpKind::minimal_hitting, to_explicit(*inst.f)))
      return {false, "hitting enumeration mismatch at m=3"};
    checks += 2;
  }

  // Quotient and remainder rechecked against direct enumeration of the
  // defining predicates, independent of the generator composition.
  for (std::size_t m = 1; m <= 3; ++m) {
    auto qinst = gen_scaling_instance(OpKind::quotient, m, false);
    ExplicitFamily qexp(universe_for_op(OpKind::quotient, m));
    for (std::uint64_t s = 0; s < (1ull << m); ++s)
      if (in_no_slice(s)) qexp.insert(s << m);
    if (to_explicit(quotient(*qinst.f, *qinst.g)) != qexp)
      return {false, "quotient enumeration mismatch at m=" + std::to_string(m)};
    ++checks;

    auto rinst = gen_scaling_instance(OpKind::remainder, m, false);
    ExplicitFamily rexp(universe_for_op(OpKind::remainder, m));
    for (std::size_t k = 1; k <= m; ++k)
      for (std::uint64_t s = 0; s < (1ull << m); ++s)
        if (in_slice_complement(s, k) && !in_no_slice(s))
          rexp.insert((s << m) | (1ull << (k - 1)));
    if (to_explicit(remainder(*rinst.f, *rinst.g)) != rexp)
      return {false, "remainder enumeration mismatch at m=" + std::to_string(m)};
    ++checks;
  }

  // Closure has no closed form; its output restricted to the m-cell sets
  // must be exactly the permutation family.
  for (std::size_t m = 2; m <= 3; ++m) {
    auto inst = gen_scaling_instance(OpKind::closure, m, false);
    auto closed = closure(*inst.f);
    auto cells = gen_base_family(*inst.manager, BaseFamilyKind::m_subsets, m);
    auto perms = gen_base_family(*inst.manager, BaseFamilyKind::permutation_matrices, m);
    if (!(set_intersection(closed, cells) == perms))
      return {false, "closure identity mismatch at m=" + std::to_string(m)};
    ++checks;
  }

  return {true, std::to_string(checks) + " closed-form and enumeration identities, 0 mismatches"};
}

Outcome check_blowup() {
  std::ostringstream os;
  std::size_t swept = 0;
  for (OpKind op : all_op_kinds) {
    if (!has_scaling_instance(op)) continue;
    std::size_t lo = is_hwb_based(op) ? 6 : 3;
    std::size_t hi = blowup_m_cap(op);
    auto records = run_blowup(op, lo, hi);
    GrowthVerdict verdict = check_growth(op, records);
    if (!verdict.pass)
      return {false, std::string(op_name(op)) + " growth gate failed: " + verdict.detail};
    swept += records.size();
    os << op_name(op) << " z=" << records.front().z_out << ".." << records.back().z_out << "; ";
  }
  return {true, "15 ops, " + std::to_string(swept) +
                    " scales, all input sizes polynomial and every output growth window >= 0.8 "
                    "in log2: " + os.str()};
}

Outcome check_counts() {
  for (std::size_t m = 1; m <= 16; ++m) {
    std::vector<std::string> u = universe_for_family(BaseFamilyKind::hidden_weighted_bit, m);
    DiagramManager mgr(Semantics::zdd, VariableOrder(u));
    auto fam = gen_base_family(mgr, BaseFamilyKind::hidden_weighted_bit, m);
    if (count_sets(fam) != (1ull << (m - 1)))
      return {false, "weighted-slice union count wrong at m=" + std::to_string(m)};
  }
  for (std::size_t m = 1; m <= 7; ++m) {
    std::vector<std::string> u = universe_for_family(BaseFamilyKind::permutation_matrices, m);
    DiagramManager mgr(Semantics::zdd, VariableOrder(u));
    auto fam = gen_base_family(mgr, BaseFamilyKind::permutation_matrices, m);
    if (count_sets(fam) != factorial(m))
      return {false, "permutation count wrong at m=" + std::to_string(m)};
  }
  for (std::size_t m = 1; m <= 6; ++m) {
    std::vector<std::string> u = universe_for_family(BaseFamilyKind::m_subsets, m);
    DiagramManager mgr(Semantics::zdd, VariableOrder(u));
    auto fam = gen_base_family(mgr, BaseFamilyKind::m_subsets, m);
    if (count_sets(fam) != binomial(m * m, m))
      return {false, "m-subset count wrong at m=" + std::to_string(m)};
  }
  return {true, "2^(m-1) for m<=16, m! for m<=7, C(m^2,m) for m<=6, all exact"};
}

Outcome check_orders() {
  auto study3 = run_order_study(OpKind::meet, 3, true, 0, 0);
  auto study4 = run_order_study(OpKind::meet, 4, true, 0, 0);
  if (!(study3.min_size < study4.min_size))
    return {false, "exhaustive minimum did not increase: m=3 gives " +
                       std::to_string(study3.min_size) + ", m=4 gives " +
                       std::to_string(study4.min_size)};

  auto inst6 = gen_scaling_instance(OpKind::meet, 6, false);
  std::size_t natural6 = node_count(meet(*inst6.f, *inst6.g));
  auto study8 = run_order_study(OpKind::meet, 8, false, kSampledOrders, kOrderSeed);
  if (study8.min_size < natural6)
    return {false, "a sampled order at m=8 beat the natural m=6 size: " +
                       std::to_string(study8.min_size) + " < " + std::to_string(natural6)};

  std::ostringstream os;
  os << "exhaustive minima " << study3.min_size << " (m=3, " << study3.records.size()
     << " orders) < " << study4.min_size << " (m=4, " << study4.records.size() << " orders); "
     << kSampledOrders << " sampled orders at m=8 never beat m=6 natural (" << study8.min_size
     << " >= " << natural6 << ")";
  return {true, os.str()};
}

Outcome check_size_ratio() {
  std::size_t families = 0, violations = 0;
  double worst = 0.0;
  std::string worst_detail = "none";
  auto measure = [&](const ExplicitFamily& fam) {
    std::size_t n = fam.universe_size();
    DiagramManager zm(Semantics::zdd, VariableOrder(fam.universe()));
    DiagramManager bm(Semantics::bdd, VariableOrder(fam.universe()));
    auto z = static_cast<double>(node_count(from_explicit(zm, fam)));
    auto b = static_cast<double>(node_count(from_explicit(bm, fam)));
    ++families;
    double factor = std::max(b / (n * z), z / (n * b));
    if (factor > worst) {
      worst = factor;
      std::ostringstream os;
      os << "n=" << n << " family " << one_line(fam) << " has Z=" << z << ", B=" << b;
      worst_detail = os.str();
    }
    if (b > 2.0 * n * z || z > 2.0 * n * b) ++violations;
  };
  for (OpKind op : all_op_kinds) {
    std::size_t op_index = 0;
    while (all_op_kinds[op_index] != op) ++op_index;
    for (std::size_t i = 0; i < kCasesPerOp; ++i) {
      RandomOpCase c = make_random_case(op, suite_case_seed(kSuiteSeed, op_index, i));
      measure(c.f);
      if (op_is_binary(op)) measure(c.g);
    }
  }
  std::ostringstream os;
  os << families << " families from the criterion-1 suite; " << violations
     << " violate B <= 2nZ and Z <= 2nB; measured worst factor " << std::fixed
     << std::setprecision(2) << worst << "n (" << worst_detail << ")";
  return {violations == 0, os.str()};
}

Outcome check_conditioning() {
  for (std::size_t i = 0; i < kConditionCases; ++i) {
    RandomOpCase c = make_random_case(OpKind::condition, kConditionSeedBase + i);
    DiagramManager mgr(Semantics::zdd, VariableOrder(c.universe));
    Family f = from_explicit(mgr, c.f);
    Family out = condition(f, c.required, c.excluded);
    std::size_t n = c.universe.size();
    if (node_count(out) > node_count(f) * (n + 2))
      return {false, "conditioned size " + std::to_string(node_count(out)) + " exceeds " +
                         std::to_string(node_count(f)) + "*(n+2) for case " + std::to_string(i)};
    ExplicitFamily expected =
        oracle_apply(OpKind::condition, c.f, nullptr, c.required, c.excluded);
    if (to_explicit(out) != expected)
      return {false, "conditioned contents differ from enumeration for case " +
                         std::to_string(i)};
  }
  return {true, std::to_string(kConditionCases) +
                    " random (family, required, excluded) triples: sizes within (n+2)x and "
                    "contents match enumeration"};
}

}  // namespace

int main() {
  std::cout << "acceptance: seeds " << kSuiteSeed << "/" << kCanonSeed << "/" << kBoundsSeed
            << "/" << kOrderSeed << ", " << kCasesPerOp << " cases per op" << std::endl;
  criterion(1, "oracle equivalence", 120, check_oracle_equivalence);
  criterion(2, "canonicity and round trips", 30, check_canonicity);
  criterion(3, "generator size bounds", 60, check_bounds);
  criterion(4, "closed-form output identities", 120, check_identities);
  criterion(5, "exponential blow-up sweeps", 600, check_blowup);
  criterion(6, "closed-form counts", 10, check_counts);
  criterion(7, "variable-order studies", 300, check_orders);
  criterion(8, "zdd/bdd size ratio", 60, check_size_ratio);
  criterion(9, "conditioning", 30, check_conditioning);
  if (failures != 0) std::cout << failures << " criterion(s) failed" << std::endl;
  return failures == 0 ? 0 : 1;
}
