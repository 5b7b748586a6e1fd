#include "famdd/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "famdd/generators.hpp"
#include "famdd/oracle.hpp"
#include "famdd/rand_util.hpp"

namespace famdd {

namespace {

std::size_t op_index_of(OpKind op) {
  for (std::size_t i = 0; i < std::size(all_op_kinds); ++i)
    if (all_op_kinds[i] == op) return i;
  throw std::invalid_argument("unknown op kind");
}

double log2_size(std::size_t z) { return std::log2(static_cast<double>(z)); }

}  // namespace

std::vector<BlowupRecord> run_blowup(OpKind op, std::size_t m_min, std::size_t m_max) {
  if (!has_scaling_instance(op))
    throw std::invalid_argument("run_blowup: op has no scaling instance");
  if (m_min < 1 || m_min > m_max)
    throw std::invalid_argument("run_blowup: bad m range");
  if (m_max > blowup_m_cap(op))
    throw std::invalid_argument("run_blowup: m exceeds the cap for this op");

  std::vector<BlowupRecord> records;
  for (std::size_t m = m_min; m <= m_max; ++m) {
    ScalingInstance inst = gen_scaling_instance(op, m, true);
    BlowupRecord rec;
    rec.op = op;
    rec.m = m;
    rec.z_f = node_count(*inst.f);
    rec.z_g = inst.g ? node_count(*inst.g) : 0;

    auto t0 = std::chrono::steady_clock::now();
    Family out = inst.g ? apply_binary(op, *inst.f, *inst.g) : apply_unary(op, *inst.f);
    auto t1 = std::chrono::steady_clock::now();

    if (inst.expected && !(out == *inst.expected))
      throw std::logic_error("run_blowup: output differs from the expected family (" +
                             std::string(op_name(op)) + ", m=" + std::to_string(m) + ")");
    rec.z_out = node_count(out);
    rec.count_out = count_sets(out);
    rec.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
    records.push_back(rec);
  }
  return records;
}

void write_blowup_csv(std::ostream& out, const std::vector<BlowupRecord>& records) {
  out << "op,m,z_f,z_g,z_out,count_out,elapsed_ms\n";
  for (const auto& r : records)
    out << op_name(r.op) << ',' << r.m << ',' << r.z_f << ',' << r.z_g << ',' << r.z_out << ','
        << r.count_out << ',' << r.elapsed_ms << '\n';
}

GrowthVerdict check_growth(OpKind op, const std::vector<BlowupRecord>& records) {
  GrowthVerdict v;
  if (!has_scaling_instance(op)) {
    v.detail = "op has no scaling instance";
    return v;
  }
  bool hwb = is_hwb_based(op);
  std::size_t need = hwb ? 6 : 3;
  if (records.size() < need) {
    v.detail = "needs at least " + std::to_string(need) + " consecutive m, got " +
               std::to_string(records.size());
    return v;
  }
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (r.op != op || (i > 0 && r.m != records[i - 1].m + 1)) {
      v.detail = "records are not one consecutive m sweep of this op";
      return v;
    }
    // Input bound: constant 32 times the instance's polynomial order.
    std::size_t poly = hwb ? r.m * r.m * r.m : r.m * r.m * r.m * r.m;
    if (r.z_f + r.z_g > 32 * poly) {
      v.detail = "inputs exceed the polynomial bound at m=" + std::to_string(r.m) + " (" +
                 std::to_string(r.z_f + r.z_g) + " > 32*" + std::to_string(poly) + ")";
      return v;
    }
    if (i > 0 && r.z_out <= records[i - 1].z_out) {
      v.detail = "output size not strictly increasing at m=" + std::to_string(r.m);
      return v;
    }
  }
  // Growth rate: 0.8 bits over every 5-step window (weighted-slice ops,
  // theoretical rate 1 bit per 5 steps) or per single step (grid ops,
  // theoretical rate ~1 bit per step).
  std::size_t window = hwb ? 5 : 1;
  double worst = 1e9;
  for (std::size_t i = 0; i + window < records.size(); ++i) {
    double gain = log2_size(records[i + window].z_out) - log2_size(records[i].z_out);
    worst = std::min(worst, gain);
    if (gain < 0.8) {
      v.detail = "log2 gain " + std::to_string(gain) + " over window starting at m=" +
                 std::to_string(records[i].m) + " is below 0.8";
      return v;
    }
  }
  v.pass = true;
  std::ostringstream os;
  os << "inputs within 32*m^" << (hwb ? 3 : 4) << ", worst log2 gain per " << window
     << "-step window " << worst;
  v.detail = os.str();
  return v;
}

OrderStudySummary run_order_study(OpKind op, std::size_t m, bool exhaustive,
                                  std::size_t samples, std::uint64_t seed) {
  ScalingInstance inst = gen_scaling_instance(op, m, false);
  Family out = inst.g ? apply_binary(op, *inst.f, *inst.g) : apply_unary(op, *inst.f);

  OrderStudySummary summary;
  summary.natural_size = node_count(out);
  ExplicitFamily contents = to_explicit(out);

  auto measure = [&](const std::vector<std::string>& names, std::uint64_t order_id) {
    DiagramManager mgr(Semantics::zdd, VariableOrder(names));
    summary.records.push_back({op, m, order_id, node_count(from_explicit(mgr, contents))});
  };

  if (exhaustive) {
    if (contents.universe_size() > 8)
      throw std::invalid_argument("run_order_study: exhaustive search capped at 8 elements");
    std::vector<std::string> names(contents.universe());
    std::sort(names.begin(), names.end());
    std::uint64_t index = 0;
    do {
      measure(names, index++);
    } while (std::next_permutation(names.begin(), names.end()));
  } else {
    for (std::size_t i = 0; i < samples; ++i) {
      std::vector<std::string> names(contents.universe());
      SplitMix64 rng(seed + i);
      deterministic_shuffle(names, rng);
      measure(names, seed + i);
    }
  }

  std::vector<std::size_t> sizes;
  sizes.reserve(summary.records.size());
  for (const auto& r : summary.records) sizes.push_back(r.z_out);
  std::sort(sizes.begin(), sizes.end());
  summary.min_size = sizes.front();
  summary.max_size = sizes.back();
  summary.median_size = sizes[(sizes.size() - 1) / 2];
  return summary;
}

namespace {

std::size_t ceil_log2(std::size_t v) {
  std::size_t t = 0;
  while ((std::size_t{1} << t) < v) ++t;
  return t;
}

}  // namespace

BoundsReport verify_bounds(std::size_t m_max, std::size_t sampled_orders, std::uint64_t seed) {
  BoundsReport report;
  SplitMix64 rng(seed);

  auto max_over_orders = [&](BaseFamilyKind kind, std::size_t m, std::size_t k) {
    std::vector<std::string> universe = universe_for_family(kind, m);
    std::size_t worst = 0;
    for (std::size_t sample = 0; sample <= sampled_orders; ++sample) {
      std::vector<std::string> names(universe);
      if (sample > 0) deterministic_shuffle(names, rng);
      DiagramManager mgr(Semantics::zdd, VariableOrder(names));
      worst = std::max(worst, node_count(gen_base_family(mgr, kind, m, k)));
    }
    return worst;
  };

  auto add_row = [&](BaseFamilyKind kind, const char* label, std::size_t m, std::size_t k,
                     std::size_t bound) {
    BoundsRow row;
    row.family = label;
    row.m = m;
    row.k = k;
    row.max_size = max_over_orders(kind, m, k);
    row.bound = bound;
    row.ok = row.max_size <= bound;
    if (!row.ok) ++report.violations;
    report.rows.push_back(row);
  };

  for (std::size_t m = 1; m <= std::min<std::size_t>(m_max, 24); ++m) {
    for (std::size_t k = 1; k <= m; ++k)
      add_row(BaseFamilyKind::hwb_slice, "slice", m, k,
              2 + m * (std::size_t{1} << (ceil_log2(m + 1) + 1)));
    for (std::size_t k = 1; k <= 2 * m; ++k)
      add_row(BaseFamilyKind::one_per_line, "one_per_line", m, k, 2 + 4 * m * m);
  }
  for (std::size_t m = 1; m <= std::min<std::size_t>(m_max, 8); ++m) {
    add_row(BaseFamilyKind::m_subsets, "m_subsets", m, 0,
            2 + m * m * (std::size_t{1} << ceil_log2(m + 2)));
    for (std::size_t k = 1; k <= 2 * m; ++k)
      add_row(BaseFamilyKind::m_subsets_off_line, "off_line", m, k,
              2 + m * m * (std::size_t{1} << (ceil_log2(m + 2) + 2)));
  }
  return report;
}

RandomOpCase make_random_case(OpKind op, std::uint64_t case_seed) {
  SplitMix64 rng(case_seed);
  std::size_t n = 1 + static_cast<std::size_t>(rng.below(8));
  static const std::vector<std::string> letters = {"a", "b", "c", "d", "e", "f", "g", "h"};
  std::vector<std::string> universe(letters.begin(), letters.begin() + n);

  // Density varies per case so small and large families both show up.
  auto draw_family = [&]() {
    std::uint64_t density = 1 + rng.below(4);  // keep a mask with odds density/8
    std::vector<std::uint64_t> masks;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
      if (rng.below(8) < density) masks.push_back(mask);
    return ExplicitFamily(universe, std::move(masks));
  };

  ExplicitFamily f = draw_family();
  ExplicitFamily g = draw_family();
  if ((op == OpKind::quotient || op == OpKind::remainder) && g.set_count() == 0)
    g.insert(rng.below(std::uint64_t{1} << n));

  std::vector<std::string> required, excluded;
  if (op == OpKind::condition) {
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t roll = rng.below(6);
      if (roll == 0)
        required.push_back(universe[i]);
      else if (roll == 1)
        excluded.push_back(universe[i]);
    }
  }
  return RandomOpCase{op, std::move(universe), std::move(f), std::move(g), std::move(required),
                      std::move(excluded)};
}

SelfTestReport run_selftest(std::size_t cases_per_op, std::uint64_t seed) {
  SelfTestReport report;
  for (OpKind op : all_op_kinds) {
    std::size_t op_index = op_index_of(op);
    for (std::size_t i = 0; i < cases_per_op; ++i) {
      std::uint64_t case_seed = suite_case_seed(seed, op_index, i);
      RandomOpCase c = make_random_case(op, case_seed);
      ++report.cases;

      DiagramManager mgr(Semantics::zdd, VariableOrder(c.universe));
      Family f = from_explicit(mgr, c.f);
      Family result(mgr, bot_ref);
      const ExplicitFamily* oracle_g = nullptr;
      if (op == OpKind::condition) {
        result = condition(f, c.required, c.excluded);
      } else if (op_is_binary(op)) {
        result = apply_binary(op, f, from_explicit(mgr, c.g));
        oracle_g = &c.g;
      } else {
        result = apply_unary(op, f);
      }

      ExplicitFamily expected = oracle_apply(op, c.f, oracle_g, c.required, c.excluded);
      ExplicitFamily actual = to_explicit(result);
      if (!(actual == expected)) {
        std::ostringstream os;
        os << op_name(op) << " case seed " << case_seed << ": diagram result has "
           << actual.set_count() << " sets, oracle has " << expected.set_count();
        report.failures.push_back({op, case_seed, os.str()});
      }
    }
  }
  return report;
}

}  // namespace famdd
