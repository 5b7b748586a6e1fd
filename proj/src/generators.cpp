#include "famdd/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace famdd {

namespace {

// Level-wise DP engine. Levels must be sorted ascending; tag carries the
// per-position attribute a family's transition function needs. States are
// packed into 32 bits, the sentinel marks an impossible branch.
constexpr std::uint64_t dead_state = ~0ull;

struct LevelTag {
  std::uint32_t level;
  std::uint32_t tag;
};

template <typename Step, typename Accept>
NodeRef build_dp(DiagramManager& mgr, const std::vector<LevelTag>& levels, std::uint64_t init,
                 Step step, Accept accept) {
  std::unordered_map<std::uint64_t, NodeRef> memo;
  auto rec = [&](auto&& self, std::size_t pos, std::uint64_t s) -> NodeRef {
    if (s == dead_state) return bot_ref;
    if (pos == levels.size()) return accept(s) ? top_ref : bot_ref;
    std::uint64_t key = (static_cast<std::uint64_t>(pos) << 32) | s;
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    NodeRef lo = self(self, pos + 1, step(levels[pos].tag, s, false));
    NodeRef hi = self(self, pos + 1, step(levels[pos].tag, s, true));
    NodeRef r = mgr.make_node(levels[pos].level, lo, hi);
    memo.emplace(key, r);
    return r;
  };
  return rec(rec, 0, init);
}

std::vector<LevelTag> tag_levels(DiagramManager& mgr, const std::vector<std::string>& names,
                                 const std::vector<std::uint32_t>& tags) {
  std::vector<LevelTag> out(names.size());
  for (std::size_t i = 0; i < names.size(); ++i)
    out[i] = {mgr.order().level(names[i]), tags[i]};
  std::sort(out.begin(), out.end(),
            [](const LevelTag& a, const LevelTag& b) { return a.level < b.level; });
  return out;
}

std::vector<std::uint32_t> levels_of(DiagramManager& mgr, std::span<const std::string> names) {
  std::vector<std::uint32_t> levels;
  levels.reserve(names.size());
  for (const auto& name : names) levels.push_back(mgr.order().level(name));
  std::sort(levels.begin(), levels.end());
  return levels;
}

void check_m(std::size_t m) {
  if (m == 0) throw std::invalid_argument("generator: m must be positive");
}

void check_line(std::size_t m, std::size_t k) {
  if (k < 1 || k > 2 * m) throw std::invalid_argument("generator: line index out of range");
}

// Grid cell (row r, column c), both 1-based.
std::string grid_cell(std::size_t m, std::size_t r, std::size_t c) {
  return "y" + std::to_string(m * (r - 1) + c);
}

std::vector<std::string> line_names(std::size_t m, std::size_t k) {
  std::vector<std::string> names;
  names.reserve(m);
  if (k <= m)
    for (std::size_t c = 1; c <= m; ++c) names.push_back(grid_cell(m, k, c));
  else
    for (std::size_t r = 1; r <= m; ++r) names.push_back(grid_cell(m, r, k - m));
  return names;
}

// Membership flags per grid cell for line k, in y1..y(m*m) order.
std::vector<std::uint32_t> line_tags(std::size_t m, std::size_t k) {
  std::vector<std::uint32_t> tags(m * m, 0);
  for (std::size_t i = 1; i <= m; ++i) {
    std::size_t cell = (k <= m) ? m * (k - 1) + i : m * (i - 1) + (k - m);
    tags[cell - 1] = 1;
  }
  return tags;
}

Family hwb_slice_family(DiagramManager& mgr, std::size_t m, std::size_t k, bool complement) {
  if (k < 1 || k > m) throw std::invalid_argument("generator: slice size out of range");
  std::vector<std::string> names = name_range("y", 1, m);
  std::vector<std::uint32_t> tags(m, 0);
  tags[k - 1] = 1;  // the element whose membership the slice requires
  auto levels = tag_levels(mgr, names, tags);
  const std::uint64_t kk = k;
  if (!complement) {
    // State: number of elements taken; the tagged element may not be skipped.
    auto step = [kk](std::uint32_t tag, std::uint64_t s, bool take) -> std::uint64_t {
      if (!take) return tag ? dead_state : s;
      return s == kk ? dead_state : s + 1;
    };
    return Family(mgr, build_dp(mgr, levels, 0, step,
                                [kk](std::uint64_t s) { return s == kk; }));
  }
  // State: count capped at k+1 in the low byte, took-the-tagged-element flag
  // above it; accepted unless the set lands exactly in the slice.
  auto step = [kk](std::uint32_t tag, std::uint64_t s, bool take) -> std::uint64_t {
    if (!take) return s;
    std::uint64_t count = s & 0xff, took = s >> 8;
    if (count <= kk) ++count;
    if (tag) took = 1;
    return count | (took << 8);
  };
  auto accept = [kk](std::uint64_t s) { return !((s & 0xff) == kk && (s >> 8) != 0); };
  return Family(mgr, build_dp(mgr, levels, 0, step, accept));
}

Family one_per_line_family(DiagramManager& mgr, std::size_t m, std::size_t k) {
  check_line(m, k);
  auto levels = tag_levels(mgr, name_range("y", 1, m * m), line_tags(m, k));
  // State: cells taken on the line so far (0 or 1).
  auto step = [](std::uint32_t tag, std::uint64_t s, bool take) -> std::uint64_t {
    if (!take || !tag) return s;
    return s == 1 ? dead_state : 1;
  };
  return Family(mgr, build_dp(mgr, levels, 0, step, [](std::uint64_t s) { return s == 1; }));
}

Family off_line_family(DiagramManager& mgr, std::size_t m, std::size_t k) {
  check_line(m, k);
  auto levels = tag_levels(mgr, name_range("y", 1, m * m), line_tags(m, k));
  const std::uint64_t mm = m;
  // State: total cells taken in the low byte, line cells taken (capped at 2)
  // above it; accepted m-cell sets must not meet the line exactly once.
  auto step = [mm](std::uint32_t tag, std::uint64_t s, bool take) -> std::uint64_t {
    if (!take) return s;
    std::uint64_t count = s & 0xff, sel = s >> 8;
    if (count == mm) return dead_state;
    ++count;
    if (tag && sel < 2) ++sel;
    return count | (sel << 8);
  };
  auto accept = [mm](std::uint64_t s) { return (s & 0xff) == mm && (s >> 8) != 1; };
  return Family(mgr, build_dp(mgr, levels, 0, step, accept));
}

std::vector<std::string> closure_seed_names(std::size_t m, std::size_t k, std::size_t l) {
  if (k < 1 || k > m || l < 1 || l > m)
    throw std::invalid_argument("generator: seed row or column out of range");
  std::vector<std::string> names;
  // Tag elements for every line except row k and column l.
  for (std::size_t i = 1; i <= 2 * m; ++i)
    if (i != k && i != m + l) names.push_back("x" + std::to_string(i));
  // Grid cells off row k and off column l, plus the crossing cell itself.
  for (std::size_t r = 1; r <= m; ++r)
    for (std::size_t c = 1; c <= m; ++c)
      if ((r != k && c != l) || (r == k && c == l)) names.push_back(grid_cell(m, r, c));
  return names;
}

Family tagged_join(DiagramManager& mgr, std::size_t k, const Family& base) {
  std::vector<std::string> tag = {"x" + std::to_string(k)};
  return join(single_set_family(mgr, tag), base);
}

}  // namespace

std::string_view base_family_name(BaseFamilyKind kind) {
  switch (kind) {
    case BaseFamilyKind::hwb_slice: return "hwb_slice";
    case BaseFamilyKind::hwb_slice_complement: return "hwb_slice_complement";
    case BaseFamilyKind::hidden_weighted_bit: return "hwb";
    case BaseFamilyKind::hidden_weighted_bit_complement: return "hwb_complement";
    case BaseFamilyKind::one_per_line: return "one_per_line";
    case BaseFamilyKind::permutation_matrices: return "permutation_matrices";
    case BaseFamilyKind::m_subsets: return "m_subsets";
    case BaseFamilyKind::m_subsets_off_line: return "m_subsets_off_line";
    case BaseFamilyKind::powerset_family: return "powerset";
    case BaseFamilyKind::singleton_list: return "singletons";
    case BaseFamilyKind::line_cells: return "line_cells";
    case BaseFamilyKind::closure_seed: return "closure_seed";
  }
  throw std::invalid_argument("unknown family kind");
}

std::optional<BaseFamilyKind> base_family_from_name(std::string_view name) {
  for (BaseFamilyKind kind : all_base_family_kinds)
    if (base_family_name(kind) == name) return kind;
  return std::nullopt;
}

std::vector<std::string> name_range(std::string_view prefix, std::size_t from, std::size_t to) {
  std::vector<std::string> names;
  names.reserve(to >= from ? to - from + 1 : 0);
  for (std::size_t i = from; i <= to; ++i)
    names.push_back(std::string(prefix) + std::to_string(i));
  return names;
}

std::vector<std::string> universe_for_family(BaseFamilyKind kind, std::size_t m) {
  check_m(m);
  switch (kind) {
    case BaseFamilyKind::hwb_slice:
    case BaseFamilyKind::hwb_slice_complement:
    case BaseFamilyKind::hidden_weighted_bit:
    case BaseFamilyKind::hidden_weighted_bit_complement:
      return name_range("y", 1, m);
    case BaseFamilyKind::one_per_line:
    case BaseFamilyKind::permutation_matrices:
    case BaseFamilyKind::m_subsets:
    case BaseFamilyKind::m_subsets_off_line:
    case BaseFamilyKind::line_cells:
      return name_range("y", 1, m * m);
    case BaseFamilyKind::powerset_family:
    case BaseFamilyKind::singleton_list:
      return name_range("x", 1, m);
    case BaseFamilyKind::closure_seed: {
      std::vector<std::string> names = name_range("x", 1, 2 * m);
      auto ys = name_range("y", 1, m * m);
      names.insert(names.end(), ys.begin(), ys.end());
      return names;
    }
  }
  throw std::invalid_argument("unknown family kind");
}

Family single_set_family(DiagramManager& mgr, std::span<const std::string> names) {
  auto levels = levels_of(mgr, names);
  NodeRef r = top_ref;
  for (std::size_t i = levels.size(); i-- > 0;) r = mgr.make_node(levels[i], bot_ref, r);
  return Family(mgr, r);
}

Family singletons_family(DiagramManager& mgr, std::span<const std::string> names) {
  auto levels = levels_of(mgr, names);
  NodeRef r = bot_ref;
  for (std::size_t i = levels.size(); i-- > 0;) r = mgr.make_node(levels[i], r, top_ref);
  return Family(mgr, r);
}

Family exact_cardinality_family(DiagramManager& mgr, std::span<const std::string> names,
                                std::size_t k) {
  if (k > names.size())
    throw std::invalid_argument("exact_cardinality_family: k exceeds element count");
  auto raw = levels_of(mgr, names);
  std::vector<LevelTag> levels(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) levels[i] = {raw[i], 0};
  const std::uint64_t kk = k;
  auto step = [kk](std::uint32_t, std::uint64_t s, bool take) -> std::uint64_t {
    if (!take) return s;
    return s == kk ? dead_state : s + 1;
  };
  return Family(mgr, build_dp(mgr, levels, 0, step,
                              [kk](std::uint64_t s) { return s == kk; }));
}

Family gen_base_family(DiagramManager& mgr, BaseFamilyKind kind, std::size_t m, std::size_t k,
                       std::size_t l) {
  check_m(m);
  switch (kind) {
    case BaseFamilyKind::hwb_slice:
      return hwb_slice_family(mgr, m, k, false);
    case BaseFamilyKind::hwb_slice_complement:
      return hwb_slice_family(mgr, m, k, true);
    case BaseFamilyKind::hidden_weighted_bit: {
      Family acc(mgr, bot_ref);
      for (std::size_t i = 1; i <= m; ++i)
        acc = set_union(acc, hwb_slice_family(mgr, m, i, false));
      return acc;
    }
    case BaseFamilyKind::hidden_weighted_bit_complement: {
      auto ys = name_range("y", 1, m);
      Family all = powerset(mgr, ys);
      return set_difference(all, gen_base_family(mgr, BaseFamilyKind::hidden_weighted_bit, m));
    }
    case BaseFamilyKind::one_per_line:
      return one_per_line_family(mgr, m, k);
    case BaseFamilyKind::permutation_matrices: {
      Family acc = one_per_line_family(mgr, m, 1);
      for (std::size_t i = 2; i <= 2 * m; ++i)
        acc = set_intersection(acc, one_per_line_family(mgr, m, i));
      return acc;
    }
    case BaseFamilyKind::m_subsets: {
      auto ys = name_range("y", 1, m * m);
      return exact_cardinality_family(mgr, ys, m);
    }
    case BaseFamilyKind::m_subsets_off_line:
      return off_line_family(mgr, m, k);
    case BaseFamilyKind::powerset_family:
      return powerset(mgr, name_range("x", 1, m));
    case BaseFamilyKind::singleton_list:
      return singletons_family(mgr, name_range("x", 1, m));
    case BaseFamilyKind::line_cells:
      check_line(m, k);
      return single_set_family(mgr, line_names(m, k));
    case BaseFamilyKind::closure_seed:
      return single_set_family(mgr, closure_seed_names(m, k, l));
  }
  throw std::invalid_argument("unknown family kind");
}

bool is_hwb_based(OpKind op) {
  switch (op) {
    case OpKind::join:
    case OpKind::disjoint_join:
    case OpKind::joint_join:
    case OpKind::meet:
    case OpKind::delta:
    case OpKind::quotient:
    case OpKind::remainder:
      return true;
    default:
      return false;
  }
}

bool is_permutation_based(OpKind op) {
  switch (op) {
    case OpKind::restrict:
    case OpKind::permit:
    case OpKind::nonsuperset:
    case OpKind::nonsubset:
    case OpKind::maximal:
    case OpKind::minimal:
    case OpKind::minimal_hitting:
    case OpKind::closure:
      return true;
    default:
      return false;
  }
}

bool has_scaling_instance(OpKind op) { return is_hwb_based(op) || is_permutation_based(op); }

std::size_t blowup_m_cap(OpKind op) {
  if (is_hwb_based(op)) return 18;
  if (is_permutation_based(op)) return 6;
  return 0;
}

std::vector<std::string> universe_for_op(OpKind op, std::size_t m) {
  check_m(m);
  if (!has_scaling_instance(op))
    throw std::invalid_argument("universe_for_op: no scaling instance for this op");
  std::vector<std::string> names;
  if (is_hwb_based(op)) {
    names = name_range("x", 1, m);
    auto ys = name_range("y", 1, m);
    names.insert(names.end(), ys.begin(), ys.end());
    return names;
  }
  if (op == OpKind::minimal_hitting) return name_range("y", 1, m * m);
  if (op == OpKind::maximal || op == OpKind::minimal) names.push_back("w");
  auto xs = name_range("x", 1, 2 * m);
  names.insert(names.end(), xs.begin(), xs.end());
  auto ys = name_range("y", 1, m * m);
  names.insert(names.end(), ys.begin(), ys.end());
  return names;
}

ScalingInstance gen_scaling_instance(OpKind op, std::size_t m, bool with_expected) {
  check_m(m);
  ScalingInstance inst;
  inst.op = op;
  inst.m = m;
  inst.manager =
      std::make_unique<DiagramManager>(Semantics::zdd, VariableOrder(universe_for_op(op, m)));
  DiagramManager& mgr = *inst.manager;

  if (is_hwb_based(op)) {
    auto xs = name_range("x", 1, m);
    auto ys = name_range("y", 1, m);
    bool complement_slices = (op == OpKind::quotient || op == OpKind::remainder);
    std::vector<Family> slices;
    slices.reserve(m);
    for (std::size_t k = 1; k <= m; ++k)
      slices.push_back(hwb_slice_family(mgr, m, k, complement_slices));
    Family f(mgr, bot_ref);
    for (std::size_t k = 1; k <= m; ++k)
      f = set_union(f, tagged_join(mgr, k, slices[k - 1]));
    inst.f = f;

    switch (op) {
      case OpKind::join:
      case OpKind::joint_join:
        inst.g = single_set_family(mgr, xs);
        break;
      case OpKind::disjoint_join:
        inst.g = exact_cardinality_family(mgr, xs, m - 1);
        break;
      case OpKind::meet:
        inst.g = single_set_family(mgr, ys);
        break;
      case OpKind::delta:
        inst.g = powerset(mgr, xs);
        break;
      case OpKind::quotient:
      case OpKind::remainder:
        inst.g = singletons_family(mgr, xs);
        break;
      default:
        break;
    }

    if (with_expected) {
      Family h = gen_base_family(mgr, BaseFamilyKind::hidden_weighted_bit, m);
      switch (op) {
        case OpKind::join:
        case OpKind::joint_join:
        case OpKind::disjoint_join:
          inst.expected = join(single_set_family(mgr, xs), h);
          break;
        case OpKind::meet:
          inst.expected = h;
          break;
        case OpKind::delta:
          inst.expected = join(powerset(mgr, xs), h);
          break;
        case OpKind::quotient:
          inst.expected =
              gen_base_family(mgr, BaseFamilyKind::hidden_weighted_bit_complement, m);
          break;
        case OpKind::remainder: {
          Family hc = gen_base_family(mgr, BaseFamilyKind::hidden_weighted_bit_complement, m);
          Family acc(mgr, bot_ref);
          for (std::size_t k = 1; k <= m; ++k)
            acc = set_union(acc, tagged_join(mgr, k, set_difference(slices[k - 1], hc)));
          inst.expected = acc;
          break;
        }
        default:
          break;
      }
    }
    return inst;
  }

  // Grid-based instances.
  if (op == OpKind::minimal_hitting) {
    Family f(mgr, bot_ref);
    for (std::size_t k = 1; k <= 2 * m; ++k)
      f = set_union(f, single_set_family(mgr, line_names(m, k)));
    inst.f = f;
    // The minimal hitting sets of the 2m lines are the minimal edge covers of
    // the complete bipartite rows-by-columns graph. Only for m <= 2 are those
    // exactly the permutation matrices; from m = 3 on, unions of two stars
    // (for example {y1,y2,y6,y9} on the 3x3 grid) are minimal covers too, so
    // there is no small closed form and the output is checked through the
    // identity "output restricted to m-cell sets = permutation matrices".
    if (with_expected && m <= 2)
      inst.expected = gen_base_family(mgr, BaseFamilyKind::permutation_matrices, m);
    return inst;
  }

  if (op == OpKind::closure) {
    Family f(mgr, bot_ref);
    for (std::size_t k = 1; k <= m; ++k)
      for (std::size_t l = 1; l <= m; ++l)
        f = set_union(f, single_set_family(mgr, closure_seed_names(m, k, l)));
    inst.f = f;
    return inst;  // no closed form; checked through an identity on the output
  }

  auto xs = name_range("x", 1, 2 * m);
  Family msets = gen_base_family(mgr, BaseFamilyKind::m_subsets, m);
  Family g(mgr, bot_ref);
  for (std::size_t k = 1; k <= 2 * m; ++k)
    g = set_union(g, tagged_join(mgr, k, off_line_family(mgr, m, k)));

  auto perm = [&] { return gen_base_family(mgr, BaseFamilyKind::permutation_matrices, m); };
  std::vector<std::string> marker = {"w"};

  switch (op) {
    case OpKind::restrict:
    case OpKind::nonsuperset: {
      inst.f = join(single_set_family(mgr, xs), msets);
      inst.g = g;
      if (with_expected) {
        Family p = perm();
        Family part = (op == OpKind::restrict) ? set_difference(msets, p) : p;
        inst.expected = join(single_set_family(mgr, xs), part);
      }
      break;
    }
    case OpKind::permit:
    case OpKind::nonsubset: {
      inst.f = msets;
      inst.g = g;
      if (with_expected) {
        Family p = perm();
        inst.expected = (op == OpKind::permit) ? set_difference(msets, p) : p;
      }
      break;
    }
    case OpKind::maximal: {
      Family tail = join(single_set_family(mgr, marker), g);
      inst.f = set_union(msets, tail);
      if (with_expected) inst.expected = set_union(perm(), tail);
      break;
    }
    case OpKind::minimal: {
      Family full = single_set_family(mgr, xs);
      inst.f = set_union(g, join(single_set_family(mgr, marker), join(full, msets)));
      if (with_expected)
        inst.expected = set_union(g, join(single_set_family(mgr, marker), join(full, perm())));
      break;
    }
    default:
      throw std::invalid_argument("gen_scaling_instance: unsupported op");
  }
  return inst;
}

}  // namespace famdd
