#include "famdd/kernel.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace famdd {

namespace {

// Boost-style mix; good enough for node triples at desk scale.
inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

inline std::uint32_t effective_level(const DiagramManager& m, NodeRef r) {
  return m.is_terminal(r) ? static_cast<std::uint32_t>(m.var_count()) : m.level_of(r);
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > ~0ull - b) throw std::overflow_error("set count exceeds 64 bits");
  return a + b;
}

std::uint64_t checked_shift(std::uint64_t a, std::uint32_t bits) {
  if (a == 0) return 0;
  if (bits >= 64 || a > (~0ull >> bits)) throw std::overflow_error("set count exceeds 64 bits");
  return a << bits;
}

}  // namespace

VariableOrder::VariableOrder(std::vector<std::string> names) : names_(std::move(names)) {
  levels_.reserve(names_.size());
  for (std::uint32_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("empty element name");
    if (!levels_.emplace(names_[i], i).second)
      throw std::invalid_argument("duplicate element name: " + names_[i]);
  }
}

const std::string& VariableOrder::name(std::uint32_t level) const {
  if (level >= names_.size()) throw std::out_of_range("level out of range");
  return names_[level];
}

std::uint32_t VariableOrder::level(std::string_view name) const {
  auto it = levels_.find(std::string(name));
  if (it == levels_.end()) throw std::out_of_range("unknown element: " + std::string(name));
  return it->second;
}

bool VariableOrder::contains(std::string_view name) const noexcept {
  return levels_.find(std::string(name)) != levels_.end();
}

std::size_t DiagramManager::UniqueKeyHash::operator()(const UniqueKey& k) const noexcept {
  std::size_t h = std::hash<std::uint32_t>{}(k.level);
  h = hash_combine(h, k.lo);
  return hash_combine(h, k.hi);
}

std::size_t DiagramManager::MemoKeyHash::operator()(const MemoKey& k) const noexcept {
  std::size_t h = std::hash<std::uint32_t>{}(k.tag);
  h = hash_combine(h, k.a);
  return hash_combine(h, k.b);
}

DiagramManager::DiagramManager(Semantics semantics, VariableOrder order)
    : semantics_(semantics), order_(std::move(order)) {
  nodes_.push_back({terminal_level, bot_ref, bot_ref});
  nodes_.push_back({terminal_level, top_ref, top_ref});
}

NodeRef DiagramManager::check_ref(NodeRef r) const {
  if (r >= nodes_.size()) throw std::invalid_argument("node handle out of range");
  return r;
}

NodeRef DiagramManager::check_internal(NodeRef r) const {
  check_ref(r);
  if (is_terminal(r)) throw std::invalid_argument("terminal node has no children");
  return r;
}

NodeRef DiagramManager::make_node(std::uint32_t level, NodeRef lo, NodeRef hi) {
  if (level >= order_.size()) throw std::invalid_argument("level outside the variable order");
  check_ref(lo);
  check_ref(hi);
  if (level >= level_of(lo) || level >= level_of(hi))
    throw std::invalid_argument("node level must lie strictly above both children");
  if (semantics_ == Semantics::zdd) {
    if (hi == bot_ref) return lo;
  } else {
    if (lo == hi) return lo;
  }
  UniqueKey key{level, lo, hi};
  auto it = unique_.find(key);
  if (it != unique_.end()) return it->second;
  NodeRef ref = static_cast<NodeRef>(nodes_.size());
  nodes_.push_back({level, lo, hi});
  unique_.emplace(key, ref);
  return ref;
}

std::optional<NodeRef> DiagramManager::cache_get(std::uint32_t tag, NodeRef a, NodeRef b) const {
  auto it = memo_.find(MemoKey{tag, a, b});
  if (it == memo_.end()) return std::nullopt;
  return it->second;
}

void DiagramManager::cache_put(std::uint32_t tag, NodeRef a, NodeRef b, NodeRef result) {
  memo_.emplace(MemoKey{tag, a, b}, result);
}

void DiagramManager::clear_caches() { memo_.clear(); }

Family::Family(DiagramManager& manager, NodeRef root) : manager_(&manager), root_(root) {
  if (root >= manager.store_size()) throw std::invalid_argument("root handle out of range");
}

Family from_explicit(DiagramManager& mgr, const ExplicitFamily& fam) {
  const auto n = static_cast<std::uint32_t>(mgr.var_count());
  std::vector<std::uint32_t> positions(fam.universe_size());
  for (std::size_t i = 0; i < fam.universe_size(); ++i)
    positions[i] = mgr.order().level(fam.universe()[i]);

  // Each set becomes its sorted level sequence. Lexicographic order with
  // "exhausted sorts last" keeps every partition block contiguous below.
  std::vector<std::vector<std::uint32_t>> sets;
  sets.reserve(fam.set_count());
  for (std::uint64_t mask : fam.masks()) {
    std::vector<std::uint32_t> levels;
    for (std::size_t i = 0; i < fam.universe_size(); ++i)
      if (mask >> i & 1) levels.push_back(positions[i]);
    std::sort(levels.begin(), levels.end());
    sets.push_back(std::move(levels));
  }
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    std::size_t k = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < k; ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return a.size() > b.size();
  });

  // Bottom-up over levels: at each level the front block of the span is the
  // hi part (sets containing the level's element), the rest the lo part.
  std::function<NodeRef(std::uint32_t, std::size_t, std::size_t, std::size_t)> build =
      [&](std::uint32_t level, std::size_t first, std::size_t last, std::size_t depth) -> NodeRef {
    if (first == last) return bot_ref;
    if (level == n) return top_ref;  // duplicates were removed, so one set at most
    std::size_t mid = first;
    while (mid < last && sets[mid].size() > depth && sets[mid][depth] == level) ++mid;
    NodeRef hi = build(level + 1, first, mid, depth + 1);
    NodeRef lo = build(level + 1, mid, last, depth);
    return mgr.make_node(level, lo, hi);
  };
  return Family(mgr, build(0, 0, sets.size(), 0));
}

std::uint64_t count_sets(const Family& fam) {
  DiagramManager& m = fam.manager();
  const auto n = static_cast<std::uint32_t>(m.var_count());
  std::unordered_map<NodeRef, std::uint64_t> memo;
  std::function<std::uint64_t(NodeRef)> count = [&](NodeRef r) -> std::uint64_t {
    if (r == bot_ref) return 0;
    if (r == top_ref) return 1;
    auto it = memo.find(r);
    if (it != memo.end()) return it->second;
    std::uint64_t result;
    if (m.semantics() == Semantics::zdd) {
      result = checked_add(count(m.lo_of(r)), count(m.hi_of(r)));
    } else {
      // Each level skipped on an arc doubles the count below it.
      std::uint32_t level = m.level_of(r);
      std::uint64_t lo = checked_shift(count(m.lo_of(r)), effective_level(m, m.lo_of(r)) - level - 1);
      std::uint64_t hi = checked_shift(count(m.hi_of(r)), effective_level(m, m.hi_of(r)) - level - 1);
      result = checked_add(lo, hi);
    }
    memo.emplace(r, result);
    return result;
  };
  std::uint64_t base = count(fam.root());
  if (m.semantics() == Semantics::bdd)
    base = checked_shift(base, std::min(effective_level(m, fam.root()), n));
  return base;
}

ExplicitFamily to_explicit(const Family& fam, std::uint64_t max_sets) {
  DiagramManager& m = fam.manager();
  if (m.var_count() > ExplicitFamily::max_universe)
    throw std::invalid_argument("universe too large for the explicit representation");
  std::uint64_t total;
  try {
    total = count_sets(fam);
  } catch (const std::overflow_error&) {
    throw std::length_error("family exceeds the enumeration cap");
  }
  if (total > max_sets) throw std::length_error("family exceeds the enumeration cap");

  const auto n = static_cast<std::uint32_t>(m.var_count());
  std::vector<std::uint64_t> masks;
  masks.reserve(static_cast<std::size_t>(total));
  std::function<void(NodeRef, std::uint32_t, std::uint64_t)> walk =
      [&](NodeRef r, std::uint32_t level, std::uint64_t mask) {
        if (r == bot_ref) return;
        if (level == n) {
          masks.push_back(mask);
          return;
        }
        std::uint32_t rl = effective_level(m, r);
        if (level < rl) {
          if (m.semantics() == Semantics::zdd) {
            walk(r, rl, mask);  // skipped levels mean absent elements
          } else {
            walk(r, level + 1, mask);  // skipped levels are unconstrained
            walk(r, level + 1, mask | (1ull << level));
          }
          return;
        }
        walk(m.lo_of(r), level + 1, mask);
        walk(m.hi_of(r), level + 1, mask | (1ull << level));
      };
  walk(fam.root(), 0, 0);
  return ExplicitFamily(m.order().names(), std::move(masks));
}

std::size_t node_count(const Family& fam) {
  DiagramManager& m = fam.manager();
  std::unordered_set<NodeRef> seen;
  std::vector<NodeRef> stack{fam.root()};
  while (!stack.empty()) {
    NodeRef r = stack.back();
    stack.pop_back();
    if (!seen.insert(r).second) continue;
    if (!m.is_terminal(r)) {
      stack.push_back(m.lo_of(r));
      stack.push_back(m.hi_of(r));
    }
  }
  return seen.size();
}

Family convert_semantics(const Family& fam, DiagramManager& target) {
  DiagramManager& src = fam.manager();
  if (!(target.order() == src.order()))
    throw std::invalid_argument("convert_semantics: variable orders differ");
  const auto n = static_cast<std::uint32_t>(src.var_count());

  std::unordered_map<std::uint64_t, NodeRef> memo;
  std::function<NodeRef(NodeRef, std::uint32_t)> convert = [&](NodeRef r,
                                                               std::uint32_t level) -> NodeRef {
    if (level == n) return r;  // terminals share handles across managers
    if (r == bot_ref) return bot_ref;
    std::uint64_t key = (static_cast<std::uint64_t>(r) << 32) | level;
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::uint32_t rl = effective_level(src, r);
    NodeRef result;
    if (level < rl) {
      NodeRef below = convert(r, level + 1);
      if (src.semantics() == Semantics::zdd)
        // absent in the source: explicit lo-only node when the target is bdd
        result = target.semantics() == Semantics::zdd ? below
                                                      : target.make_node(level, below, bot_ref);
      else
        // unconstrained in the source: explicit lo == hi node when the target is zdd
        result = target.semantics() == Semantics::bdd ? below
                                                      : target.make_node(level, below, below);
    } else {
      NodeRef lo = convert(src.lo_of(r), level + 1);
      NodeRef hi = convert(src.hi_of(r), level + 1);
      result = target.make_node(level, lo, hi);
    }
    memo.emplace(key, result);
    return result;
  };
  return Family(target, convert(fam.root(), 0));
}

std::string export_dot(const Family& fam) {
  DiagramManager& m = fam.manager();
  std::vector<NodeRef> reachable;
  {
    std::unordered_set<NodeRef> seen;
    std::vector<NodeRef> stack{fam.root()};
    while (!stack.empty()) {
      NodeRef r = stack.back();
      stack.pop_back();
      if (!seen.insert(r).second) continue;
      reachable.push_back(r);
      if (!m.is_terminal(r)) {
        stack.push_back(m.lo_of(r));
        stack.push_back(m.hi_of(r));
      }
    }
    std::sort(reachable.begin(), reachable.end());
  }
  std::ostringstream out;
  out << "digraph family {\n";
  for (NodeRef r : reachable) {
    if (r == bot_ref)
      out << "  n0 [label=\"⊥\", shape=box];\n";
    else if (r == top_ref)
      out << "  n1 [label=\"⊤\", shape=box];\n";
    else
      out << "  n" << r << " [label=\"" << m.order().name(m.level_of(r))
          << "\", shape=circle];\n";
  }
  for (NodeRef r : reachable) {
    if (m.is_terminal(r)) continue;
    out << "  n" << r << " -> n" << m.hi_of(r) << " [style=solid];\n";
    out << "  n" << r << " -> n" << m.lo_of(r) << " [style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

void validate_reduced(const Family& fam) {
  DiagramManager& m = fam.manager();
  struct TripleHash {
    std::size_t operator()(const std::tuple<std::uint32_t, NodeRef, NodeRef>& t) const noexcept {
      auto [l, a, b] = t;
      return hash_combine(hash_combine(std::hash<std::uint32_t>{}(l), a), b);
    }
  };
  std::unordered_set<std::tuple<std::uint32_t, NodeRef, NodeRef>, TripleHash> triples;
  std::unordered_set<NodeRef> seen;
  std::vector<NodeRef> stack{fam.root()};
  while (!stack.empty()) {
    NodeRef r = stack.back();
    stack.pop_back();
    if (!seen.insert(r).second) continue;
    if (m.is_terminal(r)) continue;
    std::uint32_t level = m.level_of(r);
    NodeRef lo = m.lo_of(r), hi = m.hi_of(r);
    if (level >= m.var_count()) throw std::logic_error("node level outside the order");
    if (level >= effective_level(m, lo) || level >= effective_level(m, hi))
      throw std::logic_error("ordering violated: child level not below parent");
    if (m.semantics() == Semantics::zdd && hi == bot_ref)
      throw std::logic_error("zero-suppression violated: node with hi = bot");
    if (m.semantics() == Semantics::bdd && lo == hi)
      throw std::logic_error("redundant test: node with lo == hi");
    if (!triples.insert({level, lo, hi}).second)
      throw std::logic_error("duplicate (level, lo, hi) triple");
    stack.push_back(lo);
    stack.push_back(hi);
  }
}

}  // namespace famdd
