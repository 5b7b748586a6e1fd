#include "famdd/family_ops.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace famdd {

namespace {

// Memo tags. Compositions (remainder, closure, condition) reuse the tags of
// the recursions they are built from; condition's elimination pass depends on
// the required set and therefore uses a per-call memo instead.
enum : std::uint32_t {
  tag_union = 1,
  tag_intersection,
  tag_difference,
  tag_symdiff,
  tag_join,
  tag_disjoint_join,
  tag_joint_join,
  tag_meet,
  tag_delta,
  tag_quotient,
  tag_restrict,
  tag_permit,
  tag_nonsuperset,
  tag_nonsubset,
  tag_maximal,
  tag_minimal,
  tag_hitting,
};

DiagramManager& check_unary(const Family& f, const char* what) {
  DiagramManager& m = f.manager();
  if (m.semantics() != Semantics::zdd)
    throw std::invalid_argument(std::string(what) + ": family algebra requires zdd semantics");
  return m;
}

DiagramManager& check_pair(const Family& f, const Family& g, const char* what) {
  if (&f.manager() != &g.manager())
    throw std::invalid_argument(std::string(what) + ": operands belong to different managers");
  return check_unary(f, what);
}

// The recursions below branch on root levels; terminals carry the sentinel
// level, so a terminal never wins the level comparison against an internal
// node. Commutative ops order their operands before the memo lookup.

NodeRef union_rec(DiagramManager& m, NodeRef f, NodeRef g) {
  if (f == g) return f;
  if (f == bot_ref) return g;
  if (g == bot_ref) return f;
  if (f > g) std::swap(f, g);
  if (auto hit = m.cache_get(tag_union, f, g)) return *hit;
  std::uint32_t lf = m.level_of(f), lg = m.level_of(g);
  NodeRef r;
  if (lf < lg)
    r = m.make_node(lf, union_rec(m, m.lo_of(f), g), m.hi_of(f));
  else if (lg < lf)
    r = m.make_node(lg, union_rec(m, f, m.lo_of(g)), m.hi_of(g));
  else
    r = m.make_node(lf, union_rec(m, m.lo_of(f), m.lo_of(g)),
                    union_rec(m, m.hi_of(f), m.hi_of(g)));
  m.cache_put(tag_union, f, g, r);
  return r;
}

NodeRef intersection_rec(DiagramManager& m, NodeRef f, NodeRef g) {
  if (f == g) return f;
  if (f == bot_ref || g == bot_ref) return bot_ref;
  if (f > g) std::swap(f, g);
  if (auto hit = m.cache_get(tag_intersection, f, g)) return *hit;
  std::uint32_t lf = m.level_of(f), lg = m.level_of(g);
  NodeRef r;
  if (lf < lg)
    r = intersection_rec(m, m.lo_of(f), g);
  else if (lg < lf)
    r = intersection_rec(m, f, m.lo_of(g));
  else
    r = m.make_node(lf, intersection_rec(m, m.lo_of(f), m.lo_of(g)),
                    intersection_rec(m, m.hi_of(f), m.hi_of(g)));
  m.cache_put(tag_intersection, f, g, r);
  return r;
}

NodeRef difference_rec(DiagramManager& m, NodeRef f, NodeRef g) {
  if (f == bot_ref || f == g) return bot_ref;
  if (g == bot_ref) return f;
  if (auto hit = m.cache_get(tag_difference, f, g)) return *hit;
  std::uint32_t lf = m.level_of(f), lg = m.level_of(g);
  NodeRef r;
  if (lf < lg)
    r = m.make_node(lf, difference_rec(m, m.lo_of(f), g), m.hi_of(f));
  else if (lg < lf)
    r = difference_rec(m, f, m.lo_of(g));
  else
    r = m.make_node(lf, difference_rec(m, m.lo_of(f), m.lo_of(g)),
                    difference_rec(m, m.hi_of(f), m.hi_of(g)));
  m.cache_put(tag_difference, f, g, r);
  return r;
}

NodeRef symdiff_rec(DiagramManager& m, NodeRef f, NodeRef g) {
  if (f == g) return bot_ref;
  if (f == bot_ref) return g;
  if (g == bot_ref) return f;
  if (f > g) std::swap(f, g);
  if (auto hit = m.cache_get(tag_symdiff, f, g)) return *hit;
  std::uint32_t lf = m.level_of(f), lg = m.level_of(g);
  NodeRef r;
  if (lf < lg)
    r = m.make_node(lf, symdiff_rec(m, m.lo_of(f), g), m.hi_of(f));
  else if (lg < lf)
    r = m.make_node(lg, symdiff_rec(m, f, m.lo_of(g)), m.hi_of(g));
  else
    r = m.make_node(lf, symdiff_rec(m, m.lo_of(f), m.lo_of(g)),
                    symdiff_rec(m, m.hi_of(f), m.hi_of(g)));
  m.cache_put(tag_symdiff, f, g, r);
  return r;
}

NodeRef join_rec(DiagramManager& m, NodeRef f, NodeRef g) {
  if (f == bot_ref || g == bot_ref) return bot_ref;
  if (f == top_ref) return g;
  if (g == top_ref) return f;
  if (f > g) std::swap(f, g);
  if (auto hit = m.cache_get(tag_join, f, g)) return *hit;
  std::uint32_t lf = m.level_of(f), lg = m.level_of(g);
  NodeRef r;
  if (lf < lg) {
    r = m.make_node(lf, join_rec(m, m.lo_of(f), g), join_rec(m, m.hi_of(f), g));
  } else if (lg < lf) {
    r = m.make_node(lg, join_rec(m, f, m.lo_of(g)), join_rec(m, f, m.hi_of(g)));
  } else {
    // The element appears when either side supplies it, so the hi part
    // collects the three mixed products.
    NodeRef lolo = join_rec(m, m.lo_of(f), m.lo_of(g));
    NodeRef mixed = union_rec(m, union_rec(m, join_rec(m, m.lo_of(f), m.hi_of(g)),
                                           join_rec(m, m.hi_of(f), m.lo_of(g))),
                              join_rec(m, m.hi_of(f), m.hi_of(g)));
    r = m.make_node(lf, lolo, mixed);
  }
  m.cache_put(tag_join, f, g, r);
  return r;
}

NodeRef disjoint_join_rec(DiagramManager& m, NodeRef f, NodeRef g) {
  if (f == bot_ref || g == bot_ref) return bot_ref;
  if (f == top_ref) return g;
  if (g == top_ref) return f;
  if (f > g) std::swap(f, g);
  if (auto hit = m.cache_get(tag_disjoint_join, f, g)) return *hit;
  std::uint32_t lf = m.level_of(f), lg = m.level_of(g);
  NodeRef r;
  if (lf < lg) {
    r = m.make_node(lf, disjoint_join_rec(m, m.lo_of(f), g),
                    disjoint_join_rec(m, m.hi_of(f), g));
  } else if (lg < lf) {
    r = m.make_node(lg, disjoint_join_rec(m, f, m.lo_of(g)),
                    disjoint_join_rec(m, f, m.hi_of(g)));
  } else {
    // hi x hi pairs share the element and are never disjoint.
    NodeRef mixed = union_rec(m, disjoint_join_rec(m, m.lo_of(f), m.hi_of(g)),
                              disjoint_join_rec(m, m.hi_of(f), m.lo_of(g)));
    r = m.make_node(lf, disjoint_join_rec(m, m.lo_of(f), m.lo_of(g)), mixed);
  }
  m.cache_put(tag_disjoint_join, f, g, r);
  return r;
}

NodeRef joint_join_rec(DiagramManager& m, NodeRef f, NodeRef g) {
  if (f == bot_ref || g == bot_ref) return bot_ref;
  // The empty set never overlaps anything.
  if (f == top_ref || g == top_ref) return bot_ref;
  if (f > g) std::swap(f, g);
  if (auto hit = m.cache_get(tag_joint_join, f, g)) return *hit;
  std::uint32_t lf = m.level_of(f), lg = m.level_of(g);
  NodeRef r;
  if (lf < lg) {
    r = m.make_node(lf, joint_join_rec(m, m.lo_of(f), g), joint_join_rec(m, m.hi_of(f), g));
  } else if (lg < lf) {
    r = m.make_node(lg, joint_join_rec(m, f, m.lo_of(g)), joint_join_rec(m, f, m.hi_of(g)));
  } else {
    // hi x hi pairs already share this element, so they contribute a full join.
    NodeRef mixed = union_rec(m, union_rec(m, joint_join_rec(m, m.lo_of(f), m.hi_of(g)),
                                           joint_join_rec(m, m.hi_of(f), m.lo_of(g))),
                              join_rec(m, m.hi_of(f), m.hi_of(g)));
    r = m.make_node(lf, joint_join_rec(m, m.lo_of(f), m.lo_of(g)), mixed);
  }
  m.cache_put(tag_joint_join, f, g, r);
  return r;
}

NodeRef meet_rec(DiagramManager& m, NodeRef f, NodeRef g) {
  if (f == bot_ref || g == bot_ref) return bot_ref;
  if (f == top_ref || g == top_ref) return top_ref;
  if (f > g) std::swap(f, g);
  if (auto hit = m.cache_get(tag_meet, f, g)) return *hit;
  std::uint32_t lf = m.level_of(f), lg = m.level_of(g);
  NodeRef r;
  if (lf < lg) {
    // The element is missing from every set on the g side, so it never
    // survives an intersection.
    r = union_rec(m, meet_rec(m, m.lo_of(f), g), meet_rec(m, m.hi_of(f), g));
  } else if (lg < lf) {
    r = union_rec(m, meet_rec(m, f, m.lo_of(g)), meet_rec(m, f, m.hi_of(g)));
  } else {
    NodeRef lo = union_rec(m, union_rec(m, meet_rec(m, m.lo_of(f), m.lo_of(g)),
                                        meet_rec(m, m.lo_of(f), m.hi_of(g))),
                           meet_rec(m, m.hi_of(f), m.lo_of(g)));
    r = m.make_node(lf, lo, meet_rec(m, m.hi_of(f), m.hi_of(g)));
  }
  m.cache_put(tag_meet, f, g, r);
  return r;
}

NodeRef delta_rec(DiagramManager& m, NodeRef f, NodeRef g) {
  if (f == bot_ref || g == bot_ref) return bot_ref;
  if (f == top_ref) return g;
  if (g == top_ref) return f;
  if (f > g) std::swap(f, g);
  if (auto hit = m.cache_get(tag_delta, f, g)) return *hit;
  std::uint32_t lf = m.level_of(f), lg = m.level_of(g);
  NodeRef r;
  if (lf < lg) {
    r = m.make_node(lf, delta_rec(m, m.lo_of(f), g), delta_rec(m, m.hi_of(f), g));
  } else if (lg < lf) {
    r = m.make_node(lg, delta_rec(m, f, m.lo_of(g)), delta_rec(m, f, m.hi_of(g)));
  } else {
    // hi x hi cancels the shared element, lo x hi and hi x lo keep it.
    NodeRef lo = union_rec(m, delta_rec(m, m.lo_of(f), m.lo_of(g)),
                           delta_rec(m, m.hi_of(f), m.hi_of(g)));
    NodeRef hi = union_rec(m, delta_rec(m, m.lo_of(f), m.hi_of(g)),
                           delta_rec(m, m.hi_of(f), m.lo_of(g)));
    r = m.make_node(lf, lo, hi);
  }
  m.cache_put(tag_delta, f, g, r);
  return r;
}

NodeRef quotient_rec(DiagramManager& m, NodeRef f, NodeRef g) {
  if (g == top_ref) return f;
  if (f <= top_ref) return bot_ref;  // a nonempty divisor member cannot fit into {} or {~}
  if (auto hit = m.cache_get(tag_quotient, f, g)) return *hit;
  std::uint32_t lf = m.level_of(f), lg = m.level_of(g);
  NodeRef r;
  if (lg < lf) {
    // g's top element appears in no member of f, so nothing divides.
    r = bot_ref;
  } else if (lf < lg) {
    r = m.make_node(lf, quotient_rec(m, m.lo_of(f), g), quotient_rec(m, m.hi_of(f), g));
  } else {
    r = quotient_rec(m, m.hi_of(f), m.hi_of(g));
    if (m.lo_of(g) != bot_ref && r != bot_ref)
      r = intersection_rec(m, r, quotient_rec(m, m.lo_of(f), m.lo_of(g)));
  }
  m.cache_put(tag_quotient, f, g, r);
  return r;
}

NodeRef restrict_rec(DiagramManager& m, NodeRef f, NodeRef g) {
  if (f == bot_ref || g == bot_ref) return bot_ref;
  if (g == top_ref) return f;  // every set contains {}
  if (auto hit = m.cache_get(tag_restrict, f, g)) return *hit;
  std::uint32_t lf = m.level_of(f), lg = m.level_of(g);
  NodeRef r;
  if (lg < lf) {
    // Witnesses carrying g's top element cannot fit inside members of f.
    r = restrict_rec(m, f, m.lo_of(g));
  } else if (lf < lg) {
    r = m.make_node(lf, restrict_rec(m, m.lo_of(f), g), restrict_rec(m, m.hi_of(f), g));
  } else {
    NodeRef hi = restrict_rec(m, m.hi_of(f), union_rec(m, m.lo_of(g), m.hi_of(g)));
    r = m.make_node(lf, restrict_rec(m, m.lo_of(f), m.lo_of(g)), hi);
  }
  m.cache_put(tag_restrict, f, g, r);
  return r;
}

NodeRef permit_rec(DiagramManager& m, NodeRef f, NodeRef g) {
  if (f == bot_ref || g == bot_ref) return bot_ref;
  if (f == top_ref) return top_ref;  // {} fits inside any witness
  if (auto hit = m.cache_get(tag_permit, f, g)) return *hit;
  std::uint32_t lf = m.level_of(f), lg = m.level_of(g);
  NodeRef r;
  if (lf < lg) {
    // f's top element appears in no witness, so its hi side drops out.
    r = permit_rec(m, m.lo_of(f), g);
  } else if (lg < lf) {
    r = permit_rec(m, f, union_rec(m, m.lo_of(g), m.hi_of(g)));
  } else {
    NodeRef lo = permit_rec(m, m.lo_of(f), union_rec(m, m.lo_of(g), m.hi_of(g)));
    r = m.make_node(lf, lo, permit_rec(m, m.hi_of(f), m.hi_of(g)));
  }
  m.cache_put(tag_permit, f, g, r);
  return r;
}

NodeRef nonsuperset_rec(DiagramManager& m, NodeRef f, NodeRef g) {
  if (f == bot_ref || g == top_ref) return bot_ref;
  if (g == bot_ref) return f;
  if (auto hit = m.cache_get(tag_nonsuperset, f, g)) return *hit;
  std::uint32_t lf = m.level_of(f), lg = m.level_of(g);
  NodeRef r;
  if (lg < lf) {
    r = nonsuperset_rec(m, f, m.lo_of(g));
  } else if (lf < lg) {
    r = m.make_node(lf, nonsuperset_rec(m, m.lo_of(f), g), nonsuperset_rec(m, m.hi_of(f), g));
  } else {
    NodeRef hi = nonsuperset_rec(m, m.hi_of(f), union_rec(m, m.lo_of(g), m.hi_of(g)));
    r = m.make_node(lf, nonsuperset_rec(m, m.lo_of(f), m.lo_of(g)), hi);
  }
  m.cache_put(tag_nonsuperset, f, g, r);
  return r;
}

NodeRef nonsubset_rec(DiagramManager& m, NodeRef f, NodeRef g) {
  if (f == bot_ref) return bot_ref;
  if (g == bot_ref) return f;
  if (f == top_ref) return bot_ref;  // {} is a subset of every witness
  if (auto hit = m.cache_get(tag_nonsubset, f, g)) return *hit;
  std::uint32_t lf = m.level_of(f), lg = m.level_of(g);
  NodeRef r;
  if (lf < lg) {
    // Sets carrying f's top element cannot hide inside any witness.
    r = m.make_node(lf, nonsubset_rec(m, m.lo_of(f), g), m.hi_of(f));
  } else if (lg < lf) {
    r = nonsubset_rec(m, f, union_rec(m, m.lo_of(g), m.hi_of(g)));
  } else {
    NodeRef lo = nonsubset_rec(m, m.lo_of(f), union_rec(m, m.lo_of(g), m.hi_of(g)));
    r = m.make_node(lf, lo, nonsubset_rec(m, m.hi_of(f), m.hi_of(g)));
  }
  m.cache_put(tag_nonsubset, f, g, r);
  return r;
}

NodeRef maximal_rec(DiagramManager& m, NodeRef f) {
  if (m.is_terminal(f)) return f;
  if (auto hit = m.cache_get(tag_maximal, f, bot_ref)) return *hit;
  NodeRef hi = maximal_rec(m, m.hi_of(f));
  // A lo-side survivor must additionally avoid being covered by a hi-side set.
  NodeRef lo = nonsubset_rec(m, maximal_rec(m, m.lo_of(f)), hi);
  NodeRef r = m.make_node(m.level_of(f), lo, hi);
  m.cache_put(tag_maximal, f, bot_ref, r);
  return r;
}

NodeRef minimal_rec(DiagramManager& m, NodeRef f) {
  if (m.is_terminal(f)) return f;
  if (auto hit = m.cache_get(tag_minimal, f, bot_ref)) return *hit;
  NodeRef lo = minimal_rec(m, m.lo_of(f));
  // A hi-side survivor must not contain a lo-side set.
  NodeRef hi = nonsuperset_rec(m, minimal_rec(m, m.hi_of(f)), lo);
  NodeRef r = m.make_node(m.level_of(f), lo, hi);
  m.cache_put(tag_minimal, f, bot_ref, r);
  return r;
}

NodeRef hitting_rec(DiagramManager& m, NodeRef f) {
  if (f == bot_ref) return top_ref;  // nothing to hit
  if (f == top_ref) return bot_ref;  // the empty set cannot be hit
  if (auto hit = m.cache_get(tag_hitting, f, bot_ref)) return *hit;
  NodeRef lo_part = m.lo_of(f), hi_part = m.hi_of(f);
  // Without the element, both halves of f must still be hit; with it, the
  // hi half is already covered, and minimality demands the rest not be.
  NodeRef without = hitting_rec(m, union_rec(m, lo_part, hi_part));
  NodeRef with = nonsuperset_rec(m, hitting_rec(m, lo_part), hitting_rec(m, hi_part));
  NodeRef r = m.make_node(m.level_of(f), without, with);
  m.cache_put(tag_hitting, f, bot_ref, r);
  return r;
}

}  // namespace

std::string_view op_name(OpKind op) {
  switch (op) {
    case OpKind::set_union: return "union";
    case OpKind::set_intersection: return "intersection";
    case OpKind::set_difference: return "difference";
    case OpKind::symmetric_difference: return "symdiff";
    case OpKind::join: return "join";
    case OpKind::disjoint_join: return "disjoint_join";
    case OpKind::joint_join: return "joint_join";
    case OpKind::meet: return "meet";
    case OpKind::delta: return "delta";
    case OpKind::quotient: return "quotient";
    case OpKind::remainder: return "remainder";
    case OpKind::restrict: return "restrict";
    case OpKind::permit: return "permit";
    case OpKind::nonsuperset: return "nonsuperset";
    case OpKind::nonsubset: return "nonsubset";
    case OpKind::maximal: return "maximal";
    case OpKind::minimal: return "minimal";
    case OpKind::minimal_hitting: return "hitting";
    case OpKind::closure: return "closure";
    case OpKind::condition: return "condition";
  }
  throw std::invalid_argument("unknown op kind");
}

std::optional<OpKind> op_from_name(std::string_view name) {
  for (OpKind op : all_op_kinds)
    if (op_name(op) == name) return op;
  return std::nullopt;
}

bool op_is_unary(OpKind op) {
  return op == OpKind::maximal || op == OpKind::minimal || op == OpKind::minimal_hitting ||
         op == OpKind::closure;
}

bool op_is_binary(OpKind op) { return !op_is_unary(op) && op != OpKind::condition; }

Family set_union(const Family& f, const Family& g) {
  DiagramManager& m = check_pair(f, g, "union");
  return Family(m, union_rec(m, f.root(), g.root()));
}

Family set_intersection(const Family& f, const Family& g) {
  DiagramManager& m = check_pair(f, g, "intersection");
  return Family(m, intersection_rec(m, f.root(), g.root()));
}

Family set_difference(const Family& f, const Family& g) {
  DiagramManager& m = check_pair(f, g, "difference");
  return Family(m, difference_rec(m, f.root(), g.root()));
}

Family symmetric_difference(const Family& f, const Family& g) {
  DiagramManager& m = check_pair(f, g, "symmetric_difference");
  return Family(m, symdiff_rec(m, f.root(), g.root()));
}

Family join(const Family& f, const Family& g) {
  DiagramManager& m = check_pair(f, g, "join");
  return Family(m, join_rec(m, f.root(), g.root()));
}

Family disjoint_join(const Family& f, const Family& g) {
  DiagramManager& m = check_pair(f, g, "disjoint_join");
  return Family(m, disjoint_join_rec(m, f.root(), g.root()));
}

Family joint_join(const Family& f, const Family& g) {
  DiagramManager& m = check_pair(f, g, "joint_join");
  return Family(m, joint_join_rec(m, f.root(), g.root()));
}

Family meet(const Family& f, const Family& g) {
  DiagramManager& m = check_pair(f, g, "meet");
  return Family(m, meet_rec(m, f.root(), g.root()));
}

Family delta(const Family& f, const Family& g) {
  DiagramManager& m = check_pair(f, g, "delta");
  return Family(m, delta_rec(m, f.root(), g.root()));
}

Family quotient(const Family& f, const Family& g) {
  DiagramManager& m = check_pair(f, g, "quotient");
  if (g.root() == bot_ref) throw std::invalid_argument("quotient: empty divisor");
  return Family(m, quotient_rec(m, f.root(), g.root()));
}

Family remainder(const Family& f, const Family& g) {
  DiagramManager& m = check_pair(f, g, "remainder");
  if (g.root() == bot_ref) throw std::invalid_argument("remainder: empty divisor");
  NodeRef q = quotient_rec(m, f.root(), g.root());
  return Family(m, difference_rec(m, f.root(), join_rec(m, g.root(), q)));
}

Family restrict(const Family& f, const Family& g) {
  DiagramManager& m = check_pair(f, g, "restrict");
  return Family(m, restrict_rec(m, f.root(), g.root()));
}

Family permit(const Family& f, const Family& g) {
  DiagramManager& m = check_pair(f, g, "permit");
  return Family(m, permit_rec(m, f.root(), g.root()));
}

Family nonsuperset(const Family& f, const Family& g) {
  DiagramManager& m = check_pair(f, g, "nonsuperset");
  return Family(m, nonsuperset_rec(m, f.root(), g.root()));
}

Family nonsubset(const Family& f, const Family& g) {
  DiagramManager& m = check_pair(f, g, "nonsubset");
  return Family(m, nonsubset_rec(m, f.root(), g.root()));
}

Family maximal(const Family& f) {
  DiagramManager& m = check_unary(f, "maximal");
  return Family(m, maximal_rec(m, f.root()));
}

Family minimal(const Family& f) {
  DiagramManager& m = check_unary(f, "minimal");
  return Family(m, minimal_rec(m, f.root()));
}

Family minimal_hitting_sets(const Family& f) {
  DiagramManager& m = check_unary(f, "minimal_hitting_sets");
  return Family(m, hitting_rec(m, f.root()));
}

Family closure(const Family& f) {
  DiagramManager& m = check_unary(f, "closure");
  // Fixpoint of g -> g | meet(g, f). Meeting against the fixed seed instead
  // of g itself reaches the same closure with far smaller memo pressure;
  // every new member is an intersection of one more seed set.
  NodeRef g = f.root();
  for (;;) {
    NodeRef next = union_rec(m, g, meet_rec(m, g, f.root()));
    if (next == g) break;
    g = next;
  }
  return Family(m, g);
}

Family condition(const Family& f, std::span<const std::string> required,
                 std::span<const std::string> excluded) {
  DiagramManager& m = check_unary(f, "condition");
  const auto n = static_cast<std::uint32_t>(m.var_count());
  std::vector<char> is_required(n, 0), is_excluded(n, 0);
  for (const auto& name : required) is_required[m.order().level(name)] = 1;
  for (const auto& name : excluded) {
    std::uint32_t level = m.order().level(name);
    if (is_required[level])
      throw std::invalid_argument("condition: element required and excluded: " + name);
    is_excluded[level] = 1;
  }

  // Membership filter: required levels get a lo = bot node, excluded levels
  // get no node at all, free levels stay unconstrained.
  NodeRef filter = top_ref;
  for (std::uint32_t level = n; level-- > 0;) {
    if (is_required[level])
      filter = m.make_node(level, bot_ref, filter);
    else if (!is_excluded[level])
      filter = m.make_node(level, filter, filter);
  }
  NodeRef kept = intersection_rec(m, f.root(), filter);

  // Strip the required elements: each surviving node on a required level has
  // lo = bot, so incoming arcs are redirected to its hi child.
  std::unordered_map<NodeRef, NodeRef> memo;
  std::function<NodeRef(NodeRef)> strip = [&](NodeRef r) -> NodeRef {
    if (m.is_terminal(r)) return r;
    auto it = memo.find(r);
    if (it != memo.end()) return it->second;
    NodeRef result;
    if (is_required[m.level_of(r)])
      result = strip(m.hi_of(r));
    else
      result = m.make_node(m.level_of(r), strip(m.lo_of(r)), strip(m.hi_of(r)));
    memo.emplace(r, result);
    return result;
  };
  return Family(m, strip(kept));
}

Family powerset(DiagramManager& m, std::span<const std::string> elements) {
  std::vector<std::uint32_t> levels;
  levels.reserve(elements.size());
  for (const auto& name : elements) levels.push_back(m.order().level(name));
  std::sort(levels.begin(), levels.end());
  NodeRef r = top_ref;
  for (std::size_t i = levels.size(); i-- > 0;) r = m.make_node(levels[i], r, r);
  return Family(m, r);
}

Family apply_binary(OpKind op, const Family& f, const Family& g) {
  switch (op) {
    case OpKind::set_union: return set_union(f, g);
    case OpKind::set_intersection: return set_intersection(f, g);
    case OpKind::set_difference: return set_difference(f, g);
    case OpKind::symmetric_difference: return symmetric_difference(f, g);
    case OpKind::join: return join(f, g);
    case OpKind::disjoint_join: return disjoint_join(f, g);
    case OpKind::joint_join: return joint_join(f, g);
    case OpKind::meet: return meet(f, g);
    case OpKind::delta: return delta(f, g);
    case OpKind::quotient: return quotient(f, g);
    case OpKind::remainder: return remainder(f, g);
    case OpKind::restrict: return restrict(f, g);
    case OpKind::permit: return permit(f, g);
    case OpKind::nonsuperset: return nonsuperset(f, g);
    case OpKind::nonsubset: return nonsubset(f, g);
    default: throw std::invalid_argument("apply_binary: op is not binary");
  }
}

Family apply_unary(OpKind op, const Family& f) {
  switch (op) {
    case OpKind::maximal: return maximal(f);
    case OpKind::minimal: return minimal(f);
    case OpKind::minimal_hitting: return minimal_hitting_sets(f);
    case OpKind::closure: return closure(f);
    default: throw std::invalid_argument("apply_unary: op is not unary");
  }
}

}  // namespace famdd
