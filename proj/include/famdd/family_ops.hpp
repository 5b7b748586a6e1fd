#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "famdd/kernel.hpp"

namespace famdd {

// The operation vocabulary. The first fifteen are binary, the next four
// unary; condition additionally takes two element sets.
enum class OpKind {
  set_union,
  set_intersection,
  set_difference,
  symmetric_difference,
  join,
  disjoint_join,
  joint_join,
  meet,
  delta,
  quotient,
  remainder,
  restrict,
  permit,
  nonsuperset,
  nonsubset,
  maximal,
  minimal,
  minimal_hitting,
  closure,
  condition,
};

inline constexpr OpKind all_op_kinds[] = {
    OpKind::set_union,   OpKind::set_intersection, OpKind::set_difference,
    OpKind::symmetric_difference, OpKind::join,    OpKind::disjoint_join,
    OpKind::joint_join,  OpKind::meet,             OpKind::delta,
    OpKind::quotient,    OpKind::remainder,        OpKind::restrict,
    OpKind::permit,      OpKind::nonsuperset,      OpKind::nonsubset,
    OpKind::maximal,     OpKind::minimal,          OpKind::minimal_hitting,
    OpKind::closure,     OpKind::condition,
};

std::string_view op_name(OpKind);
std::optional<OpKind> op_from_name(std::string_view);
bool op_is_binary(OpKind);  // false for the unary ops and for condition
bool op_is_unary(OpKind);

// All operations below require both operands to live in the same manager and
// the manager to use zdd semantics; they return reduced canonical results in
// that manager. Each is a memoized recursion (or a composition of them) whose
// intermediate results share the manager's unique table and memo.

Family set_union(const Family&, const Family&);
Family set_intersection(const Family&, const Family&);
Family set_difference(const Family&, const Family&);
Family symmetric_difference(const Family&, const Family&);

// All unions F | G with F from f and G from g.
Family join(const Family& f, const Family& g);
// As join, but only pairs with F & G empty.
Family disjoint_join(const Family& f, const Family& g);
// As join, but only pairs with F & G nonempty.
Family joint_join(const Family& f, const Family& g);
// All intersections F & G.
Family meet(const Family& f, const Family& g);
// All symmetric differences F ^ G.
Family delta(const Family& f, const Family& g);

// { S : for every G in g, S and G are disjoint and S | G is in f }.
// The divisor must be nonempty.
Family quotient(const Family& f, const Family& g);
// f minus join(g, quotient(f, g)).
Family remainder(const Family& f, const Family& g);

// Members of f that contain some member of g.
Family restrict(const Family& f, const Family& g);
// Members of f contained in some member of g.
Family permit(const Family& f, const Family& g);
// Members of f containing no member of g.
Family nonsuperset(const Family& f, const Family& g);
// Members of f contained in no member of g.
Family nonsubset(const Family& f, const Family& g);

// Members of f maximal (resp. minimal) under set inclusion within f.
Family maximal(const Family&);
Family minimal(const Family&);

// Minimal sets over the manager universe meeting every member of f.
// minimal_hitting_sets({}) is {~}: with nothing to hit, the empty set is the
// unique minimal hitting set.
Family minimal_hitting_sets(const Family&);

// Least superfamily of f closed under pairwise intersection. Only nonempty
// subfamilies contribute intersections, so closure({}) is {} and a lone
// member closes to itself.
Family closure(const Family&);

// Sets S with required ~ S in f, S disjoint from both argument sets, reported
// with the required elements stripped. The two element sets must be disjoint
// and known to the manager's order.
Family condition(const Family&, std::span<const std::string> required,
                 std::span<const std::string> excluded);

// Chain of lo == hi nodes: every subset of the given elements.
Family powerset(DiagramManager&, std::span<const std::string> elements);

Family apply_binary(OpKind, const Family&, const Family&);
Family apply_unary(OpKind, const Family&);

}  // namespace famdd
