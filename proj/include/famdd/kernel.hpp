#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "famdd/explicit_family.hpp"

namespace famdd {

// Dense node handle. Handles 0 and 1 are reserved for the two terminals and
// are shared by every manager.
using NodeRef = std::uint32_t;
inline constexpr NodeRef bot_ref = 0;  // the empty family (or constant false)
inline constexpr NodeRef top_ref = 1;  // the family {~} containing only the empty set (or constant true)

// Terminals carry a sentinel level larger than any variable level.
inline constexpr std::uint32_t terminal_level = 0xffffffffu;

// A manager interprets its diagrams under exactly one of these conventions:
//   zdd - a level skipped on an arc means the element is absent,
//         and no node has hi == bot (zero-suppression rule);
//   bdd - a skipped level means the element is unconstrained,
//         and no node has lo == hi (redundant-test rule).
enum class Semantics { zdd, bdd };

struct Node {
  std::uint32_t level;
  NodeRef lo;
  NodeRef hi;
};

// Bijection between element names and levels 0..n-1. Level 0 is the root end
// of the order; children always sit at strictly larger levels.
class VariableOrder {
public:
  explicit VariableOrder(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::uint32_t level) const;
  std::uint32_t level(std::string_view name) const;  // throws std::out_of_range
  bool contains(std::string_view name) const noexcept;

  bool operator==(const VariableOrder& other) const { return names_ == other.names_; }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> levels_;
};

// Node store with hash-consing. All nodes live in one arena indexed by
// NodeRef; the unique table guarantees one node per (level, lo, hi) triple,
// and make_node applies the semantics' reduction rule, so any diagram built
// through make_node is reduced and canonical: two roots are equal iff they
// denote the same family. Single-threaded by design; distinct managers are
// fully independent.
class DiagramManager {
public:
  DiagramManager(Semantics semantics, VariableOrder order);

  DiagramManager(const DiagramManager&) = delete;
  DiagramManager& operator=(const DiagramManager&) = delete;

  Semantics semantics() const noexcept { return semantics_; }
  const VariableOrder& order() const noexcept { return order_; }
  std::size_t var_count() const noexcept { return order_.size(); }

  // Returns the canonical node for (level, lo, hi), applying the reduction
  // rule. Rejects levels not strictly above both children.
  NodeRef make_node(std::uint32_t level, NodeRef lo, NodeRef hi);

  bool is_terminal(NodeRef r) const noexcept { return r <= top_ref; }
  std::uint32_t level_of(NodeRef r) const { return nodes_[check_ref(r)].level; }
  NodeRef lo_of(NodeRef r) const { return nodes_[check_internal(r)].lo; }
  NodeRef hi_of(NodeRef r) const { return nodes_[check_internal(r)].hi; }
  std::size_t store_size() const noexcept { return nodes_.size(); }

  // Operation memo, keyed (tag, a, b). Entries persist across top-level calls
  // until cleared; canonical handles make stale entries impossible.
  std::optional<NodeRef> cache_get(std::uint32_t tag, NodeRef a, NodeRef b) const;
  void cache_put(std::uint32_t tag, NodeRef a, NodeRef b, NodeRef result);
  void clear_caches();
  std::size_t cache_size() const noexcept { return memo_.size(); }

private:
  struct UniqueKey {
    std::uint32_t level;
    NodeRef lo, hi;
    bool operator==(const UniqueKey&) const = default;
  };
  struct UniqueKeyHash {
    std::size_t operator()(const UniqueKey& k) const noexcept;
  };
  struct MemoKey {
    std::uint32_t tag;
    NodeRef a, b;
    bool operator==(const MemoKey&) const = default;
  };
  struct MemoKeyHash {
    std::size_t operator()(const MemoKey& k) const noexcept;
  };

  NodeRef check_ref(NodeRef r) const;
  NodeRef check_internal(NodeRef r) const;

  Semantics semantics_;
  VariableOrder order_;
  std::vector<Node> nodes_;
  std::unordered_map<UniqueKey, NodeRef, UniqueKeyHash> unique_;
  std::unordered_map<MemoKey, NodeRef, MemoKeyHash> memo_;
};

// A root handle tied to its manager. Equality is root equality within one
// manager, which by canonicity is semantic equality of the families.
class Family {
public:
  Family(DiagramManager& manager, NodeRef root);

  DiagramManager& manager() const noexcept { return *manager_; }
  NodeRef root() const noexcept { return root_; }

  friend bool operator==(const Family& a, const Family& b) {
    return a.manager_ == b.manager_ && a.root_ == b.root_;
  }

private:
  DiagramManager* manager_;
  NodeRef root_;
};

// Builds the canonical diagram for an explicit family. Every universe element
// must be known to the manager's order. The result does not depend on the
// iteration order of the input sets.
Family from_explicit(DiagramManager&, const ExplicitFamily&);

inline constexpr std::uint64_t default_set_cap = 1ull << 20;

// Enumerates the family. Throws std::length_error if it holds more than
// max_sets sets (desk-scale guard), and std::invalid_argument if the
// manager's universe does not fit the explicit representation.
ExplicitFamily to_explicit(const Family&, std::uint64_t max_sets = default_set_cap);

// Number of nodes reachable from the root, terminals included.
std::size_t node_count(const Family&);

// Number of sets in the family. Throws std::overflow_error if the count does
// not fit 64 bits; it is never silently wrapped.
std::uint64_t count_sets(const Family&);

// Rebuilds the family in the target manager under the target's semantics,
// inserting or suppressing skipped-level nodes level by level (never by
// enumeration). The target must share the source's variable order.
Family convert_semantics(const Family&, DiagramManager& target);

// GraphViz dump: internal nodes labelled with their element name, hi-arcs
// solid, lo-arcs dashed, terminals as boxes.
std::string export_dot(const Family&);

// Structural audit used by tests: walks the reachable diagram and throws
// std::logic_error on any violation of the ordering or reduction rules or on
// a duplicated (level, lo, hi) triple.
void validate_reduced(const Family&);

}  // namespace famdd
