#pragma once
// Structured family generators for the scaling experiments. Two universes
// recur throughout: a weight universe y1..ym whose slice families tie set
// size to membership of a selected element, and an m x m grid universe
// y1..y(m*m), read row-major, whose families describe line constraints
// (line k <= m is row k, line m+c is column c). Grid instances add tag
// elements x1..x2m (one per line) and sometimes a marker element w.
//
// All generators build diagrams bottom-up with level-wise dynamic programs
// keyed on order-independent state, so they work under any variable order
// that contains the required element names.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "famdd/family_ops.hpp"
#include "famdd/kernel.hpp"

namespace famdd {

enum class BaseFamilyKind {
  hwb_slice,                       // size-k sets over y1..ym that contain y_k
  hwb_slice_complement,            // every other subset of y1..ym
  hidden_weighted_bit,             // union of all slices
  hidden_weighted_bit_complement,  // subsets in no slice
  one_per_line,                    // grid sets meeting line k exactly once
  permutation_matrices,            // sets meeting every line exactly once
  m_subsets,                       // all m-cell grid sets
  m_subsets_off_line,              // m-cell sets not meeting line k exactly once
  powerset_family,                 // all subsets of x1..xm
  singleton_list,                  // {x1}, ..., {xm}
  line_cells,                      // the single set of cells on line k
  closure_seed,                    // the single seed set for row k, column l
};

inline constexpr BaseFamilyKind all_base_family_kinds[] = {
    BaseFamilyKind::hwb_slice,
    BaseFamilyKind::hwb_slice_complement,
    BaseFamilyKind::hidden_weighted_bit,
    BaseFamilyKind::hidden_weighted_bit_complement,
    BaseFamilyKind::one_per_line,
    BaseFamilyKind::permutation_matrices,
    BaseFamilyKind::m_subsets,
    BaseFamilyKind::m_subsets_off_line,
    BaseFamilyKind::powerset_family,
    BaseFamilyKind::singleton_list,
    BaseFamilyKind::line_cells,
    BaseFamilyKind::closure_seed,
};

std::string_view base_family_name(BaseFamilyKind);
std::optional<BaseFamilyKind> base_family_from_name(std::string_view);

// {prefix}{from} .. {prefix}{to}, inclusive.
std::vector<std::string> name_range(std::string_view prefix, std::size_t from, std::size_t to);

// The smallest universe a standalone build of this family kind needs.
std::vector<std::string> universe_for_family(BaseFamilyKind, std::size_t m);

// k is the slice size or line index (1-based) where the kind uses one;
// closure_seed takes the row k and column l. The manager's order must
// contain every element the family touches.
Family gen_base_family(DiagramManager&, BaseFamilyKind, std::size_t m, std::size_t k = 0,
                       std::size_t l = 0);

// Small building blocks shared by the generators and the experiment setups.
Family single_set_family(DiagramManager&, std::span<const std::string> names);
Family singletons_family(DiagramManager&, std::span<const std::string> names);
Family exact_cardinality_family(DiagramManager&, std::span<const std::string> names,
                                std::size_t k);

// Operations with a scaling instance, split by which input structure drives
// them: the weighted-slice inputs or the grid/permutation inputs.
bool has_scaling_instance(OpKind);
bool is_hwb_based(OpKind);
bool is_permutation_based(OpKind);

// Largest m the blow-up sweep will accept for this op's instances.
std::size_t blowup_m_cap(OpKind);

// Natural element order for the op's instance at scale m.
std::vector<std::string> universe_for_op(OpKind, std::size_t m);

// One ready-to-run instance: operands built over a fresh manager, plus the
// independently constructed expected result where a closed form exists.
// Closure has none, and minimal_hitting only for m <= 2; those outputs are
// checked through the identity "output meets the m-cell sets in exactly the
// permutation matrices" instead.
struct ScalingInstance {
  OpKind op;
  std::size_t m = 0;
  std::unique_ptr<DiagramManager> manager;
  std::optional<Family> f;
  std::optional<Family> g;         // empty for unary ops
  std::optional<Family> expected;  // empty when with_expected is false or no closed form
};

ScalingInstance gen_scaling_instance(OpKind, std::size_t m, bool with_expected = true);

}  // namespace famdd
