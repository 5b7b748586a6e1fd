#pragma once
// Brute-force reference implementations used to validate the diagram code.
// Everything here works directly on bitmask families and shares nothing with
// the recursive diagram algorithms; it is deliberately naive and only meant
// for small universes.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "famdd/explicit_family.hpp"
#include "famdd/family_ops.hpp"
#include "famdd/kernel.hpp"

namespace famdd {

// Literal, by-the-definition evaluation of one operation. Binary ops need g;
// condition reads the required/excluded element names. quotient, remainder,
// hitting and the subfamily-enumeration path of closure enumerate an
// exponential candidate space and are capped at a 16-element universe.
ExplicitFamily oracle_apply(OpKind op, const ExplicitFamily& f,
                            const ExplicitFamily* g = nullptr,
                            std::span<const std::string> required = {},
                            std::span<const std::string> excluded = {});

struct OrderSearchResult {
  std::vector<std::string> best_order;
  std::size_t best_size = 0;
  std::size_t worst_size = 0;
  std::vector<std::size_t> sizes;  // node count per order examined
};

// Diagram size of fam across variable orders. Exhaustive mode walks every
// permutation of the universe (allowed only up to 8 elements); sampled mode
// draws `samples` shuffles, the i-th from seed + i. The best order found is
// rebuilt once more as a self-check before returning.
OrderSearchResult min_size_over_orders(const ExplicitFamily& fam, Semantics sem,
                                       bool exhaustive, std::size_t samples,
                                       std::uint64_t seed);

}  // namespace famdd
