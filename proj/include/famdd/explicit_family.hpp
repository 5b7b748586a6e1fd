#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace famdd {

// Explicit list-of-sets representation of a family over a named universe.
// Each set is a bitmask over universe positions (bit i = i-th element), which
// caps the universe at 64 elements. Masks are kept sorted and duplicate-free,
// so two objects over the same universe are equal iff they hold the same sets.
class ExplicitFamily {
public:
  static constexpr std::size_t max_universe = 64;

  explicit ExplicitFamily(std::vector<std::string> universe);
  // Normalizing constructor: sorts and deduplicates the given masks.
  ExplicitFamily(std::vector<std::string> universe, std::vector<std::uint64_t> masks);

  static ExplicitFamily from_sets(std::vector<std::string> universe,
                                  const std::vector<std::vector<std::string>>& sets);

  const std::vector<std::string>& universe() const noexcept { return universe_; }
  std::size_t universe_size() const noexcept { return universe_.size(); }
  const std::vector<std::uint64_t>& masks() const noexcept { return masks_; }
  std::size_t set_count() const noexcept { return masks_.size(); }
  std::uint64_t full_mask() const noexcept;

  bool contains(std::uint64_t mask) const;
  // Rejects duplicates: inserting a mask that is already present throws.
  void insert(std::uint64_t mask);

  std::size_t position(std::string_view name) const;  // throws std::out_of_range
  std::uint64_t mask_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(std::uint64_t mask) const;

  bool operator==(const ExplicitFamily&) const = default;

  // Text format: header line `elements: a,b,c`, then one set per line as
  // comma-separated element names; `{}` denotes the empty set. Duplicate set
  // lines are rejected. write_text emits sets in sorted mask order, so the
  // output is deterministic and round-trips through parse_text.
  static ExplicitFamily parse_text(std::istream&);
  static ExplicitFamily parse_text_file(const std::string& path);
  void write_text(std::ostream&) const;
  void write_text_file(const std::string& path) const;
  std::string to_text() const;

private:
  void check_mask(std::uint64_t) const;

  std::vector<std::string> universe_;
  std::vector<std::uint64_t> masks_;
};

}  // namespace famdd
