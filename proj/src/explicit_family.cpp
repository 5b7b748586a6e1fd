#include "famdd/explicit_family.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace famdd {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_names(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= line.size()) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) comma = line.size();
    out.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
    if (comma == line.size()) break;
  }
  return out;
}

void check_name(const std::string& name) {
  if (name.empty()) throw std::runtime_error("family text: empty element name");
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',')
      throw std::runtime_error("family text: element name contains space or comma: '" + name + "'");
  }
}

void validate_universe(const std::vector<std::string>& universe) {
  if (universe.size() > ExplicitFamily::max_universe)
    throw std::invalid_argument("universe exceeds " + std::to_string(ExplicitFamily::max_universe) +
                                " elements");
  for (const auto& name : universe) check_name(name);
  for (std::size_t i = 0; i < universe.size(); ++i)
    for (std::size_t j = i + 1; j < universe.size(); ++j)
      if (universe[i] == universe[j])
        throw std::invalid_argument("duplicate universe element: " + universe[i]);
}

}  // namespace

ExplicitFamily::ExplicitFamily(std::vector<std::string> universe)
    : universe_(std::move(universe)) {
  validate_universe(universe_);
}

ExplicitFamily::ExplicitFamily(std::vector<std::string> universe,
                               std::vector<std::uint64_t> masks)
    : universe_(std::move(universe)), masks_(std::move(masks)) {
  validate_universe(universe_);
  for (std::uint64_t m : masks_) check_mask(m);
  std::sort(masks_.begin(), masks_.end());
  masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
}

ExplicitFamily ExplicitFamily::from_sets(std::vector<std::string> universe,
                                         const std::vector<std::vector<std::string>>& sets) {
  ExplicitFamily fam(std::move(universe));
  for (const auto& set : sets) fam.insert(fam.mask_of(set));
  return fam;
}

std::uint64_t ExplicitFamily::full_mask() const noexcept {
  return universe_.size() == 64 ? ~0ull : (1ull << universe_.size()) - 1;
}

void ExplicitFamily::check_mask(std::uint64_t mask) const {
  if ((mask & ~full_mask()) != 0)
    throw std::out_of_range("set mask uses positions outside the universe");
}

bool ExplicitFamily::contains(std::uint64_t mask) const {
  return std::binary_search(masks_.begin(), masks_.end(), mask);
}

void ExplicitFamily::insert(std::uint64_t mask) {
  check_mask(mask);
  auto it = std::lower_bound(masks_.begin(), masks_.end(), mask);
  if (it != masks_.end() && *it == mask) throw std::invalid_argument("duplicate set");
  masks_.insert(it, mask);
}

std::size_t ExplicitFamily::position(std::string_view name) const {
  for (std::size_t i = 0; i < universe_.size(); ++i)
    if (universe_[i] == name) return i;
  throw std::out_of_range("unknown element: " + std::string(name));
}

std::uint64_t ExplicitFamily::mask_of(const std::vector<std::string>& names) const {
  std::uint64_t mask = 0;
  for (const auto& name : names) mask |= 1ull << position(name);
  return mask;
}

std::vector<std::string> ExplicitFamily::names_of(std::uint64_t mask) const {
  check_mask(mask);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < universe_.size(); ++i)
    if (mask >> i & 1) out.push_back(universe_[i]);
  return out;
}

ExplicitFamily ExplicitFamily::parse_text(std::istream& in) {
  std::string line;
  std::string header;
  while (std::getline(in, line)) {
    header = trim(line);
    if (!header.empty()) break;
  }
  constexpr std::string_view prefix = "elements:";
  if (header.compare(0, prefix.size(), prefix) != 0)
    throw std::runtime_error("family text: missing 'elements:' header");
  std::vector<std::string> universe;
  {
    std::string rest = trim(header.substr(prefix.size()));
    if (!rest.empty())
      for (auto& name : split_names(rest)) universe.push_back(name);
  }
  ExplicitFamily fam(std::move(universe));
  while (std::getline(in, line)) {
    std::string body = trim(line);
    if (body.empty()) continue;
    std::uint64_t mask = 0;
    if (body != "{}") {
      for (const auto& name : split_names(body)) {
        std::uint64_t bit = 1ull << fam.position(name);
        if (mask & bit) throw std::runtime_error("family text: repeated element in set: " + name);
        mask |= bit;
      }
    }
    if (fam.contains(mask)) throw std::runtime_error("family text: duplicate set line: " + body);
    fam.insert(mask);
  }
  return fam;
}

ExplicitFamily ExplicitFamily::parse_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open family file: " + path);
  return parse_text(in);
}

void ExplicitFamily::write_text(std::ostream& out) const {
  out << "elements:";
  for (std::size_t i = 0; i < universe_.size(); ++i)
    out << (i == 0 ? " " : ",") << universe_[i];
  out << '\n';
  for (std::uint64_t mask : masks_) {
    if (mask == 0) {
      out << "{}\n";
      continue;
    }
    bool first = true;
    for (std::size_t i = 0; i < universe_.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      out << (first ? "" : ",") << universe_[i];
      first = false;
    }
    out << '\n';
  }
}

void ExplicitFamily::write_text_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write family file: " + path);
  write_text(out);
}

std::string ExplicitFamily::to_text() const {
  std::ostringstream out;
  write_text(out);
  return out.str();
}

}  // namespace famdd
