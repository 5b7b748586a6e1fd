#include "famdd/explicit_family.hpp"

#include <sstream>
#include <stdexcept>

#include "doctest.h"

using famdd::ExplicitFamily;

TEST_CASE("normalizing constructor sorts and deduplicates masks") {
  ExplicitFamily fam({"a", "b", "c"}, {0b101, 0b001, 0b101, 0b010});
  CHECK(fam.masks() == std::vector<std::uint64_t>{0b001, 0b010, 0b101});
  CHECK(fam.set_count() == 3);
  CHECK(fam.full_mask() == 0b111);
}

TEST_CASE("from_sets resolves names and round-trips through names_of") {
  auto fam = ExplicitFamily::from_sets({"a", "b", "c"}, {{"a", "c"}, {"b"}, {}});
  CHECK(fam.set_count() == 3);
  CHECK(fam.contains(0));
  CHECK(fam.contains(0b101));
  CHECK(fam.contains(0b010));
  CHECK_FALSE(fam.contains(0b100));
  CHECK(fam.names_of(0b101) == std::vector<std::string>{"a", "c"});
  CHECK(fam.mask_of({"c", "a"}) == 0b101);
}

TEST_CASE("insert rejects duplicates and out-of-universe masks") {
  ExplicitFamily fam({"a", "b"});
  fam.insert(0b01);
  CHECK_THROWS_AS(fam.insert(0b01), std::invalid_argument);
  CHECK_THROWS_AS(fam.insert(0b100), std::out_of_range);
  CHECK(fam.set_count() == 1);
}

TEST_CASE("position throws on unknown element") {
  ExplicitFamily fam({"a", "b"});
  CHECK(fam.position("b") == 1);
  CHECK_THROWS_AS(fam.position("z"), std::out_of_range);
  CHECK_THROWS_AS(fam.mask_of({"a", "z"}), std::out_of_range);
}

TEST_CASE("universe limits are enforced") {
  std::vector<std::string> big;
  for (int i = 0; i < 65; ++i) big.push_back("v" + std::to_string(i));
  CHECK_THROWS_AS(ExplicitFamily{big}, std::invalid_argument);
  std::vector<std::string> dup = {"a", "b", "a"};
  CHECK_THROWS_AS(ExplicitFamily{dup}, std::invalid_argument);
}

TEST_CASE("text format round-trips and uses {} for the empty set") {
  auto fam = ExplicitFamily::from_sets({"a", "b", "c"}, {{}, {"a", "b"}, {"c"}});
  std::string text = fam.to_text();
  CHECK(text.find("elements: a,b,c") == 0);
  CHECK(text.find("{}") != std::string::npos);
  std::istringstream in(text);
  auto back = ExplicitFamily::parse_text(in);
  CHECK(back == fam);
}

TEST_CASE("parse_text rejects malformed input") {
  SUBCASE("missing header") {
    std::istringstream in("a,b\n");
    CHECK_THROWS_AS(ExplicitFamily::parse_text(in), std::runtime_error);
  }
  SUBCASE("duplicate set line") {
    std::istringstream in("elements: a,b\na\na\n");
    CHECK_THROWS_AS(ExplicitFamily::parse_text(in), std::runtime_error);
  }
  SUBCASE("unknown element in a set") {
    std::istringstream in("elements: a,b\nq\n");
    CHECK_THROWS_AS(ExplicitFamily::parse_text(in), std::out_of_range);
  }
}

TEST_CASE("empty family and empty-set-only family are distinct") {
  ExplicitFamily none({"a"});
  auto just_empty = ExplicitFamily::from_sets({"a"}, {{}});
  CHECK(none.set_count() == 0);
  CHECK(just_empty.set_count() == 1);
  CHECK(none != just_empty);
}
