#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "coxric/errors.hpp"
#include "coxric/root_system.hpp"

using namespace coxric;

TEST_SUITE("root_system") {

TEST_CASE("classical root counts") {
  const std::pair<const char*, std::size_t> expected[] = {
      {"A1", 2}, {"A2", 6}, {"A3", 12}, {"A4", 20}, {"B2", 8}, {"B3", 18}, {"B4", 32},
      {"D4", 24}, {"H3", 30}, {"F4", 48}, {"H4", 120}, {"A1xA2", 8}};
  for (const auto& [spec, count] : expected) {
    CAPTURE(spec);
    CHECK(generate_roots(parse_spec(spec)).size() == count);
  }
  for (int m = 2; m <= 12; ++m)
    CHECK(generate_roots(parse_spec("I2(" + std::to_string(m) + ")")).size() == std::size_t(2 * m));
}

TEST_CASE("layout: simple roots first, negatives offset by N") {
  for (const char* spec : {"A1", "A3", "B3", "H3", "D4", "I2(7)"}) {
    CAPTURE(spec);
    const auto rs = generate_roots(parse_spec(spec));
    const std::size_t n = rs.positive_count();
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      std::vector<double> e(rs.rank(), 0.0);
      e[i] = 1.0;
      CHECK(rs.root(RootIndex(i)).coords == e);
    }
    for (RootIndex k = 0; k < RootIndex(rs.size()); ++k) {
      const auto& r = rs.root(k);
      CHECK(r.positive == (std::size_t(k) < n));
      const auto& neg = rs.root(rs.negative_of(k)).coords;
      for (std::size_t i = 0; i < rs.rank(); ++i) CHECK(neg[i] == -r.coords[i]);
      const bool nonneg = std::all_of(r.coords.begin(), r.coords.end(), [](double c) { return c >= -1e-8; });
      const bool nonpos = std::all_of(r.coords.begin(), r.coords.end(), [](double c) { return c <= 1e-8; });
      CHECK((r.positive ? nonneg : nonpos));
      CHECK(rs.pairing(k, k) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(rs.find(r.coords) == k);
    }
  }
}

TEST_CASE("simply laced positive roots are 0/1 vectors in A3") {
  const auto rs = generate_roots(parse_spec("A3"));
  for (std::size_t k = 0; k < rs.positive_count(); ++k)
    for (double c : rs.root(RootIndex(k)).coords) CHECK((std::abs(c) < 1e-12 || std::abs(c - 1.0) < 1e-12));
}

TEST_CASE("reflection examples") {
  const auto a1 = generate_roots(parse_spec("A1"));
  CHECK(reflection_action(a1, 0) == RootPermutation{1, 0});

  const auto a2 = generate_roots(parse_spec("A2"));
  const auto img = reflect(a2.form(), a2.root(0).coords, a2.root(1).coords);
  CHECK(img[0] == doctest::Approx(1.0));
  CHECK(img[1] == doctest::Approx(1.0));
  const auto sum = a2.find({1.0, 1.0});
  REQUIRE(sum.has_value());
  CHECK(reflection_action(a2, 0)[1] == *sum);
}

TEST_CASE("reflections are form-preserving involutions") {
  for (const char* spec : {"A3", "B3", "H3", "F4", "I2(5)"}) {
    CAPTURE(spec);
    const auto rs = generate_roots(parse_spec(spec));
    for (RootIndex a = 0; a < RootIndex(rs.positive_count()); ++a) {
      const auto p = reflection_action(rs, a);
      CHECK(p[std::size_t(a)] == rs.negative_of(a));
      for (RootIndex i = 0; i < RootIndex(rs.size()); ++i) CHECK(p[std::size_t(p[std::size_t(i)])] == i);
      for (RootIndex i = 0; i < RootIndex(rs.size()); i += 3)
        for (RootIndex j = 0; j < RootIndex(rs.size()); j += 5)
          CHECK(std::abs(rs.pairing(p[std::size_t(i)], p[std::size_t(j)]) - rs.pairing(i, j)) < 1e-10);
    }
  }
}

TEST_CASE("infinite types are rejected") {
  CHECK_THROWS_AS(generate_roots(parse_spec(R"({"m": [[1,0],[0,1]]})")), InputError);
  CHECK_THROWS_AS(generate_roots(parse_spec(R"({"m": [[1,3,4],[3,1,3],[4,3,1]]})")), InputError);
  CHECK_THROWS_AS(generate_roots(parse_spec(R"({"m": [[1,3,3],[3,1,3],[3,3,1]]})")), DegenerateTypeError);
}

TEST_CASE("json export") {
  const auto j = to_json(generate_roots(parse_spec("A2")));
  CHECK(j["roots"].size() == 6);
}

}  // TEST_SUITE
