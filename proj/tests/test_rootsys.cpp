#include <doctest.h>

#include <set>

#include "adjc/errors.hpp"
#include "adjc/rootsys.hpp"
#include "adjc/weyl.hpp"
#include "oracles.hpp"

using namespace adjc;

namespace {

const std::vector<DynkinType> kAllTypes{{'A', 1}, {'A', 2}, {'A', 5}, {'B', 2}, {'B', 3}, {'B', 6}, {'C', 3},
                                        {'C', 4}, {'D', 4}, {'D', 6}, {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4},
                                        {'G', 2}};

}  // namespace

TEST_CASE("root counts match a closure under all reflections") {
  for (auto t : kAllTypes) {
    CAPTURE(t.name());
    auto d = build_root_system(t.letter, t.rank);
    auto closure = oracle::reflection_closure(d.simple_roots());
    std::set<WeightVector> built(d.roots().begin(), d.roots().end());
    CHECK(closure == built);
    CHECK(d.root_total() == root_count(t));
  }
}

TEST_CASE("G2 has 6 long and 6 short roots") {
  auto d = build_root_system('G', 2);
  CHECK(d.root_total() == 12);
  std::size_t longs = long_roots(d).size();
  CHECK(longs == 6);
  CHECK(d.root_total() - longs == 6);
}

TEST_CASE("E8 has 240 roots and dimension 248") {
  auto d = build_root_system('E', 8);
  CHECK(d.root_total() == 240);
  CHECK(d.lie_algebra_dimension() == 248);
}

TEST_CASE("A1 is {alpha, -alpha}") {
  auto d = build_root_system('A', 1);
  REQUIRE(d.root_total() == 2);
  CHECK(d.root(0) == -d.root(1));
}

TEST_CASE("classical root counts") {
  for (int r = 2; r <= 8; ++r) {
    CHECK(build_root_system('B', r).root_total() == static_cast<std::size_t>(2 * r * r));
    if (r >= 4) CHECK(build_root_system('D', r).root_total() == static_cast<std::size_t>(2 * r * (r - 1)));
    // dim so(2r+1) = 2r^2 + r
    CHECK(build_root_system('B', r).lie_algebra_dimension() == 2 * r * r + r);
  }
}

TEST_CASE("highest root") {
  auto g2 = build_root_system('G', 2);
  auto h = highest_root(g2);
  CHECK(h == g2.simple_root(1) * Rational(3) + g2.simple_root(2) * Rational(2));
  CHECK(h == oracle::max_height_root(g2));
  auto b3 = build_root_system('B', 3);
  CHECK(highest_root(b3) == WeightVector({1, 1, 0}));
  auto a1 = build_root_system('A', 1);
  CHECK(highest_root(a1) == a1.simple_root(1));
  for (auto t : kAllTypes) {
    auto d = build_root_system(t.letter, t.rank);
    CHECK(d.is_long(highest_root_index(d)));
    CHECK(highest_root(d) == oracle::max_height_root(d));
  }
}

TEST_CASE("long roots") {
  CHECK(long_roots(build_root_system('F', 4)).size() == 24);
  CHECK(long_roots(build_root_system('E', 6)).size() == 72);
  auto g2 = build_root_system('G', 2);
  auto lr = long_roots(g2);
  CHECK(factors_name(identify_type(g2, lr)) == "A2");
}

TEST_CASE("identify_type round trip") {
  for (auto t : kAllTypes) {
    auto d = build_root_system(t.letter, t.rank);
    CHECK(factors_name(identify_type(d, d.roots())) == factors_name(normalize_factors({t})));
  }
}

TEST_CASE("identify_type splits products and rejects non-closed sets") {
  auto d = build_root_system('D', 4);
  std::vector<WeightVector> sub;
  for (const auto& r : d.roots())
    if (sgn(r[0]) == 0 && sgn(r[1]) == 0) sub.push_back(r);  // D2 on e3, e4
  CHECK(factors_name(identify_type(d, sub)) == "A1xA1");
  std::vector<WeightVector> bad{d.simple_root(1), -d.simple_root(1), d.simple_root(2), -d.simple_root(2)};
  CHECK_THROWS_AS(identify_type(d, bad), StructuralError);
  std::vector<WeightVector> lonely{d.simple_root(1)};
  CHECK_THROWS_AS(identify_type(d, lonely), StructuralError);
  CHECK(identify_type(d, std::vector<WeightVector>{}).empty());
}

TEST_CASE("Cartan matrices and sign coherence") {
  for (auto t : kAllTypes) {
    auto d = build_root_system(t.letter, t.rank);
    const auto& c = d.cartan_matrix();
    for (int i = 0; i < d.rank(); ++i)
      for (int j = 0; j < d.rank(); ++j) {
        if (i == j) CHECK(c[i][j] == 2);
        else CHECK((c[i][j] <= 0 && c[i][j] >= -3));
      }
    for (std::size_t k = 0; k < d.root_total(); ++k) {
      const auto& co = d.coefficients(k);
      bool pos = std::all_of(co.begin(), co.end(), [](int x) { return x >= 0; });
      bool neg = std::all_of(co.begin(), co.end(), [](int x) { return x <= 0; });
      CHECK((pos || neg));
    }
  }
}

TEST_CASE("closure is idempotent") {
  auto d = build_root_system('F', 4);
  auto again = oracle::reflection_closure(d.roots());
  CHECK(again.size() == d.root_total());
}

TEST_CASE("coroot pairing") {
  auto e7 = build_root_system('E', 7);
  auto beta = highest_root(e7);
  CHECK(coroot_pairing(e7, beta, e7.simple_root(1)) == 1);
  for (int i = 2; i <= 7; ++i) CHECK(coroot_pairing(e7, beta, e7.simple_root(i)) == 0);
  auto b3 = build_root_system('B', 3);
  auto hb = highest_root(b3);
  CHECK(coroot_pairing(b3, hb, b3.simple_root(2)) == 1);
  CHECK(coroot_pairing(b3, hb, b3.simple_root(1)) == 0);
  CHECK(coroot_pairing(b3, hb, b3.simple_root(3)) == 0);
  for (const auto& a : b3.roots()) CHECK(coroot_pairing(b3, a, a) == 2);
  CHECK_THROWS_AS(coroot_pairing(b3, hb, WeightVector({1, 1, 1})), InvalidInput);
}

TEST_CASE("invalid types are rejected") {
  CHECK_THROWS_AS(build_root_system('B', 1), InvalidInput);
  CHECK_THROWS_AS(build_root_system('C', 2), InvalidInput);
  CHECK_THROWS_AS(build_root_system('D', 3), InvalidInput);
  CHECK_THROWS_AS(build_root_system('E', 9), InvalidInput);
  CHECK_THROWS_AS(build_root_system('F', 3), InvalidInput);
  CHECK_THROWS_AS(build_root_system('H', 3), InvalidInput);
  CHECK_THROWS_AS(build_root_system('A', 0), InvalidInput);
  CHECK_THROWS_AS(parse_dynkin_type("E"), InvalidInput);
  CHECK_THROWS_AS(parse_dynkin_type("8E"), InvalidInput);
  CHECK(parse_dynkin_type("E8") == DynkinType{'E', 8});
}

TEST_CASE("b6 and e6 are the only equal dimensions in the table") {
  std::map<int, std::vector<std::string>> by_dim;
  auto put = [&](DynkinType t) { by_dim[lie_algebra_dimension(t)].push_back(t.name()); };
  put({'A', 2});
  for (int r = 3; r <= 40; ++r) put({'B', r});
  for (int r = 4; r <= 40; ++r) put({'D', r});
  put({'E', 6});
  put({'E', 7});
  put({'E', 8});
  put({'F', 4});
  put({'G', 2});
  std::vector<std::string> clashes;
  for (const auto& [dim, names] : by_dim)
    if (names.size() > 1) clashes.push_back(std::to_string(dim));
  REQUIRE(clashes.size() == 1);
  CHECK(clashes[0] == "78");
  CHECK(by_dim[78] == std::vector<std::string>{"B6", "E6"});
}

TEST_CASE("low-rank normalization") {
  CHECK(factors_name(normalize_factors({{'B', 1}, {'D', 2}, {'D', 3}, {'C', 2}, {'B', 0}, {'D', 1}})) ==
        "A1xA1xA1xA3xB2");
  CHECK(factors_name({}) == "0");
}
