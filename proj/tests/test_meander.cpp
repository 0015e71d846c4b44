#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "hypermaps/meander.hpp"
#include "test_support.hpp"

using namespace hypermaps;

TEST_CASE("nested monopole shapes") {
  // half-integer m = 5/2, order 5
  Hypermap m52 = nested_monopole(5);
  CHECK(m52.sigma() == parse_cycles("(2,4,5,3,1)", 5));
  CHECK(m52.alpha() == parse_cycles("(1,2)(3,4)", 5));
  Hypermap rec = m52.reciprocal();
  CHECK(rec.sigma() == parse_cycles("(1,2)(3,4)", 5));
  CHECK(rec.alpha() == parse_cycles("(2,4,5,3,1)", 5));
  CHECK(rec.faces() == parse_cycles("(2,3)(4,5)", 5));

  // integer m = 3, order 6
  Hypermap m3 = nested_monopole(6);
  CHECK(m3.sigma() == parse_cycles("(2,4,6,5,3,1)", 6));
  CHECK(m3.alpha() == parse_cycles("(1,2)(3,4)(5,6)", 6));

  // smallest case: a single point
  Hypermap m12 = nested_monopole(1);
  CHECK(m12.size() == 1);
  CHECK(m12.sigma() == Permutation::identity(1));
  CHECK(m12.alpha() == Permutation::identity(1));

  CHECK_THROWS_AS(nested_monopole(0), precondition_error);
}

TEST_CASE("parallel dipole shapes") {
  Hypermap d4 = parallel_dipole(4);
  CHECK(d4.sigma() == parse_cycles("(1,3,5,7)(8,6,4,2)", 8));
  CHECK(d4.alpha() == parse_cycles("(8,1)(2,3)(4,5)(6,7)", 8));
  Hypermap rec = d4.reciprocal();
  CHECK(rec.sigma() == parse_cycles("(8,1)(2,3)(4,5)(6,7)", 8));
  CHECK(rec.faces() == parse_cycles("(1,2)(3,4)(5,6)(7,8)", 8));

  CHECK(count_spanning_hypertrees(parallel_dipole(1).reciprocal()) == 1);
  CHECK_THROWS_AS(parallel_dipole(0), precondition_error);
}

TEST_CASE("pinned span-to-folding instances") {
  // order 5: theta = (1,5,3) reads off as the identity folding
  Hypermap h5 = nested_monopole(5).reciprocal();
  StampFolding f5 = span_to_folding(h5, parse_cycles("(1,5,3)", 5));
  CHECK(f5.order == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(f5.valid());

  // order 6: theta = (2,4)(3,6)
  Hypermap h6 = nested_monopole(6).reciprocal();
  StampFolding f6 = span_to_folding(h6, parse_cycles("(2,4)(3,6)", 6));
  CHECK(f6.order == std::vector<int>{1, 4, 6, 5, 3, 2});
  CHECK(f6.valid());

  CHECK_THROWS_AS(span_to_folding(h6, parse_cycles("(1,3)(2,4)", 6)), precondition_error);
}

TEST_CASE("pinned span-to-meander instance") {
  Hypermap h = parallel_dipole(4).reciprocal();
  Permutation theta = parse_cycles("(1,3,5)(4,6)", 8);
  CHECK(face_tour(h, theta).cycle == parse_cycles("(1,8,5,6,7,4,3,2)", 8));
  MeanderDiagram m = span_to_meander(h, theta);
  CHECK(m.valid());
  auto mp = m.meandric_permutation();
  CHECK(mp.size() == 8);
  CHECK(mp.front() == 1);
  std::set<int> distinct(mp.begin(), mp.end());
  CHECK(distinct.size() == 8);
}

TEST_CASE("meander oracle small values and count equality") {
  CHECK(meanders_oracle(1).size() == 1);
  CHECK(meanders_oracle(2).size() == 2);
  CHECK(count_meanders(1) == 1);
  CHECK(count_meanders(2) == 2);
  // computed by the oracle, then frozen
  CHECK(meanders_oracle(3).size() == 8);
  CHECK(meanders_oracle(4).size() == 42);
  for (int n = 1; n <= 5; ++n)
    CHECK(count_meanders(n) == static_cast<std::int64_t>(meanders_oracle(n).size()));
}

TEST_CASE("folding oracle small values and count equality") {
  CHECK(foldings_oracle(0).size() == 1);
  CHECK(foldings_oracle(0).begin()->order == std::vector<int>{1});
  // computed by the oracle, then frozen
  CHECK(foldings_oracle(4).size() == 10);
  for (int n = 1; n <= 8; ++n)
    CHECK(count_semimeanders(n) == static_cast<std::int64_t>(foldings_oracle(n - 1).size()));
}

TEST_CASE("bijectivity of span_to_folding") {
  for (int n = 1; n <= 8; ++n) {
    Hypermap h = nested_monopole(n).reciprocal();
    std::set<StampFolding> image;
    for (const auto& s : spanning_unicellular(h, 0)) {
      StampFolding f = span_to_folding(h, s.theta);
      CHECK(f.valid());
      image.insert(std::move(f));
    }
    auto oracle = foldings_oracle(n - 1);
    CHECK(image.size() == static_cast<std::size_t>(count_semimeanders(n)));  // injective
    CHECK(image == oracle);
  }
}

TEST_CASE("bijectivity of span_to_meander") {
  for (int n = 1; n <= 5; ++n) {
    Hypermap h = parallel_dipole(n).reciprocal();
    std::set<MeanderDiagram> image;
    for (const auto& s : spanning_unicellular(h, 0)) {
      MeanderDiagram m = span_to_meander(h, s.theta);
      CHECK(m.valid());
      image.insert(std::move(m));
    }
    auto oracle = meanders_oracle(n);
    CHECK(image.size() == static_cast<std::size_t>(count_meanders(n)));  // injective
    CHECK(image == oracle);
  }
}

TEST_CASE("counts are monotone over the tested range") {
  std::int64_t prev = 0;
  for (int n = 1; n <= 6; ++n) {
    std::int64_t c = count_meanders(n);
    CHECK(c >= prev);
    prev = c;
  }
  prev = 0;
  for (int n = 1; n <= 9; ++n) {
    std::int64_t c = count_semimeanders(n);
    CHECK(c >= prev);
    prev = c;
  }
}
