#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hypermaps/perm.hpp"
#include "test_support.hpp"

using hypermaps::connects;
using hypermaps::parse_cycles;
using hypermaps::Permutation;
using hypermaps::Transposition;

TEST_CASE("parse_cycles basics") {
  // the vertex permutation of the running planar example
  Permutation sigma = parse_cycles("(1,2,3)(4,5,6)(7,8,9,10)(11,12)", 12);
  CHECK(sigma.to_string() == "(1,2,3)(4,5,6)(7,8,9,10)(11,12)");
  CHECK(sigma.cycle_count() == 4);

  CHECK(parse_cycles("", 5) == Permutation::identity(5));
  CHECK(parse_cycles("()", 5) == Permutation::identity(5));

  // cycle order and starting points do not matter
  CHECK(parse_cycles("(2,11,9,5)(1,6)(3,7)(4,10)(8,12)", 12) ==
        parse_cycles("(1,6)(2,11,9,5)(3,7)(4,10)(8,12)", 12));
  CHECK(parse_cycles("(5,2,11,9)(1,6)(3,7)(4,10)(8,12)", 12) ==
        parse_cycles("(1,6)(2,11,9,5)(3,7)(4,10)(8,12)", 12));

  CHECK_THROWS_AS(parse_cycles("(1,2)(2,3)", 3), hypermaps::parse_error);
  CHECK_THROWS_AS(parse_cycles("(1,4)", 3), hypermaps::parse_error);
  CHECK_THROWS_AS(parse_cycles("(1,2", 3), hypermaps::parse_error);
  CHECK_THROWS_AS(parse_cycles("1,2)", 3), hypermaps::parse_error);
  CHECK_THROWS_AS(parse_cycles("(0,1)", 3), hypermaps::parse_error);
}

TEST_CASE("round trip parse -> print -> parse") {
  std::mt19937_64 rng(20240901);
  for (int it = 0; it < 200; ++it) {
    int n = 1 + static_cast<int>(rng() % 12);
    Permutation p = hmtest::random_permutation(n, rng);
    CHECK(parse_cycles(p.to_string(), n) == p);
    CHECK(parse_cycles(p.to_string(true), n) == p);
  }
}

TEST_CASE("composition is right to left") {
  // alpha^-1 sigma of the planar example
  Permutation sigma = parse_cycles("(1,2,3)(4,5,6)(7,8,9,10)(11,12)", 12);
  Permutation alpha = parse_cycles("(1,6)(2,11,9,5)(3,7)(4,10)(8,12)", 12);
  CHECK((alpha.inverse() * sigma).to_string() == "(1,5)(2,7,12)(3,6,10)(4,9)(8,11)");

  Permutation p = parse_cycles("(1,3,2)", 4);
  CHECK(p * Permutation::identity(4) == p);
  CHECK(Permutation::identity(4) * p == p);
  CHECK(parse_cycles("(1,2,3)", 3) * parse_cycles("(1,3,2)", 3) == Permutation::identity(3));

  // table-driven: (p*q)(x) = p(q(x))
  Permutation q = parse_cycles("(2,4)", 4);
  Permutation pq = p * q;
  for (int x = 0; x < 4; ++x) CHECK(pq(x) == p(q(x)));
}

TEST_CASE("inverse") {
  CHECK(parse_cycles("(1,2,3)", 3).inverse() == parse_cycles("(1,3,2)", 3));
  CHECK(Permutation::identity(6).inverse() == Permutation::identity(6));
  CHECK(parse_cycles("(1,6)(2,11,9,5)(3,7)(4,10)(8,12)", 12).inverse() ==
        parse_cycles("(1,6)(2,5,9,11)(3,7)(4,10)(8,12)", 12));
  std::mt19937_64 rng(7);
  for (int it = 0; it < 100; ++it) {
    Permutation p = hmtest::random_permutation(9, rng);
    CHECK(p.inverse().inverse() == p);
    CHECK(p * p.inverse() == Permutation::identity(9));
  }
}

TEST_CASE("cycle counts") {
  CHECK(Permutation::identity(12).cycle_count() == 12);
  CHECK(parse_cycles("(1,2,3)(4,5,6)(7,8,9,10)(11,12)", 12).cycle_count() == 4);
  CHECK(parse_cycles("(1,6)(2,11,9,5)(3,7)(4,10)(8,12)", 12).cycle_count() == 5);
}

TEST_CASE("conjugacy: z(pq) = z(qp)") {
  std::mt19937_64 rng(42);
  for (int it = 0; it < 500; ++it) {
    int n = 1 + static_cast<int>(rng() % 9);
    Permutation p = hmtest::random_permutation(n, rng);
    Permutation q = hmtest::random_permutation(n, rng);
    CHECK((p * q).cycle_count() == (q * p).cycle_count());
  }
}

TEST_CASE("connects and Serret's lemma") {
  Permutation p = parse_cycles("(1,2,3)(4,5)", 5);
  CHECK(connects(p, Transposition(0, 3)));   // 1 and 4
  CHECK(!connects(p, Transposition(0, 1)));  // 1 and 2

  std::mt19937_64 rng(1234);
  for (int it = 0; it < 1000; ++it) {
    int n = 2 + static_cast<int>(rng() % 8);
    Permutation p2 = hmtest::random_permutation(n, rng);
    int i = static_cast<int>(rng() % static_cast<unsigned>(n));
    int j = static_cast<int>(rng() % static_cast<unsigned>(n));
    if (i == j) continue;
    Transposition t(i, j);
    int expect = connects(p2, t) ? -1 : +1;
    CHECK(hypermaps::left_mul(t, p2).cycle_count() == p2.cycle_count() + expect);
    CHECK(hypermaps::right_mul(p2, t).cycle_count() == p2.cycle_count() + expect);
  }
}

TEST_CASE("is_circular") {
  CHECK(parse_cycles("(1,2,3,4,5)", 5).is_circular());
  CHECK(!Permutation::identity(2).is_circular());
  // the single face of the spanning hypertree of the planar example
  Permutation sigma = parse_cycles("(1,2,3)(4,5,6)(7,8,9,10)(11,12)", 12);
  Permutation theta = parse_cycles("(2,9)(4,10)(8,12)", 12);
  Permutation zeta = theta.inverse() * sigma;
  CHECK(zeta.is_circular());
  CHECK(zeta == parse_cycles("(1,9,4,5,6,10,7,12,11,8,2,3)", 12));
}

TEST_CASE("bijection invariant") {
  CHECK_THROWS_AS(Permutation({0, 0, 2}), hypermaps::validation_error);
  CHECK_THROWS_AS(Permutation({1, 2, 3}), hypermaps::validation_error);
}
