#include <doctest.h>

#include <koszul/matrix.hpp>

#include "generators.hpp"

using namespace koszul;

namespace {

RingPtr qxy() { return PolyRing::make({"x", "y"}); }

Polynomial P(const RingPtr& r, const std::string& s) { return Polynomial::parse(r, s); }

RingMatrix M(const RingPtr& r, std::vector<std::vector<const char*>> rows) {
  std::vector<std::vector<Polynomial>> parsed;
  for (auto& row : rows) {
    parsed.emplace_back();
    for (auto* s : row) parsed.back().push_back(P(r, s));
  }
  return RingMatrix::from_rows(r, std::move(parsed));
}

// Plain cofactor expansion, kept separate from the production path.
Polynomial det_reference(const RingMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial::constant(m.ring(), 1);
  if (n == 1) return m.at(0, 0);
  Polynomial acc(m.ring());
  for (std::size_t j = 0; j < n; ++j) {
    RingMatrix minor(m.ring(), n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t c = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) minor.set(i - 1, c++, m.at(i, k));
    }
    Polynomial t = m.at(0, j) * det_reference(minor);
    acc = (j % 2 == 0) ? acc + t : acc - t;
  }
  return acc;
}

}  // namespace

TEST_CASE("composition") {
  auto r = qxy();
  RingMatrix a = M(r, {{"0", "y"}, {"1", "x"}});
  CHECK((RingMatrix::identity(r, 2) * a) == a);
  CHECK((M(r, {{"x"}}) * M(r, {{"y"}})) == M(r, {{"x*y"}}));
  // The commuting square of the worked weight-two cube.
  RingMatrix diag = RingMatrix::diagonal(r, {P(r, "x"), P(r, "1")});
  CHECK((diag * a) == M(r, {{"0", "x*y"}, {"1", "x"}}));
  CHECK_THROWS_AS(M(r, {{"x"}}) * a, std::invalid_argument);
}

TEST_CASE("determinants") {
  auto r = qxy();
  CHECK(determinant(M(r, {{"x", "y"}, {"1", "1"}})) == P(r, "x-y"));
  CHECK(determinant(M(r, {{"0", "y"}, {"1", "1"}})) == P(r, "-y"));
  CHECK(determinant(RingMatrix::identity(r, 4)) == P(r, "1"));
  CHECK(determinant(RingMatrix(r, 0, 0)) == P(r, "1"));
  CHECK_THROWS_AS(determinant(RingMatrix(r, 2, 3)), std::invalid_argument);
}

TEST_CASE("bareiss agrees with cofactor expansion on random matrices") {
  auto r = PolyRing::make({"x", "y"});
  testgen::Rng rng(404);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      RingMatrix m(r, n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, testgen::random_polynomial(r, rng, 2));
      CHECK(determinant(m) == det_reference(m));
    }
  }
}

TEST_CASE("determinant is multiplicative") {
  auto r = qxy();
  testgen::Rng rng(505);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      RingMatrix a(r, n, n), b(r, n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          a.set(i, j, testgen::random_polynomial(r, rng, 1));
          b.set(i, j, testgen::random_polynomial(r, rng, 1));
        }
      CHECK(determinant(a * b) == determinant(a) * determinant(b));
    }
  }
}

TEST_CASE("minors ideals") {
  auto r = qxy();
  CHECK(minors_ideal(M(r, {{"x", "y"}, {"1", "1"}}), 1).is_unit());
  RingMatrix d = RingMatrix::diagonal(r, {P(r, "x"), P(r, "y")});
  CHECK(minors_ideal(d, 2).same_ideal_as(Ideal(r, {P(r, "x*y")})));
  CHECK(minors_ideal(M(r, {{"x", "y"}, {"x", "y"}}), 2).is_zero());
  CHECK(minors_ideal(d, 0).is_unit());
  CHECK(minors_ideal(d, 3).is_zero());
}

TEST_CASE("minor ideals are nested") {
  auto r = qxy();
  testgen::Rng rng(606);
  for (int trial = 0; trial < 6; ++trial) {
    RingMatrix m(r, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m.set(i, j, testgen::random_polynomial(r, rng, 1));
    for (int t = 1; t < 3; ++t) {
      Ideal bigger = minors_ideal(m, t);
      Ideal smaller = minors_ideal(m, t + 1);
      for (const auto& g : smaller.generators()) CHECK(bigger.contains(g));
    }
  }
}

TEST_CASE("rank over the fraction field") {
  auto r = qxy();
  CHECK(rank_ff(RingMatrix::diagonal(r, {P(r, "x"), P(r, "1")})) == 2);
  CHECK(rank_ff(M(r, {{"x", "y"}, {"x", "y"}})) == 1);
  CHECK(rank_ff(RingMatrix(r, 2, 2)) == 0);
  testgen::Rng rng(707);
  for (int trial = 0; trial < 10; ++trial) {
    RingMatrix m(r, 3, 2);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 2; ++j) m.set(i, j, testgen::random_polynomial(r, rng, 2));
    CHECK(rank_ff(m) == rank_ff(m.transpose()));
    // Largest nonvanishing minor size agrees with the echelon rank.
    int by_minors = 0;
    for (int t = 1; t <= 2; ++t)
      if (!minors_ideal(m, t).is_zero()) by_minors = t;
    CHECK(rank_ff(m) == by_minors);
  }
}

TEST_CASE("injectivity") {
  auto r = qxy();
  CHECK(is_injective(M(r, {{"x"}})));
  CHECK(!is_injective(M(r, {{"x", "y"}, {"x", "y"}})));
  CHECK(is_injective(RingMatrix::identity(r, 3)));
  CHECK(is_injective(M(r, {{"x"}, {"y"}})));   // 2x1, kernel zero
  CHECK(!is_injective(M(r, {{"x", "y"}})));    // 1x2, kernel (y, -x)
  testgen::Rng rng(808);
  for (int trial = 0; trial < 10; ++trial) {
    RingMatrix m(r, 2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) m.set(i, j, testgen::random_polynomial(r, rng, 2));
    CHECK(is_injective(m) == !determinant(m).is_zero());
  }
}

TEST_CASE("block assembly") {
  auto r = qxy();
  // [[fV, U], [X, E_m]] of the worked instance.
  RingMatrix fv = M(r, {{"0"}});
  RingMatrix u = M(r, {{"y"}});
  RingMatrix x = M(r, {{"1"}});
  RingMatrix block = block2x2(fv, u, x, RingMatrix::identity(r, 1));
  CHECK(block == M(r, {{"0", "y"}, {"1", "1"}}));

  RingMatrix a = M(r, {{"x"}});
  RingMatrix b = M(r, {{"y"}});
  CHECK(block2x2(a, RingMatrix(r, 1, 1), RingMatrix(r, 1, 1), b) ==
        M(r, {{"x", "0"}, {"0", "y"}}));
  CHECK(block2x2(M(r, {{"1"}}), M(r, {{"2"}}), M(r, {{"3"}}), M(r, {{"4"}})) ==
        M(r, {{"1", "2"}, {"3", "4"}}));
  CHECK_THROWS_AS(block2x2(a, RingMatrix(r, 2, 1), RingMatrix(r, 1, 1), b),
                  std::invalid_argument);
}
