#include <doctest.h>

#include <koszul/gkoszul.hpp>

#include "generators.hpp"

using namespace koszul;

namespace {

RingPtr qxy() { return PolyRing::make({"x", "y"}); }

Polynomial P(const RingPtr& r, const std::string& s) { return Polynomial::parse(r, s); }

std::vector<Polynomial> seq(const RingPtr& r, std::initializer_list<const char*> fs) {
  std::vector<Polynomial> out;
  for (auto* s : fs) out.push_back(P(r, s));
  return out;
}

// The family whose maps are constantly diag(f_j, 1, ..., 1).
BoundaryFamily diagonal_family(const RingPtr& r, const std::vector<Polynomial>& targets,
                               std::size_t rank) {
  BoundaryFamily family;
  family.ring = r;
  family.directions = static_cast<int>(targets.size());
  family.rank = rank;
  family.targets = targets;
  for (SubsetMask s = 0; s < (SubsetMask(1) << family.directions); ++s)
    for (int j = 1; j <= family.directions; ++j) {
      if (!mask_contains(s, j)) continue;
      std::vector<Polynomial> diag(rank, Polynomial::constant(r, 1));
      diag[0] = targets[static_cast<std::size_t>(j - 1)];
      family.maps.emplace(std::make_pair(s, j), RingMatrix::diagonal(r, std::move(diag)));
    }
  return family;
}

ChainComplex two_term(const RingPtr& r, RingMatrix m) {
  std::vector<int> ranks{static_cast<int>(m.rows()), static_cast<int>(m.cols())};
  std::vector<RingMatrix> maps{std::move(m)};
  return ChainComplex(r, 0, std::move(ranks), std::move(maps));
}

bool complexes_equal(const ChainComplex& a, const ChainComplex& b) {
  if (a.lo() != b.lo() || a.hi() != b.hi()) return false;
  for (int k = a.lo(); k <= a.hi(); ++k) {
    if (a.rank(k) != b.rank(k)) return false;
    if (k > a.lo() && !(a.boundary(k) == b.boundary(k))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("classical Koszul complexes") {
  auto r = qxy();
  SUBCASE("one element") {
    ChainComplex c = classical_koszul(r, seq(r, {"x"}));
    CHECK(c.hi() == 1);
    CHECK(c.boundary(1).at(0, 0) == P(r, "x"));
  }
  SUBCASE("regular pair resolves A/(x, y)") {
    ChainComplex c = classical_koszul(r, seq(r, {"x", "y"}));
    CHECK(c.rank(0) == 1);
    CHECK(c.rank(1) == 2);
    CHECK(c.rank(2) == 1);
    RingMatrix rel(r, 1, 2);
    rel.set(0, 0, P(r, "x"));
    rel.set(0, 1, P(r, "y"));
    CHECK(iso_check(homology(c, 0), FPModule::cokernel(rel), RingMatrix::identity(r, 1)));
    CHECK(homology(c, 1).is_zero());
    CHECK(homology(c, 2).is_zero());
  }
  SUBCASE("repeated element leaves first homology") {
    ChainComplex c = classical_koszul(r, seq(r, {"x", "x"}));
    FPModule h1 = homology(c, 1);
    CHECK(!h1.is_zero());
  }
}

TEST_CASE("generalized Koszul complexes") {
  auto r = qxy();
  SUBCASE("rank-2 single direction") {
    BoundaryFamily fam = diagonal_family(r, seq(r, {"x"}), 2);
    GeneralizedKoszul gk = generalized_koszul(fam);
    CHECK(gk.total.rank(0) == 2);
    CHECK(gk.total.rank(1) == 2);
    FPModule h0 = homology(gk.total, 0).simplified();
    CHECK(h0.generators() == 1);
    CHECK(annihilator(h0).same_ideal_as(Ideal(r, {P(r, "x")})));
  }
  SUBCASE("rank 1 recovers the classical complex matrix for matrix") {
    auto r3 = PolyRing::make({"x", "y", "z"});
    for (auto fs : {seq(r3, {"x"}), seq(r3, {"x", "y"}), seq(r3, {"x", "y", "z"}),
                    seq(r3, {"x+y", "y+z"})}) {
      BoundaryFamily fam = diagonal_family(r3, fs, 1);
      CHECK(complexes_equal(generalized_koszul(fam).total, classical_koszul(r3, fs)));
    }
  }
  SUBCASE("determinant violations are rejected") {
    BoundaryFamily fam = diagonal_family(r, seq(r, {"x"}), 2);
    fam.maps.at({1, 1}).set(0, 0, P(r, "x*y"));
    CHECK_THROWS_AS(generalized_koszul(fam), CheckError);
  }
  SUBCASE("non-commuting families are rejected") {
    BoundaryFamily fam = diagonal_family(r, seq(r, {"x", "y"}), 2);
    // Break one square without touching determinants.
    RingMatrix m(r, 2, 2);
    m.set(0, 0, P(r, "x"));
    m.set(0, 1, P(r, "1"));
    m.set(1, 1, P(r, "1"));
    fam.maps.at({0b11, 1}) = m;
    CHECK_THROWS_AS(generalized_koszul(fam), CheckError);
  }
}

TEST_CASE("conjugated families stay valid") {
  auto r = qxy();
  testgen::Rng rng(99);
  for (int trial = 0; trial < 5; ++trial) {
    BoundaryFamily fam =
        testgen::random_conjugated_family(r, rng, seq(r, {"x", "y"}), 2 + trial % 2);
    GeneralizedKoszul gk = generalized_koszul(fam);  // validates dets and squares
    CHECK(gk.total.boundaries_compose_to_zero());
  }
}

TEST_CASE("Koszul cube validation") {
  auto r = qxy();
  SUBCASE("worked cube") {
    auto v = validate_koszul_cube(testgen::worked_example_cube(r), seq(r, {"x", "y"}));
    REQUIRE(v.ok);
    CHECK(v.cube->rank == 2);
    CHECK(v.cube->exponents == std::vector<int>{1, 1});
  }
  SUBCASE("typical cube") {
    auto v = validate_koszul_cube(typical_koszul_cube(r, seq(r, {"x", "y"})),
                                  seq(r, {"x", "y"}));
    REQUIRE(v.ok);
    CHECK(v.cube->rank == 1);
    CHECK(v.cube->exponents == std::vector<int>{1, 1});
  }
  SUBCASE("wrong determinant shape is reported") {
    std::map<std::pair<SubsetMask, int>, RingMatrix> boundaries;
    boundaries.emplace(std::make_pair(SubsetMask(1), 1),
                       RingMatrix::diagonal(r, {P(r, "x"), P(r, "y")}));
    Cube cube(r, 1, {2, 2}, std::move(boundaries));
    auto v = validate_koszul_cube(cube, seq(r, {"x"}));
    CHECK(!v.ok);
  }
  SUBCASE("unit multiples are accepted and the unit recorded") {
    std::map<std::pair<SubsetMask, int>, RingMatrix> boundaries;
    RingMatrix neg(r, 1, 1);
    neg.set(0, 0, P(r, "-x"));
    boundaries.emplace(std::make_pair(SubsetMask(1), 1), neg);
    Cube cube(r, 1, {1, 1}, std::move(boundaries));
    auto v = validate_koszul_cube(cube, seq(r, {"x"}));
    REQUIRE(v.ok);
    CHECK(v.cube->exponents == std::vector<int>{1});
    CHECK(v.cube->units == std::vector<Rational>{Rational(-1)});
  }
  SUBCASE("non-A-sequence targets are rejected") {
    GeneralizedKoszul gk = generalized_koszul(diagonal_family(r, seq(r, {"x", "x*y"}), 1));
    auto v = validate_koszul_cube(gk.cube, seq(r, {"x", "x*y"}));
    CHECK(!v.ok);
  }
  SUBCASE("exponent mismatch across one direction is reported") {
    // Direction-1 determinants are x and x^2; the squares still commute.
    std::map<std::pair<SubsetMask, int>, RingMatrix> boundaries;
    boundaries.emplace(std::make_pair(SubsetMask(0b01), 1),
                       RingMatrix::diagonal(r, {P(r, "x"), P(r, "1")}));
    boundaries.emplace(std::make_pair(SubsetMask(0b11), 1),
                       RingMatrix::diagonal(r, {P(r, "x"), P(r, "x")}));
    boundaries.emplace(std::make_pair(SubsetMask(0b10), 2),
                       RingMatrix::diagonal(r, {P(r, "y"), P(r, "y")}));
    boundaries.emplace(std::make_pair(SubsetMask(0b11), 2),
                       RingMatrix::diagonal(r, {P(r, "y"), P(r, "x*y")}));
    Cube cube(r, 2, {2, 2, 2, 2}, std::move(boundaries));
    REQUIRE(!validate(cube));
    auto v = validate_koszul_cube(cube, seq(r, {"x", "y"}));
    CHECK(!v.ok);
  }
}

TEST_CASE("Buchsbaum-Eisenbud test") {
  auto r = qxy();
  SUBCASE("injective diagonal passes") {
    BeReport rep = be_check(two_term(r, RingMatrix::diagonal(r, {P(r, "x"), P(r, "1")})));
    REQUIRE(rep.error.empty());
    CHECK(rep.ok);
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.rows[0].r == 2);
    CHECK(rep.rows[0].grade_value == 1);
  }
  SUBCASE("proportional rows fail") {
    RingMatrix m = RingMatrix::from_rows(r, {{P(r, "x"), P(r, "y")}, {P(r, "x"), P(r, "y")}});
    BeReport rep = be_check(two_term(r, m));
    CHECK(!rep.ok);
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.rows[0].r == 2);
    CHECK(rep.rows[0].grade_value == 0);
  }
  SUBCASE("classical Koszul complex of a regular pair") {
    BeReport rep = be_check(classical_koszul(r, seq(r, {"x", "y"})));
    REQUIRE(rep.rows.size() == 2);
    CHECK(rep.ok);
    CHECK(rep.rows[0].i == 1);
    CHECK(rep.rows[0].r == 1);
    CHECK(rep.rows[0].grade_value == 2);
    CHECK(rep.rows[1].i == 2);
    CHECK(rep.rows[1].r == 1);
    CHECK(rep.rows[1].grade_value == 2);
  }
}

TEST_CASE("be_check agrees with direct homology vanishing") {
  auto r = qxy();
  testgen::Rng rng(2024);
  int broken_seen = 0;
  for (int trial = 0; trial < 20; ++trial) {
    RingMatrix m(r, 2, 2);
    if (trial % 2 == 0) {
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m.set(i, j, testgen::random_polynomial(r, rng, 2));
    } else {
      // Proportional rows: deliberately rank deficient.
      Polynomial a = testgen::random_polynomial(r, rng, 1);
      Polynomial b = testgen::random_polynomial(r, rng, 1);
      Polynomial s = testgen::random_polynomial(r, rng, 1);
      m.set(0, 0, a);
      m.set(0, 1, b);
      m.set(1, 0, s * a);
      m.set(1, 1, s * b);
    }
    ChainComplex c = two_term(r, m);
    BeReport rep = be_check(c);
    bool spherical = is_spherical(c, 0);
    CHECK(rep.ok == spherical);
    if (!spherical) ++broken_seen;
    // Single-entry mutation, re-run both.
    RingMatrix mutated = m;
    mutated.set(0, 0, m.at(0, 0) + P(r, "x"));
    ChainComplex cm = two_term(r, mutated);
    CHECK(be_check(cm).ok == is_spherical(cm, 0));
  }
  CHECK(broken_seen >= 1);
}

TEST_CASE("resolution criterion harness") {
  auto r = qxy();
  SUBCASE("diagonal single-direction family") {
    ResolReport rep = resolcriterion_check(diagonal_family(r, seq(r, {"x"}), 2));
    CHECK(rep.targets_regular);
    CHECK(rep.be.ok);
    CHECK(rep.spherical);
    CHECK(rep.agree);
  }
  SUBCASE("random conjugates of a regular pair") {
    testgen::Rng rng(7);
    for (int trial = 0; trial < 3; ++trial) {
      ResolReport rep = resolcriterion_check(
          testgen::random_conjugated_family(r, rng, seq(r, {"x", "y"}), 2));
      CHECK(rep.targets_regular);
      CHECK(rep.be.ok);
      CHECK(rep.spherical);
      CHECK(rep.agree);
    }
  }
  SUBCASE("non-regular targets fail both checks coherently") {
    ResolReport rep = resolcriterion_check(diagonal_family(r, seq(r, {"x", "x"}), 1));
    CHECK(!rep.targets_regular);
    CHECK(!rep.be.ok);
    CHECK(!rep.spherical);
    CHECK(rep.agree);
  }
}

TEST_CASE("admissibility criterion harness") {
  auto r = qxy();
  CHECK(admcriterion_check(diagonal_family(r, seq(r, {"x", "y"}), 1)).admissibility.admissible);
  AdmReport diag2 = admcriterion_check(diagonal_family(r, seq(r, {"x", "y"}), 2));
  CHECK(diag2.targets_a_sequence);
  CHECK(diag2.admissibility.admissible);
  AdmReport bad = admcriterion_check(diagonal_family(r, seq(r, {"x", "x"}), 1));
  CHECK(!bad.targets_a_sequence);
}

TEST_CASE("boundary condition lemma") {
  auto r = qxy();
  SUBCASE("diag(x, 1) against f = x") {
    BoundaryLemmaReport rep =
        boundary_condition_check(RingMatrix::diagonal(r, {P(r, "x"), P(r, "1")}), P(r, "x"));
    CHECK(rep.applicable);
    CHECK(rep.power.exponent == 1);
    CHECK(rep.injective);
    CHECK(rep.supported_on_vf);
    CHECK(rep.pd_at_most_one);
    CHECK(rep.ok());
  }
  SUBCASE("diag(x, y) against f = x is not applicable") {
    BoundaryLemmaReport rep =
        boundary_condition_check(RingMatrix::diagonal(r, {P(r, "x"), P(r, "y")}), P(r, "x"));
    CHECK(!rep.applicable);
    CHECK(!rep.ok());
  }
  SUBCASE("1x1 case") {
    RingMatrix m(r, 1, 1);
    m.set(0, 0, P(r, "x"));
    CHECK(boundary_condition_check(m, P(r, "x")).ok());
  }
}
