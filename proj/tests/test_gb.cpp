#include <doctest.h>

#include <koszul/fpmodule.hpp>
#include <koszul/gb.hpp>
#include <koszul/graded.hpp>
#include <koszul/matrix.hpp>

#include "generators.hpp"
#include "oracle.hpp"

#include <algorithm>
#include <random>

using namespace koszul;

namespace {

RingPtr qxy() { return PolyRing::make({"x", "y"}); }

Polynomial P(const RingPtr& r, const std::string& s) { return Polynomial::parse(r, s); }

std::vector<Polynomial> gb(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> v;
  for (auto* s : gens) v.push_back(P(r, s));
  return groebner_basis(r, v);
}

}  // namespace

TEST_CASE("reduced groebner bases") {
  auto r = qxy();
  SUBCASE("already a basis") {
    auto b = gb(r, {"x^2", "x*y"});
    REQUIRE(b.size() == 2);
    CHECK(b[0] == P(r, "x^2"));
    CHECK(b[1] == P(r, "x*y"));
  }
  SUBCASE("linear elimination") {
    auto b = gb(r, {"x+y", "x-y"});
    REQUIRE(b.size() == 2);
    CHECK(b[0] == P(r, "x"));
    CHECK(b[1] == P(r, "y"));
  }
  SUBCASE("zero ideal") { CHECK(gb(r, {"0"}).empty()); }
}

TEST_CASE("reduced basis is independent of generator order") {
  auto r = PolyRing::make({"x", "y", "z"});
  std::vector<Polynomial> gens{P(r, "x^2*y - z"), P(r, "y^2 - x*z"), P(r, "x*z^2 - y"),
                               P(r, "x + y + z")};
  auto expected = groebner_basis(r, gens);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 6; ++i) {
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(groebner_basis(r, gens) == expected);
  }
}

TEST_CASE("normal form") {
  auto r = qxy();
  auto b = gb(r, {"x^2", "x*y"});
  CHECK(normal_form(P(r, "x^2*y"), b).is_zero());
  CHECK(normal_form(P(r, "y^2"), b) == P(r, "y^2"));
  auto bx = gb(r, {"x"});
  CHECK(normal_form(P(r, "x+y"), bx) == P(r, "y"));
}

TEST_CASE("lift produces verified coefficient vectors") {
  auto r = qxy();
  std::vector<Polynomial> gens{P(r, "x+y"), P(r, "x")};
  auto c = lift(P(r, "y^2"), gens);
  REQUIRE(c);
  CHECK((*c)[0] == P(r, "y"));
  CHECK((*c)[1] == P(r, "-y"));
  CHECK(((*c)[0] * gens[0] + (*c)[1] * gens[1]) == P(r, "y^2"));

  std::vector<Polynomial> just_x{P(r, "x")};
  auto one = lift(P(r, "x"), just_x);
  REQUIRE(one);
  CHECK((*one)[0] == P(r, "1"));

  std::vector<Polynomial> maximal{P(r, "x"), P(r, "y")};
  CHECK(!lift(P(r, "1"), maximal));
}

TEST_CASE("normal_form vanishes exactly when lift succeeds") {
  auto r = PolyRing::make({"x", "y", "z"});
  testgen::Rng rng(31);
  for (int i = 0; i < 25; ++i) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(testgen::random_polynomial(r, rng, 2));
    Polynomial v = testgen::random_polynomial(r, rng, 3);
    auto basis = groebner_basis(r, gens);
    bool nf_zero = normal_form(v, basis).is_zero();
    auto c = lift(v, gens);
    CHECK(nf_zero == c.has_value());
    if (c) {
      Polynomial acc(r);
      for (std::size_t j = 0; j < gens.size(); ++j) acc = acc + (*c)[j] * gens[j];
      CHECK(acc == v);
    }
  }
}

TEST_CASE("syzygies") {
  auto r = qxy();
  SUBCASE("single relation of x, y") {
    std::vector<Polynomial> gens{P(r, "x"), P(r, "y")};
    auto s = syzygies(gens);
    REQUIRE(s.size() == 1);
    CHECK(s[0].component(0) == P(r, "y"));
    CHECK(s[0].component(1) == P(r, "-x"));
  }
  SUBCASE("free basis has no relations") {
    std::vector<ModVec> gens{ModVec::unit(r, 2, 0), ModVec::unit(r, 2, 1)};
    CHECK(syzygies(r, 2, gens).empty());
  }
  SUBCASE("repeated generator") {
    std::vector<Polynomial> gens{P(r, "x"), P(r, "x")};
    auto s = syzygies(gens);
    REQUIRE(s.size() == 1);
    CHECK(s[0].component(0) == P(r, "1"));
    CHECK(s[0].component(1) == P(r, "-1"));
  }
}

TEST_CASE("ideal quotients") {
  auto r = qxy();
  Ideal x_ideal(r, {P(r, "x")});
  CHECK(ideal_quotient(x_ideal, P(r, "y")).same_ideal_as(x_ideal));
  Ideal xy_ideal(r, {P(r, "x*y")});
  Ideal quotient = ideal_quotient(xy_ideal, P(r, "y"));
  CHECK(quotient.same_ideal_as(x_ideal));
  // Both inclusions, checked by membership.
  CHECK(quotient.contains(P(r, "x")));
  CHECK(x_ideal.contains(quotient.reduced_basis().front()));
  CHECK(ideal_quotient(x_ideal, P(r, "x")).is_unit());
  CHECK_THROWS_AS(ideal_quotient(x_ideal, Polynomial(r)), std::invalid_argument);
}

TEST_CASE("quotient contains the ideal; equality detects non-zero-divisors") {
  auto r = qxy();
  testgen::Rng rng(17);
  for (int i = 0; i < 15; ++i) {
    Ideal ideal(r, {testgen::random_polynomial(r, rng, 2), testgen::random_polynomial(r, rng, 2)});
    Polynomial f = testgen::random_polynomial(r, rng, 2);
    if (f.is_zero()) continue;
    Ideal quotient = ideal_quotient(ideal, f);
    for (const auto& g : ideal.generators()) CHECK(quotient.contains(g));
  }
}

TEST_CASE("regular sequences") {
  auto r = qxy();
  std::vector<Polynomial> xy{P(r, "x"), P(r, "y")};
  CHECK(is_regular_sequence(r, xy));
  std::vector<Polynomial> xx{P(r, "x"), P(r, "x")};
  CHECK(!is_regular_sequence(r, xx));
  std::vector<Polynomial> bad{P(r, "x*y"), P(r, "x")};
  CHECK(!is_regular_sequence(r, bad));
  CHECK(is_regular_sequence(r, std::vector<Polynomial>{}));
}

TEST_CASE("A-sequences") {
  auto r = qxy();
  std::vector<Polynomial> xy{P(r, "x"), P(r, "y")};
  CHECK(is_A_sequence(r, xy));
  std::vector<Polynomial> xx{P(r, "x"), P(r, "x")};
  CHECK(!is_A_sequence(r, xx));
  auto q1 = PolyRing::make({"x"});
  // Both quotients are fields, but (x-1, x) is the unit ideal, so the
  // properness clause rules the sequence out in every order.
  std::vector<Polynomial> shifted{P(q1, "x-1"), P(q1, "x")};
  CHECK(!is_A_sequence(q1, shifted));
  std::vector<Polynomial> mixed{P(q1, "x^2-x"), P(q1, "x")};
  CHECK(!is_A_sequence(q1, mixed));
}

TEST_CASE("dimension and grade") {
  auto r = qxy();
  CHECK(dim_quotient(Ideal(r, {P(r, "x^2"), P(r, "x*y")})) == 1);
  CHECK(dim_quotient(Ideal::unit(r)) == -1);
  CHECK(dim_quotient(Ideal::zero(r)) == 2);
  CHECK(grade(Ideal(r, {P(r, "x")})) == 1);
  CHECK(grade(Ideal(r, {P(r, "x"), P(r, "y")})) == 2);
  CHECK(grade(Ideal(r, {P(r, "x*y")})) == 1);
  CHECK(grade(Ideal::zero(r)) == 0);
  CHECK(grade(Ideal::unit(r)) == 3);  // +infinity sentinel: nvars + 1
}

TEST_CASE("grade equals length on verified regular sequences") {
  auto r = PolyRing::make({"x", "y", "z"});
  std::vector<std::vector<const char*>> seqs{{"x"}, {"x", "y"}, {"x", "y", "z"},
                                             {"x+y", "y+z"}, {"x^2", "y^2", "z^2"}};
  for (const auto& seq : seqs) {
    std::vector<Polynomial> fs;
    for (auto* s : seq) fs.push_back(P(r, s));
    REQUIRE(is_regular_sequence(r, fs));
    CHECK(grade(Ideal(r, fs)) == static_cast<int>(fs.size()));
  }
}

TEST_CASE("radical membership") {
  auto r = qxy();
  CHECK(radical_membership(P(r, "x"), Ideal(r, {P(r, "x^2")})));
  CHECK(!radical_membership(P(r, "y"), Ideal(r, {P(r, "x^2")})));
  Ideal squares(r, {P(r, "x^2"), P(r, "y^2")});
  CHECK(radical_membership(P(r, "x+y"), squares));
  // (x+y)^3 lands in (x^2, y^2): direct expansion witness.
  CHECK(squares.contains(pow(P(r, "x+y"), 3)));
}

TEST_CASE("finitely presented module basics") {
  auto r = qxy();
  SUBCASE("coker(identity) is zero") {
    CHECK(FPModule::cokernel(RingMatrix::identity(r, 2)).is_zero());
  }
  SUBCASE("coker [x y] is not zero") {
    RingMatrix rel(r, 1, 2);
    rel.set(0, 0, P(r, "x"));
    rel.set(0, 1, P(r, "y"));
    CHECK(!FPModule::cokernel(rel).is_zero());
  }
  SUBCASE("unit pivot reduction") {
    RingMatrix rel(r, 2, 2);
    rel.set(0, 0, P(r, "x"));
    rel.set(0, 1, P(r, "1"));
    rel.set(1, 1, P(r, "1"));
    FPModule m = FPModule::cokernel(rel);
    CHECK(!m.is_zero());
    FPModule s = m.simplified();
    CHECK(s.generators() == 1);
    REQUIRE(s.relations().cols() == 1);
    CHECK((s.relations().at(0, 0) == P(r, "x") || s.relations().at(0, 0) == P(r, "-x")));
  }
}

TEST_CASE("kernels and isomorphisms of presented modules") {
  auto r = qxy();
  RingMatrix relx(r, 1, 1);
  relx.set(0, 0, P(r, "x"));
  FPModule ax = FPModule::cokernel(relx);  // A/(x)

  SUBCASE("multiplication by a non-zero-divisor has zero kernel") {
    RingMatrix g(r, 1, 1);
    g.set(0, 0, P(r, "y"));
    CHECK(kernel_of_hom(ax, ax, g).is_zero());
  }
  SUBCASE("multiplication by x kills A/(x)") {
    RingMatrix g(r, 1, 1);
    g.set(0, 0, P(r, "x"));
    FPModule k = kernel_of_hom(ax, ax, g);
    CHECK(!k.is_zero());
    // The kernel is all of A/(x): annihilated exactly by (x).
    CHECK(annihilator(k).same_ideal_as(Ideal(r, {P(r, "x")})));
  }
  SUBCASE("x: A -> A is injective") {
    FPModule free1 = FPModule::free_module(r, 1);
    RingMatrix g(r, 1, 1);
    g.set(0, 0, P(r, "x"));
    CHECK(kernel_of_hom(free1, free1, g).is_zero());
  }
  SUBCASE("identity is an isomorphism") {
    RingMatrix rel(r, 1, 2);
    rel.set(0, 0, P(r, "x"));
    rel.set(0, 1, P(r, "y"));
    FPModule m = FPModule::cokernel(rel);
    CHECK(iso_check(m, m, RingMatrix::identity(r, 1)));
  }
  SUBCASE("x on A/(x^2) is not an isomorphism") {
    RingMatrix rel(r, 1, 1);
    rel.set(0, 0, P(r, "x^2"));
    FPModule m = FPModule::cokernel(rel);
    RingMatrix g(r, 1, 1);
    g.set(0, 0, P(r, "x"));
    CHECK(hom_compatible(m, m, g));
    CHECK(!iso_check(m, m, g));
  }
  SUBCASE("iso_check(M, M, id) holds for assorted presentations") {
    testgen::Rng rng(23);
    for (int i = 0; i < 8; ++i) {
      RingMatrix rel(r, 2, 2);
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
          rel.set(a, b, testgen::random_polynomial(r, rng, 2));
      FPModule m = FPModule::cokernel(rel);
      CHECK(iso_check(m, m, RingMatrix::identity(r, 2)));
    }
  }
}

TEST_CASE("annihilators") {
  auto r = qxy();
  RingMatrix relx(r, 1, 1);
  relx.set(0, 0, P(r, "x"));
  CHECK(annihilator(FPModule::cokernel(relx)).same_ideal_as(Ideal(r, {P(r, "x")})));

  RingMatrix diag(r, 2, 2);
  diag.set(0, 0, P(r, "x"));
  diag.set(1, 1, P(r, "y"));
  CHECK(annihilator(FPModule::cokernel(diag)).same_ideal_as(Ideal(r, {P(r, "x*y")})));

  CHECK(annihilator(FPModule::free_module(r, 1)).is_zero());
}

TEST_CASE("graded piece dimensions match the dense oracle") {
  auto r = PolyRing::make({"x", "y", "z"});
  testgen::Rng rng(20250810);
  constexpr int kDegreeBound = 6;

  for (int trial = 0; trial < 12; ++trial) {
    // Homogeneous ideal case.
    std::vector<ModVec> gens;
    int count = 2 + static_cast<int>(rng() % 2);
    for (int i = 0; i < count; ++i) {
      Polynomial f = testgen::random_homogeneous(r, rng, 1 + static_cast<int>(rng() % 3), 3);
      gens.push_back(ModVec::from_components({f}));
    }
    auto basis = groebner_basis(r, 1, gens);
    auto syz = syzygies(r, 1, gens);
    std::vector<int> gen_degrees;
    for (const auto& g : gens) {
      auto d = shifted_degree(g, std::vector<int>(1, 0));
      REQUIRE(d);
      gen_degrees.push_back(d->value_or(0));
    }
    for (int d = 0; d <= kDegreeBound; ++d) {
      CHECK(oracle::span_piece_dim(r, 1, gens, d) ==
            oracle::piece_dim_from_leads(r, 1, basis, {0}, d));
      CHECK(oracle::syzygy_piece_dim(r, 1, gens, d) ==
            oracle::piece_dim_from_leads(r, static_cast<std::uint32_t>(gens.size()), syz,
                                         gen_degrees, d));
    }
  }

  // The lex path through the same cross-check.
  auto rlex = PolyRing::make({"x", "y", "z"}, TermOrder::lex);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<ModVec> gens;
    for (int i = 0; i < 2; ++i) {
      Polynomial f = testgen::random_homogeneous(rlex, rng, 1 + static_cast<int>(rng() % 2), 3);
      gens.push_back(ModVec::from_components({f}));
    }
    auto basis = groebner_basis(rlex, 1, gens);
    auto syz = syzygies(rlex, 1, gens);
    std::vector<int> gen_degrees;
    for (const auto& g : gens) {
      auto d = shifted_degree(g, std::vector<int>(1, 0));
      REQUIRE(d);
      gen_degrees.push_back(d->value_or(0));
    }
    for (int d = 0; d <= kDegreeBound; ++d) {
      CHECK(oracle::span_piece_dim(rlex, 1, gens, d) ==
            oracle::piece_dim_from_leads(rlex, 1, basis, {0}, d));
      CHECK(oracle::syzygy_piece_dim(rlex, 1, gens, d) ==
            oracle::piece_dim_from_leads(rlex, static_cast<std::uint32_t>(gens.size()), syz,
                                         gen_degrees, d));
    }
  }

  for (int trial = 0; trial < 6; ++trial) {
    // Homogeneous submodule of A^2 with zero ambient shifts.
    std::vector<ModVec> gens;
    int count = 2 + static_cast<int>(rng() % 2);
    for (int i = 0; i < count; ++i) {
      int deg = 1 + static_cast<int>(rng() % 2);
      gens.push_back(ModVec::from_components({testgen::random_homogeneous(r, rng, deg, 2),
                                              testgen::random_homogeneous(r, rng, deg, 2)}));
    }
    auto basis = groebner_basis(r, 2, gens);
    auto syz = syzygies(r, 2, gens);
    std::vector<int> gen_degrees;
    for (const auto& g : gens) {
      auto d = shifted_degree(g, std::vector<int>(2, 0));
      REQUIRE(d);
      gen_degrees.push_back(d->value_or(0));
    }
    for (int d = 0; d <= kDegreeBound; ++d) {
      CHECK(oracle::span_piece_dim(r, 2, gens, d) ==
            oracle::piece_dim_from_leads(r, 2, basis, {0, 0}, d));
      CHECK(oracle::syzygy_piece_dim(r, 2, gens, d) ==
            oracle::piece_dim_from_leads(r, static_cast<std::uint32_t>(gens.size()), syz,
                                         gen_degrees, d));
    }
  }
}
