#pragma once

#include "koszul/fpmodule.hpp"
#include "koszul/gkoszul.hpp"
#include "koszul/graded.hpp"
#include "koszul/matrix.hpp"

#include <optional>
#include <string>
#include <variant>

namespace koszul {

/// Input data for the weight-two cube construction: an A-sequence (f, g), an
/// n x m matrix U, and an m x m matrix P with U*P divisible by f entrywise
/// and det P an associate power of f.
struct WeightInput {
  Polynomial f, g;
  RingMatrix u, p;
};

enum class WtMembership { member, not_member, unknown };

struct WtReport {
  WtMembership result = WtMembership::unknown;
  bool support_ok = false;
  std::optional<int> projective_dimension;  // engaged when the graded test ran
  std::string detail;
};

/// Pure-weight membership: support via radical membership of each f_i in
/// Fitt_0, projective dimension via a minimal graded free resolution when all
/// data are homogeneous. With require_homogeneous set, inhomogeneous input
/// throws instead of returning unknown.
WtReport wt_membership(const FPModule& module, std::span<const Polynomial> fs,
                       bool require_homogeneous = false);

/// det P = unit * f^e, reporting e; nullopt when not an associate power.
std::optional<AssociatePower> claim1_check(const RingMatrix& p, const Polynomial& f);

struct Claim2Solution {
  RingMatrix x;  // m x n
  RingMatrix v;  // n x n
};

/// Solves U*X = g*E_n + f*V by lifting each g*e_k over the columns of U
/// together with f*e_1..f*e_n; the identity is re-verified by expansion.
/// nullopt when g does not annihilate coker([f*E_n | U]).
std::optional<Claim2Solution> solve_claim2(const Polynomial& f, const Polynomial& g,
                                           const RingMatrix& u);

/// [[f*V, U], [X, E_m]]; verifies det = (-g)^n exactly, throws CheckError
/// otherwise.
RingMatrix assemble_ubar(const Polynomial& f, const Polynomial& g, const RingMatrix& v,
                         const RingMatrix& u, const RingMatrix& x);

struct Wt2Certificate {
  KoszulCube cube;        // 2-cube with vertices A^(n+m)
  FPModule module;        // coker([f*E_n | U])
  RingMatrix comparison;  // generator-level iso H0(Tot cube) -> module
  int exponent_f = 0, exponent_g = 0;
  Polynomial f, g;  // the powers actually used
  RingMatrix u, p, x, v, w, ubar, top;
};

/// Builds and fully verifies the weight-two Koszul cube from presentation
/// data; every failed identity throws CheckError naming it.
Wt2Certificate build_wt2_cube(const WeightInput& input);

struct ResolveFailure {
  std::string stage;  // "homogeneity", "hypothesis", "annihilation", "pd", ...
  std::string detail;
};

/// The constructive direction: from a homogeneous module killed by powers of
/// the A-sequence (f, g), produce a certified Koszul 2-cube resolving it.
std::variant<Wt2Certificate, ResolveFailure> resolve_wt2(const FPModule& module,
                                                         const Polynomial& f,
                                                         const Polynomial& g);

}  // namespace koszul
