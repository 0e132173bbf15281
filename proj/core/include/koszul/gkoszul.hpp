#pragma once

#include "koszul/complex.hpp"
#include "koszul/cube.hpp"
#include "koszul/gb.hpp"
#include "koszul/matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace koszul {

/// Family of endomorphisms d_S^j of A^rank indexed by subsets S of {1..n}
/// and j in S, with prescribed determinants det d_S^j = targets[j-1].
struct BoundaryFamily {
  RingPtr ring;
  int directions = 0;
  std::size_t rank = 0;
  std::vector<Polynomial> targets;
  std::map<std::pair<SubsetMask, int>, RingMatrix> maps;
};

/// Classical Koszul complex of (f_1..f_n): degree-k rank C(n,k) on the basis
/// of k-subsets in tuple-lexicographic order; the boundary deletes the p-th
/// listed element with sign (-1)^(k-p) and multiplies by its f.
ChainComplex classical_koszul(const RingPtr& ring, std::span<const Polynomial> fs);

struct GeneralizedKoszul {
  Cube cube;
  ChainComplex total;
};

/// Builds the n-cube with vertices A^rank and the family's boundaries, then
/// totalizes. Every determinant is recomputed and the cube is validated;
/// violations throw CheckError.
GeneralizedKoszul generalized_koszul(const BoundaryFamily& family);

/// Koszul cube: constant vertex rank, direction-s determinants associate to
/// f_s^(m_s) with one exponent per direction, targets an A-sequence.
struct KoszulCube {
  Cube cube;
  std::vector<Polynomial> sequence;
  std::vector<int> exponents;      // m_s per direction
  std::vector<Rational> units;     // unit of det d^s_{S} relative to f_s^(m_s) at S={s}
  std::size_t rank = 0;
};

struct KoszulCubeValidation {
  bool ok = false;
  std::string violation;
  std::optional<KoszulCube> cube;
};

KoszulCubeValidation validate_koszul_cube(const Cube& cube, std::span<const Polynomial> fs);

struct BeRow {
  int i = 0;
  int r = 0;
  bool grade_infinite = false;  // minors ideal is the unit ideal
  int grade_value = 0;
  bool pass = false;
};

struct BeReport {
  bool ok = false;
  std::vector<BeRow> rows;
  std::string error;  // nonempty for malformed input (support not 0-based, ...)
};

/// Buchsbaum-Eisenbud 0-sphericality test: with r_i the alternating partial
/// rank sums, checks grade I_{r_i}(d_i) >= i for every i in 1..s.
BeReport be_check(const ChainComplex& complex);

struct ResolReport {
  bool targets_regular = false;
  BeReport be;
  bool spherical = false;
  bool agree = false;  // be.ok == spherical
};

/// Cross-validates be_check against direct homology vanishing on the
/// totalization of the family's cube.
ResolReport resolcriterion_check(const BoundaryFamily& family);

struct AdmReport {
  bool targets_a_sequence = false;
  AdmissibilityReport admissibility;  // meaningful only when the hypothesis holds
};

AdmReport admcriterion_check(const BoundaryFamily& family);

struct BoundaryLemmaReport {
  bool applicable = false;  // det psi is an associate power of f
  AssociatePower power;
  bool injective = false;
  bool supported_on_vf = false;  // f in sqrt(Fitt_0(coker psi))
  bool pd_at_most_one = false;   // exhibited by the square free presentation
  bool ok() const { return applicable && injective && supported_on_vf && pd_at_most_one; }
};

BoundaryLemmaReport boundary_condition_check(const RingMatrix& psi, const Polynomial& f);

}  // namespace koszul
