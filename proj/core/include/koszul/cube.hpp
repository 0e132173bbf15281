#pragma once

#include "koszul/fpmodule.hpp"
#include "koszul/matrix.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace koszul {

/// Subsets of the direction set {1..n} as bitmasks; bit k-1 represents
/// direction k. n is capped at 16 (cube sizes are 2^n).
using SubsetMask = std::uint32_t;

inline bool mask_contains(SubsetMask mask, int direction) {
  return mask & (SubsetMask(1) << (direction - 1));
}
inline SubsetMask mask_without(SubsetMask mask, int direction) {
  return mask & ~(SubsetMask(1) << (direction - 1));
}
inline SubsetMask mask_with(SubsetMask mask, int direction) {
  return mask | (SubsetMask(1) << (direction - 1));
}
std::vector<int> mask_elements(SubsetMask mask, int dims);
/// Bitstring with leftmost character for direction 1 ("110" = {1,2} in a 3-cube).
std::string mask_bitstring(SubsetMask mask, int dims);
SubsetMask mask_from_bitstring(const std::string& bits);

/// Cube of finite free modules: a contravariant functor on the power set of
/// {1..dims}. boundary(T, k) is the matrix of the map at T removing k, of
/// shape rank(T \ {k}) x rank(T).
class Cube {
public:
  Cube(RingPtr ring, int dims, std::vector<int> vertex_ranks,
       std::map<std::pair<SubsetMask, int>, RingMatrix> boundaries);

  const RingPtr& ring() const { return ring_; }
  int dims() const { return dims_; }
  int vertex_rank(SubsetMask subset) const;
  bool has_boundary(SubsetMask subset, int direction) const;
  const RingMatrix& boundary(SubsetMask subset, int direction) const;

private:
  RingPtr ring_;
  int dims_;
  std::vector<int> ranks_;  // indexed by mask
  std::map<std::pair<SubsetMask, int>, RingMatrix> boundaries_;
};

struct CubeViolation {
  enum class Kind { shape, square } kind = Kind::shape;
  SubsetMask subset = 0;
  int j = 0, k = 0;
  std::string detail;
};

/// Checks every boundary shape and every commuting-square identity
/// d^j_{T\k} d^k_T = d^k_{T\j} d^j_T exactly; reports the first violation.
std::optional<CubeViolation> validate(const Cube& cube);

enum class FaceSide { domain, range };

/// The (dims-1)-cube obtained by fixing direction k on the given side;
/// remaining directions are relabeled order-preserving to 1..dims-1.
Cube face(const Cube& cube, int direction, FaceSide side);

/// All vertex ranks 1, boundary in direction j constantly (f_j).
Cube typical_koszul_cube(const RingPtr& ring, std::span<const Polynomial> fs);

/// Cube of finitely presented modules with generator-level boundary matrices.
class PresentedCube {
public:
  PresentedCube(RingPtr ring, int dims, std::map<SubsetMask, FPModule> vertices,
                std::map<std::pair<SubsetMask, int>, RingMatrix> boundaries);

  const RingPtr& ring() const { return ring_; }
  int dims() const { return dims_; }
  const FPModule& vertex(SubsetMask subset) const;
  const RingMatrix& boundary(SubsetMask subset, int direction) const;

private:
  RingPtr ring_;
  int dims_;
  std::map<SubsetMask, FPModule> vertices_;
  std::map<std::pair<SubsetMask, int>, RingMatrix> boundaries_;
};

/// Free cube viewed as a presented cube (empty relations everywhere).
PresentedCube as_presented(const Cube& cube);

/// k-direction 0-th homology: vertices become cokernels of the direction-k
/// boundaries, remaining boundaries act by the same generator matrices.
/// Induced-map compatibility is re-verified; failures throw.
PresentedCube h0_direction(const PresentedCube& cube, int direction);
PresentedCube h0_direction(const Cube& cube, int direction);

/// k-direction 1-th homology of a free cube: vertices present the kernels of
/// the direction-k boundaries, boundaries are induced by lifting.
PresentedCube h1_direction(const Cube& cube, int direction);

struct AdmissibilityReport {
  bool admissible = true;
  /// Directions (labels of the cube passed in) along which H0 was taken
  /// before the failing boundary was found.
  std::vector<int> chain;
  SubsetMask subset = 0;  // failing boundary, in the labeling after the chain
  int direction = 0;
  std::string str() const;
};

AdmissibilityReport is_admissible(const Cube& cube);
AdmissibilityReport is_admissible(const PresentedCube& cube);

/// Iterated H0 along the listed directions (labels of `cube`, all distinct).
/// Requires an admissible cube.
PresentedCube h0_iterated(const Cube& cube, std::span<const int> order);

/// h0_iterated along a permutation of every direction; the single remaining
/// vertex.
FPModule h0_full(const Cube& cube, std::span<const int> order);

}  // namespace koszul
