#pragma once

#include "koszul/cube.hpp"
#include "koszul/fpmodule.hpp"
#include "koszul/matrix.hpp"

#include <map>
#include <vector>

namespace koszul {

/// Bounded multi-complex of free modules: modules indexed by multidegrees
/// f: {1..dims} -> Z, boundaries d^s_f: x_f -> x_{f - delta_s} satisfying
/// d^s d^s = 0 and d^t d^s + d^s d^t = 0.
class MultiComplex {
public:
  MultiComplex(RingPtr ring, int dims, std::map<std::vector<int>, int> ranks,
               std::map<std::pair<std::vector<int>, int>, RingMatrix> boundaries);

  const RingPtr& ring() const { return ring_; }
  int dims() const { return dims_; }
  const std::map<std::vector<int>, int>& support() const { return ranks_; }
  int rank(const std::vector<int>& degree) const;  // 0 off support
  bool has_boundary(const std::vector<int>& degree, int direction) const;
  const RingMatrix& boundary(const std::vector<int>& degree, int direction) const;

private:
  RingPtr ring_;
  int dims_;
  std::map<std::vector<int>, int> ranks_;
  std::map<std::pair<std::vector<int>, int>, RingMatrix> boundaries_;
};

struct MultiComplexViolation {
  std::vector<int> degree;
  int s = 0, t = 0;  // t == 0 for a d*d failure in direction s
  std::string detail;
};

/// Both multi-complex identities, checked exactly at every stored degree.
std::optional<MultiComplexViolation> validate(const MultiComplex& mc);

/// Cube placed at multidegrees {0,1}^S with the sign twist
/// d' = (-1)^(number of directions t > k in T) d^k_T; the result is verified
/// to satisfy both identities. Requires a valid cube.
MultiComplex multicomplex_from_cube(const Cube& cube);

/// Single-graded bounded complex of free modules; boundary(k) maps degree k
/// to degree k-1.
class ChainComplex {
public:
  ChainComplex(RingPtr ring, int lo, std::vector<int> ranks, std::vector<RingMatrix> maps);

  const RingPtr& ring() const { return ring_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
  int rank(int degree) const;  // 0 outside support
  bool has_boundary(int degree) const { return degree > lo() && degree <= hi(); }
  const RingMatrix& boundary(int degree) const;

  bool boundaries_compose_to_zero() const;

private:
  RingPtr ring_;
  int lo_;
  std::vector<int> ranks_;       // ranks_[i] = rank at degree lo_ + i
  std::vector<RingMatrix> maps_;  // maps_[i] = d_{lo_+i+1}
};

/// Degree-n part is the direct sum over multidegrees of total degree n,
/// components ordered lexicographically descending; boundary blocks are the
/// stored (already signed) maps. d*d = 0 is verified.
ChainComplex total_complex(const MultiComplex& mc);

/// Presentation of ker(d_k)/im(d_{k+1}): generators are a syzygy basis of
/// d_k, relations express the columns of d_{k+1} in that basis.
FPModule homology(const ChainComplex& complex, int degree);

/// Homology vanishes in every degree of the support except n.
bool is_spherical(const ChainComplex& complex, int n);

}  // namespace koszul
