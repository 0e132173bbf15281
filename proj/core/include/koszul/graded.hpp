#pragma once

#include "koszul/fpmodule.hpp"
#include "koszul/matrix.hpp"
#include "koszul/modvec.hpp"

#include <optional>
#include <vector>

namespace koszul {

/// Shifted degree of a homogeneous module vector: every nonzero component i
/// is homogeneous of degree d - shifts[i] for one common d. nullopt when the
/// vector is inhomogeneous; zero vectors report nullopt degree inside an
/// engaged optional.
std::optional<std::optional<int>> shifted_degree(const ModVec& v,
                                                 const std::vector<int>& shifts);

/// Column degrees of a matrix that is homogeneous with respect to the given
/// row shifts; nullopt when some column is inhomogeneous. Zero columns get
/// degree 0 by convention.
std::optional<std::vector<int>> homogeneous_column_degrees(const RingMatrix& m,
                                                           const std::vector<int>& row_shifts);

struct MinimalGens {
  std::vector<ModVec> gens;
  std::vector<int> degrees;
};

/// Minimal homogeneous generating set extracted greedily by degree: a
/// generator is kept iff it is not in the span of those kept before it.
/// nullopt when some generator is inhomogeneous.
std::optional<MinimalGens> minimal_homogeneous_generators(const std::vector<ModVec>& gens,
                                                          const std::vector<int>& shifts);

struct GradedResolution {
  /// maps[0] presents the module (equals the minimized relation matrix);
  /// maps[i] is the i-th syzygy matrix. length == maps.size() when the last
  /// syzygy module is zero.
  std::vector<RingMatrix> maps;
  std::vector<std::vector<int>> shifts;  // shifts of F_0, F_1, ...
  int length = 0;                        // projective dimension
};

/// Minimal graded free resolution of coker(relations) with generator degrees
/// zero; nullopt when the presentation is not homogeneous.
std::optional<GradedResolution> minimal_graded_resolution(const FPModule& module,
                                                          int max_length);

}  // namespace koszul
