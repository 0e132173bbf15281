#include "koszul/complex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace koszul {

MultiComplex::MultiComplex(RingPtr ring, int dims, std::map<std::vector<int>, int> ranks,
                           std::map<std::pair<std::vector<int>, int>, RingMatrix> boundaries)
    : ring_(std::move(ring)), dims_(dims), ranks_(std::move(ranks)),
      boundaries_(std::move(boundaries)) {
  for (const auto& [deg, r] : ranks_) {
    if (static_cast<int>(deg.size()) != dims_)
      throw std::invalid_argument("MultiComplex: multidegree arity mismatch");
    if (r < 0) throw std::invalid_argument("MultiComplex: negative rank");
  }
  for (const auto& [key, mat] : boundaries_) {
    const auto& [deg, s] = key;
    if (s < 1 || s > dims_) throw std::invalid_argument("MultiComplex: direction out of range");
    std::vector<int> target = deg;
    target[s - 1] -= 1;
    if (mat.rows() != static_cast<std::size_t>(rank(target)) ||
        mat.cols() != static_cast<std::size_t>(rank(deg)))
      throw std::invalid_argument("MultiComplex: boundary shape mismatch");
  }
}

int MultiComplex::rank(const std::vector<int>& degree) const {
  auto it = ranks_.find(degree);
  return it == ranks_.end() ? 0 : it->second;
}

bool MultiComplex::has_boundary(const std::vector<int>& degree, int direction) const {
  return boundaries_.count({degree, direction}) > 0;
}

const RingMatrix& MultiComplex::boundary(const std::vector<int>& degree, int direction) const {
  auto it = boundaries_.find({degree, direction});
  if (it == boundaries_.end()) throw std::invalid_argument("MultiComplex: missing boundary");
  return it->second;
}

namespace {

std::vector<int> shifted(const std::vector<int>& degree, int direction, int delta) {
  std::vector<int> out = degree;
  out[direction - 1] += delta;
  return out;
}

// Composite d^s_{g} after d^t_{f} where g = f - delta_t; zero matrix when a
// factor is absent.
RingMatrix path(const MultiComplex& mc, const std::vector<int>& f, int t, int s) {
  std::vector<int> g = shifted(f, t, -1);
  std::vector<int> h = shifted(g, s, -1);
  if (mc.has_boundary(f, t) && mc.has_boundary(g, s)) return mc.boundary(g, s) * mc.boundary(f, t);
  return RingMatrix(mc.ring(), static_cast<std::size_t>(mc.rank(h)),
                    static_cast<std::size_t>(mc.rank(f)));
}

}  // namespace

std::optional<MultiComplexViolation> validate(const MultiComplex& mc) {
  for (const auto& [deg, r] : mc.support()) {
    for (int s = 1; s <= mc.dims(); ++s) {
      if (!path(mc, deg, s, s).is_zero())
        return MultiComplexViolation{deg, s, 0, "d compose d is nonzero"};
      for (int t = s + 1; t <= mc.dims(); ++t) {
        RingMatrix sum = path(mc, deg, s, t) + path(mc, deg, t, s);
        if (!sum.is_zero())
          return MultiComplexViolation{deg, s, t, "anticommutation fails"};
      }
    }
  }
  return std::nullopt;
}

MultiComplex multicomplex_from_cube(const Cube& cube) {
  if (auto v = validate(cube))
    throw CheckError("multicomplex_from_cube: invalid cube: " + v->detail);
  const int n = cube.dims();
  std::map<std::vector<int>, int> ranks;
  std::map<std::pair<std::vector<int>, int>, RingMatrix> boundaries;
  for (SubsetMask subset = 0; subset < (SubsetMask(1) << n); ++subset) {
    std::vector<int> deg(n, 0);
    for (int k = 1; k <= n; ++k)
      if (mask_contains(subset, k)) deg[k - 1] = 1;
    ranks.emplace(deg, cube.vertex_rank(subset));
    for (int k = 1; k <= n; ++k) {
      if (!mask_contains(subset, k)) continue;
      int count_above = 0;
      for (int t = k + 1; t <= n; ++t)
        if (mask_contains(subset, t)) ++count_above;
      RingMatrix d = cube.boundary(subset, k);
      if (count_above % 2 == 1) d = -d;
      boundaries.emplace(std::make_pair(deg, k), std::move(d));
    }
  }
  MultiComplex mc(cube.ring(), n, std::move(ranks), std::move(boundaries));
  if (auto v = validate(mc))
    throw std::logic_error("multicomplex_from_cube: sign verification failed: " + v->detail);
  return mc;
}

ChainComplex::ChainComplex(RingPtr ring, int lo, std::vector<int> ranks,
                           std::vector<RingMatrix> maps)
    : ring_(std::move(ring)), lo_(lo), ranks_(std::move(ranks)), maps_(std::move(maps)) {
  if (ranks_.empty()) throw std::invalid_argument("ChainComplex: empty support");
  if (maps_.size() + 1 != ranks_.size())
    throw std::invalid_argument("ChainComplex: need one boundary per adjacent degree pair");
  for (std::size_t i = 0; i < maps_.size(); ++i)
    if (maps_[i].rows() != static_cast<std::size_t>(ranks_[i]) ||
        maps_[i].cols() != static_cast<std::size_t>(ranks_[i + 1]))
      throw std::invalid_argument("ChainComplex: boundary shape mismatch");
}

int ChainComplex::rank(int degree) const {
  if (degree < lo() || degree > hi()) return 0;
  return ranks_[static_cast<std::size_t>(degree - lo_)];
}

const RingMatrix& ChainComplex::boundary(int degree) const {
  if (!has_boundary(degree)) throw std::invalid_argument("ChainComplex: no boundary there");
  return maps_[static_cast<std::size_t>(degree - lo_ - 1)];
}

bool ChainComplex::boundaries_compose_to_zero() const {
  for (int k = lo() + 2; k <= hi(); ++k)
    if (!(boundary(k - 1) * boundary(k)).is_zero()) return false;
  return true;
}

ChainComplex total_complex(const MultiComplex& mc) {
  if (mc.support().empty()) throw std::invalid_argument("total_complex: empty support");

  // Group multidegrees by total degree, lexicographically descending inside
  // a degree so that cube components line up with subset-tuple order.
  std::map<int, std::vector<std::vector<int>>> layers;
  for (const auto& [deg, r] : mc.support()) {
    int total = std::accumulate(deg.begin(), deg.end(), 0);
    layers[total].push_back(deg);
  }
  for (auto& [total, degs] : layers)
    std::sort(degs.begin(), degs.end(), std::greater<>());

  const int lo = layers.begin()->first;
  const int hi = layers.rbegin()->first;
  std::vector<int> ranks;
  std::vector<std::map<std::vector<int>, std::size_t>> offsets;  // per degree index
  for (int d = lo; d <= hi; ++d) {
    std::size_t total_rank = 0;
    std::map<std::vector<int>, std::size_t> offset;
    if (auto it = layers.find(d); it != layers.end()) {
      for (const auto& deg : it->second) {
        offset[deg] = total_rank;
        total_rank += static_cast<std::size_t>(mc.rank(deg));
      }
    }
    ranks.push_back(static_cast<int>(total_rank));
    offsets.push_back(std::move(offset));
  }

  std::vector<RingMatrix> maps;
  for (int d = lo + 1; d <= hi; ++d) {
    RingMatrix block(mc.ring(), static_cast<std::size_t>(ranks[d - 1 - lo]),
                     static_cast<std::size_t>(ranks[d - lo]));
    if (auto it = layers.find(d); it != layers.end()) {
      for (const auto& deg : it->second) {
        std::size_t col0 = offsets[d - lo].at(deg);
        for (int s = 1; s <= mc.dims(); ++s) {
          if (!mc.has_boundary(deg, s)) continue;
          std::vector<int> target = deg;
          target[s - 1] -= 1;
          auto off = offsets[d - 1 - lo].find(target);
          if (off == offsets[d - 1 - lo].end())
            throw CheckError("total_complex: boundary leaves the support");
          const RingMatrix& m = mc.boundary(deg, s);
          for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
              block.set(off->second + i, col0 + j, m.at(i, j));
        }
      }
    }
    maps.push_back(std::move(block));
  }

  ChainComplex out(mc.ring(), lo, std::move(ranks), std::move(maps));
  if (!out.boundaries_compose_to_zero())
    throw CheckError("total_complex: d compose d is nonzero");
  return out;
}

FPModule homology(const ChainComplex& complex, int degree) {
  const RingPtr& ring = complex.ring();
  if (degree < complex.lo() || degree > complex.hi()) return FPModule::zero(ring);
  const std::uint32_t rk = static_cast<std::uint32_t>(complex.rank(degree));
  if (rk == 0) return FPModule::zero(ring);

  // ker(d_k)/im(d_{k+1}) is the kernel of d_k viewed as a map out of
  // coker(d_{k+1}): the generators are a syzygy basis of d_k, the relations
  // everything carrying a combination of them into im(d_{k+1}).
  RingMatrix incoming = complex.has_boundary(degree + 1)
                            ? complex.boundary(degree + 1)
                            : RingMatrix(ring, rk, 0);
  FPModule cycles_source(rk, std::move(incoming));
  RingMatrix outgoing = complex.has_boundary(degree)
                            ? complex.boundary(degree)
                            : RingMatrix(ring, 0, rk);
  FPModule target = FPModule::free_module(ring, outgoing.rows());
  return kernel_of_hom(cycles_source, target, outgoing);
}

bool is_spherical(const ChainComplex& complex, int n) {
  for (int k = complex.lo(); k <= complex.hi(); ++k) {
    if (k == n) continue;
    if (!homology(complex, k).is_zero()) return false;
  }
  return true;
}

}  // namespace koszul
