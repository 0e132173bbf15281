#include "koszul/graded.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace koszul {

std::optional<std::optional<int>> shifted_degree(const ModVec& v,
                                                 const std::vector<int>& shifts) {
  if (v.rank() != shifts.size())
    throw std::invalid_argument("shifted_degree: shift vector length mismatch");
  std::optional<int> deg;
  for (const auto& t : v.terms()) {
    int d = t.mono.degree() + shifts[t.component];
    if (!deg) {
      deg = d;
    } else if (*deg != d) {
      return std::nullopt;
    }
  }
  return std::optional<std::optional<int>>(deg);
}

std::optional<std::vector<int>> homogeneous_column_degrees(const RingMatrix& m,
                                                           const std::vector<int>& row_shifts) {
  std::vector<int> out;
  out.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    auto d = shifted_degree(m.column(j), row_shifts);
    if (!d) return std::nullopt;
    out.push_back(d->value_or(0));
  }
  return out;
}

std::optional<MinimalGens> minimal_homogeneous_generators(const std::vector<ModVec>& gens,
                                                          const std::vector<int>& shifts) {
  struct Entry {
    std::size_t index;
    int degree;
  };
  std::vector<Entry> order;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto d = shifted_degree(gens[i], shifts);
    if (!d) return std::nullopt;
    if (!d->has_value()) continue;  // zero vector contributes nothing
    order.push_back({i, **d});
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const Entry& a, const Entry& b) { return a.degree < b.degree; });
  MinimalGens result;
  if (order.empty()) return result;
  const RingPtr& ring = gens.front().ring();
  const std::uint32_t rank = gens.front().rank();
  for (const auto& e : order) {
    Submodule kept(ring, rank, result.gens);
    if (!kept.contains(gens[e.index])) {
      result.gens.push_back(gens[e.index]);
      result.degrees.push_back(e.degree);
    }
  }
  return result;
}

std::optional<GradedResolution> minimal_graded_resolution(const FPModule& module,
                                                          int max_length) {
  const RingPtr& ring = module.ring();
  GradedResolution res;
  std::vector<int> shifts(module.generators(), 0);
  res.shifts.push_back(shifts);

  std::vector<ModVec> current = module.relations().columns();
  std::uint32_t ambient = static_cast<std::uint32_t>(module.generators());
  for (int step = 0; step < max_length; ++step) {
    auto min = minimal_homogeneous_generators(current, shifts);
    if (!min) return std::nullopt;
    if (min->gens.empty()) {
      res.length = step;
      return res;
    }
    res.maps.push_back(RingMatrix::from_columns(ring, ambient, min->gens));
    res.shifts.push_back(min->degrees);
    current = syzygies(ring, ambient, min->gens);
    shifts = min->degrees;
    ambient = static_cast<std::uint32_t>(min->gens.size());
  }
  // The minimal resolution did not terminate within the bound; over a
  // polynomial ring this means max_length was below the Hilbert bound.
  res.length = max_length + 1;
  return res;
}

}  // namespace koszul
