#include "koszul/gkoszul.hpp"

#include <algorithm>
#include <stdexcept>

namespace koszul {

namespace {

// k-subsets of {1..n} in tuple-lexicographic order ({1,2} < {1,3} < {2,3});
// this matches the lex-descending multidegree order used by total_complex.
std::vector<SubsetMask> subsets_of_size(int n, int k) {
  std::vector<SubsetMask> out;
  std::vector<int> idx(k);
  if (k > n) return out;
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  while (true) {
    SubsetMask m = 0;
    for (int e : idx) m = mask_with(m, e);
    out.push_back(m);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace

ChainComplex classical_koszul(const RingPtr& ring, std::span<const Polynomial> fs) {
  const int n = static_cast<int>(fs.size());
  if (n < 1) throw std::invalid_argument("classical_koszul: need at least one element");
  for (const auto& f : fs)
    if (!f.ring()->same_as(*ring)) throw std::invalid_argument("classical_koszul: ring mismatch");

  std::vector<int> ranks;
  std::vector<std::vector<SubsetMask>> bases;
  for (int k = 0; k <= n; ++k) {
    bases.push_back(subsets_of_size(n, k));
    ranks.push_back(static_cast<int>(bases.back().size()));
  }
  std::vector<RingMatrix> maps;
  for (int k = 1; k <= n; ++k) {
    RingMatrix d(ring, bases[k - 1].size(), bases[k].size());
    std::map<SubsetMask, std::size_t> row_of;
    for (std::size_t i = 0; i < bases[k - 1].size(); ++i) row_of[bases[k - 1][i]] = i;
    for (std::size_t col = 0; col < bases[k].size(); ++col) {
      auto elems = mask_elements(bases[k][col], n);
      for (std::size_t p = 0; p < elems.size(); ++p) {
        SubsetMask target = mask_without(bases[k][col], elems[p]);
        Polynomial entry = fs[elems[p] - 1];
        if ((elems.size() - 1 - p) % 2 == 1) entry = -entry;
        d.set(row_of.at(target), col, d.at(row_of.at(target), col) + entry);
      }
    }
    maps.push_back(std::move(d));
  }
  return ChainComplex(ring, 0, std::move(ranks), std::move(maps));
}

GeneralizedKoszul generalized_koszul(const BoundaryFamily& family) {
  const int n = family.directions;
  if (n < 1) throw std::invalid_argument("generalized_koszul: need at least one direction");
  if (family.targets.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("generalized_koszul: one target per direction");

  std::vector<int> ranks(std::size_t(1) << n, static_cast<int>(family.rank));
  std::map<std::pair<SubsetMask, int>, RingMatrix> boundaries;
  for (SubsetMask subset = 0; subset < (SubsetMask(1) << n); ++subset) {
    for (int j = 1; j <= n; ++j) {
      if (!mask_contains(subset, j)) continue;
      auto it = family.maps.find({subset, j});
      if (it == family.maps.end())
        throw std::invalid_argument("generalized_koszul: missing map at (" +
                                    mask_bitstring(subset, n) + ", " + std::to_string(j) + ")");
      if (it->second.rows() != family.rank || it->second.cols() != family.rank)
        throw std::invalid_argument("generalized_koszul: maps must be rank x rank");
      if (!(determinant(it->second) == family.targets[j - 1]))
        throw CheckError("generalized_koszul: det d_" + mask_bitstring(subset, n) + "^" +
                         std::to_string(j) + " differs from its target");
      boundaries.emplace(std::make_pair(subset, j), it->second);
    }
  }
  Cube cube(family.ring, n, std::move(ranks), std::move(boundaries));
  if (auto v = validate(cube))
    throw CheckError("generalized_koszul: family does not commute at subset " +
                     mask_bitstring(v->subset, n) + " (j=" + std::to_string(v->j) +
                     ", k=" + std::to_string(v->k) + ")");
  ChainComplex total = total_complex(multicomplex_from_cube(cube));
  return {std::move(cube), std::move(total)};
}

KoszulCubeValidation validate_koszul_cube(const Cube& cube, std::span<const Polynomial> fs) {
  if (auto v = validate(cube))
    return {false, "cube does not validate: " + v->detail, std::nullopt};
  const int n = cube.dims();
  if (fs.size() != static_cast<std::size_t>(n))
    return {false, "sequence length differs from cube dimension", std::nullopt};

  const int rank = cube.vertex_rank(0);
  for (SubsetMask subset = 0; subset < (SubsetMask(1) << n); ++subset)
    if (cube.vertex_rank(subset) != rank)
      return {false, "vertex ranks are not constant", std::nullopt};

  std::vector<int> exponents;
  std::vector<Rational> units;
  for (int s = 1; s <= n; ++s) {
    if (fs[s - 1].is_constant())
      return {false, "sequence entry " + std::to_string(s) + " is constant", std::nullopt};
    std::optional<int> exponent;
    Rational unit_at_singleton;
    for (SubsetMask subset = 0; subset < (SubsetMask(1) << n); ++subset) {
      if (!mask_contains(subset, s)) continue;
      Polynomial det = determinant(cube.boundary(subset, s));
      if (det.is_zero())
        return {false, "determinant in direction " + std::to_string(s) + " vanishes",
                std::nullopt};
      auto ap = associate_power(det, fs[s - 1]);
      if (!ap || ap->exponent < 1)
        return {false,
                "det d_" + mask_bitstring(subset, n) + "^" + std::to_string(s) +
                    " is not an associate of a positive power of f_" + std::to_string(s),
                std::nullopt};
      if (exponent && *exponent != ap->exponent)
        return {false, "determinant exponents differ across direction " + std::to_string(s),
                std::nullopt};
      exponent = ap->exponent;
      if (subset == mask_with(SubsetMask(0), s)) unit_at_singleton = ap->unit;
    }
    exponents.push_back(*exponent);
    units.push_back(unit_at_singleton);
  }

  std::vector<Polynomial> seq(fs.begin(), fs.end());
  if (!is_A_sequence(cube.ring(), seq))
    return {false, "sequence is not an A-sequence", std::nullopt};

  KoszulCube kc{cube, std::move(seq), std::move(exponents), std::move(units),
                static_cast<std::size_t>(rank)};
  return {true, "", std::move(kc)};
}

BeReport be_check(const ChainComplex& complex) {
  BeReport report;
  if (complex.lo() != 0) {
    report.error = "complex support must start at degree 0";
    return report;
  }
  if (!complex.boundaries_compose_to_zero()) {
    report.error = "boundaries do not compose to zero";
    return report;
  }
  const int s = complex.hi();
  report.ok = true;
  for (int i = 1; i <= s; ++i) {
    int r = 0;
    int sign = 1;
    for (int j = i; j <= s; ++j) {
      r += sign * complex.rank(j);
      sign = -sign;
    }
    BeRow row;
    row.i = i;
    row.r = r;
    Ideal minors = minors_ideal(complex.boundary(i), r);
    if (minors.is_unit()) {
      row.grade_infinite = true;
      row.pass = true;
    } else {
      row.grade_value = grade(minors);
      row.pass = row.grade_value >= i;
    }
    report.ok = report.ok && row.pass;
    report.rows.push_back(row);
  }
  return report;
}

ResolReport resolcriterion_check(const BoundaryFamily& family) {
  ResolReport report;
  report.targets_regular = is_regular_sequence(family.ring, family.targets);
  GeneralizedKoszul gk = generalized_koszul(family);
  report.be = be_check(gk.total);
  report.spherical = is_spherical(gk.total, 0);
  report.agree = (report.be.ok == report.spherical);
  return report;
}

AdmReport admcriterion_check(const BoundaryFamily& family) {
  AdmReport report;
  report.targets_a_sequence = is_A_sequence(family.ring, family.targets);
  if (!report.targets_a_sequence) return report;
  GeneralizedKoszul gk = generalized_koszul(family);
  report.admissibility = is_admissible(gk.cube);
  return report;
}

BoundaryLemmaReport boundary_condition_check(const RingMatrix& psi, const Polynomial& f) {
  if (psi.rows() != psi.cols())
    throw std::invalid_argument("boundary_condition_check: psi must be square");
  if (f.is_zero())
    throw std::invalid_argument("boundary_condition_check: f must be a non-zero-divisor");
  BoundaryLemmaReport report;
  Polynomial det = determinant(psi);
  if (det.is_zero()) return report;
  auto ap = associate_power(det, f);
  if (!ap) return report;
  report.applicable = true;
  report.power = *ap;
  report.injective = is_injective(psi);
  report.supported_on_vf =
      radical_membership(f, minors_ideal(psi, static_cast<int>(psi.rows())));
  report.pd_at_most_one = report.injective;
  return report;
}

}  // namespace koszul
