#include "koszul/wt2.hpp"

#include <algorithm>
#include <stdexcept>

namespace koszul {

namespace {

RingMatrix hcat(const RingMatrix& a, const RingMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row mismatch");
  RingMatrix out(a.ring(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
    for (std::size_t j = 0; j < b.cols(); ++j) out.set(i, a.cols() + j, b.at(i, j));
  }
  return out;
}

RingMatrix scaled_identity(const RingPtr& ring, std::size_t n, const Polynomial& f) {
  RingMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, f);
  return m;
}

bool all_homogeneous(std::span<const Polynomial> fs) {
  return std::all_of(fs.begin(), fs.end(),
                     [](const Polynomial& f) { return homogeneity(f).homogeneous; });
}

}  // namespace

WtReport wt_membership(const FPModule& module, std::span<const Polynomial> fs,
                       bool require_homogeneous) {
  WtReport report;
  Ideal fitt0 = minors_ideal(module.relations(), static_cast<int>(module.generators()));
  report.support_ok = true;
  for (const auto& f : fs) {
    if (!radical_membership(f, fitt0)) {
      report.support_ok = false;
      report.result = WtMembership::not_member;
      report.detail = "support: " + f.str() + " is not in the radical of Fitt_0";
      return report;
    }
  }

  std::vector<int> zero_shifts(module.generators(), 0);
  bool graded = all_homogeneous(fs) &&
                homogeneous_column_degrees(module.relations(), zero_shifts).has_value();
  if (!graded) {
    if (require_homogeneous)
      throw std::invalid_argument("wt_membership: input is not homogeneous");
    report.result = WtMembership::unknown;
    report.detail = "support holds; projective dimension not computed (inhomogeneous data)";
    return report;
  }

  const int bound = static_cast<int>(module.ring()->nvars()) + 1;
  auto res = minimal_graded_resolution(module, bound);
  if (!res) {
    report.result = WtMembership::unknown;
    report.detail = "support holds; resolution unavailable";
    return report;
  }
  report.projective_dimension = res->length;
  if (res->length <= static_cast<int>(fs.size())) {
    report.result = WtMembership::member;
  } else {
    report.result = WtMembership::not_member;
    report.detail = "projective dimension " + std::to_string(res->length) + " exceeds " +
                    std::to_string(fs.size());
  }
  return report;
}

std::optional<AssociatePower> claim1_check(const RingMatrix& p, const Polynomial& f) {
  if (p.rows() != p.cols()) throw std::invalid_argument("claim1_check: P must be square");
  Polynomial det = determinant(p);
  if (det.is_zero()) return std::nullopt;
  return associate_power(det, f);
}

std::optional<Claim2Solution> solve_claim2(const Polynomial& f, const Polynomial& g,
                                           const RingMatrix& u) {
  const RingPtr& ring = u.ring();
  const std::size_t n = u.rows(), m = u.cols();
  if (n == 0) throw std::invalid_argument("solve_claim2: U needs at least one row");

  std::vector<ModVec> gens = u.columns();
  for (std::size_t i = 0; i < n; ++i)
    gens.push_back(f * ModVec::unit(ring, static_cast<std::uint32_t>(n),
                                    static_cast<std::uint32_t>(i)));
  LiftBasis lb(ring, static_cast<std::uint32_t>(n), gens);

  RingMatrix x(ring, m, n);
  RingMatrix v(ring, n, n);
  for (std::size_t k = 0; k < n; ++k) {
    ModVec target = g * ModVec::unit(ring, static_cast<std::uint32_t>(n),
                                     static_cast<std::uint32_t>(k));
    auto coeffs = lb.lift(target);
    if (!coeffs) return std::nullopt;
    for (std::size_t j = 0; j < m; ++j) x.set(j, k, (*coeffs)[j]);
    for (std::size_t i = 0; i < n; ++i) v.set(i, k, -(*coeffs)[m + i]);
  }
  // U*X - g*E_n - f*V must expand to zero exactly.
  RingMatrix check = u * x - scaled_identity(ring, n, g) - scaled_identity(ring, n, f) * v;
  if (!check.is_zero()) throw std::logic_error("solve_claim2: expansion check failed");
  return Claim2Solution{std::move(x), std::move(v)};
}

RingMatrix assemble_ubar(const Polynomial& f, const Polynomial& g, const RingMatrix& v,
                         const RingMatrix& u, const RingMatrix& x) {
  const RingPtr& ring = u.ring();
  const std::size_t n = u.rows(), m = u.cols();
  if (v.rows() != n || v.cols() != n || x.rows() != m || x.cols() != n)
    throw std::invalid_argument("assemble_ubar: inconsistent shapes");
  RingMatrix ubar = block2x2(v.scaled(f), u, x, RingMatrix::identity(ring, m));
  Polynomial det = determinant(ubar);
  Polynomial expected = pow(-g, static_cast<unsigned>(n));
  if (!(det == expected))
    throw CheckError("assemble_ubar: det Ubar = " + det.str() + ", expected (-g)^n = " +
                     expected.str());
  return ubar;
}

Wt2Certificate build_wt2_cube(const WeightInput& input) {
  const RingPtr& ring = input.u.ring();
  const std::size_t n = input.u.rows(), m = input.u.cols();
  if (input.p.rows() != m || input.p.cols() != m)
    throw std::invalid_argument("build_wt2_cube: P must be m x m with m = cols(U)");
  if (input.f.is_constant())
    throw std::invalid_argument("build_wt2_cube: f must be nonconstant");
  std::vector<Polynomial> fg{input.f, input.g};
  if (!is_A_sequence(ring, fg))
    throw CheckError("build_wt2_cube: (f, g) is not an A-sequence");

  // U*P = f*W, W recovered by entrywise exact division.
  RingMatrix up = input.u * input.p;
  RingMatrix w(ring, n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto q = exact_div(up.at(i, j), input.f);
      if (!q)
        throw CheckError("build_wt2_cube: entry (" + std::to_string(i) + "," +
                         std::to_string(j) + ") of U*P is not divisible by f");
      w.set(i, j, std::move(*q));
    }

  auto ap = claim1_check(input.p, input.f);
  if (!ap)
    throw CheckError("build_wt2_cube: det P is not an associate power of f");

  auto claim2 = solve_claim2(input.f, input.g, input.u);
  if (!claim2)
    throw CheckError("build_wt2_cube: g*e_k does not lift over [columns of U, f*e_i]");

  RingMatrix ubar = assemble_ubar(input.f, input.g, claim2->v, input.u, claim2->x);
  RingMatrix top = block2x2(claim2->v, w, claim2->x, input.p);

  // 2-cube: direction 1 boundaries diag(f*E_n, E_m) and diag(E_n, P);
  // direction 2 boundaries Ubar and the induced top map.
  RingMatrix d1_outer = block2x2(scaled_identity(ring, n, input.f),
                                 RingMatrix(ring, n, m), RingMatrix(ring, m, n),
                                 RingMatrix::identity(ring, m));
  RingMatrix d1_inner = block2x2(RingMatrix::identity(ring, n), RingMatrix(ring, n, m),
                                 RingMatrix(ring, m, n), input.p);
  std::vector<int> ranks(4, static_cast<int>(n + m));
  std::map<std::pair<SubsetMask, int>, RingMatrix> boundaries;
  boundaries.emplace(std::make_pair(SubsetMask(0b01), 1), d1_outer);
  boundaries.emplace(std::make_pair(SubsetMask(0b11), 1), d1_inner);
  boundaries.emplace(std::make_pair(SubsetMask(0b10), 2), ubar);
  boundaries.emplace(std::make_pair(SubsetMask(0b11), 2), top);
  Cube cube(ring, 2, std::move(ranks), std::move(boundaries));
  if (auto viol = validate(cube))
    throw CheckError("build_wt2_cube: cube square fails to commute (" + viol->detail + ")");

  auto kcv = validate_koszul_cube(cube, fg);
  if (!kcv.ok) throw CheckError("build_wt2_cube: " + kcv.violation);

  FPModule module = FPModule::cokernel(hcat(scaled_identity(ring, n, input.f), input.u));

  ChainComplex total = total_complex(multicomplex_from_cube(cube));
  if (!is_spherical(total, 0))
    throw CheckError("build_wt2_cube: totalization is not 0-spherical");

  FPModule h0 = homology(total, 0);
  RingMatrix comparison(ring, n, n + m);
  for (std::size_t i = 0; i < n; ++i) comparison.set(i, i, Polynomial::constant(ring, 1));
  if (!hom_compatible(h0, module, comparison) || !iso_check(h0, module, comparison))
    throw CheckError("build_wt2_cube: comparison map H0(Tot) -> M is not an isomorphism");

  Wt2Certificate cert{std::move(*kcv.cube), std::move(module),   std::move(comparison),
                      0,                    0,                   input.f,
                      input.g,              input.u,             input.p,
                      claim2->x,            claim2->v,           std::move(w),
                      std::move(ubar),      std::move(top)};
  cert.exponent_f = cert.cube.exponents[0];
  cert.exponent_g = cert.cube.exponents[1];
  return cert;
}

std::variant<Wt2Certificate, ResolveFailure> resolve_wt2(const FPModule& module,
                                                         const Polynomial& f,
                                                         const Polynomial& g) {
  const RingPtr& ring = module.ring();
  std::vector<int> zero_shifts(module.generators(), 0);
  if (!homogeneity(f).homogeneous || !homogeneity(g).homogeneous ||
      !homogeneous_column_degrees(module.relations(), zero_shifts))
    return ResolveFailure{"homogeneity", "module and sequence must be homogeneous"};
  std::vector<Polynomial> fg{f, g};
  if (!is_A_sequence(ring, fg))
    return ResolveFailure{"hypothesis", "(f, g) is not an A-sequence"};
  if (module.is_zero())
    return ResolveFailure{"degenerate",
                          "the zero module admits no cube with positive determinant exponents"};

  // Replace f and g by the smallest powers annihilating the module.
  Ideal ann = annihilator(module);
  constexpr int kPowerCap = 8;
  auto smallest_power = [&](const Polynomial& h) -> std::optional<int> {
    for (int a = 1; a <= kPowerCap; ++a)
      if (ann.contains(pow(h, static_cast<unsigned>(a)))) return a;
    return std::nullopt;
  };
  auto alpha = smallest_power(f);
  if (!alpha)
    return ResolveFailure{"annihilation", "no power of f up to 8 annihilates the module"};
  auto beta = smallest_power(g);
  if (!beta)
    return ResolveFailure{"annihilation", "no power of g up to 8 annihilates the module"};
  Polynomial fa = pow(f, static_cast<unsigned>(*alpha));
  Polynomial gb = pow(g, static_cast<unsigned>(*beta));

  // L = ker((A/fa)^n -> M) is generated by the relation columns mod fa.
  const std::uint32_t n = static_cast<std::uint32_t>(module.generators());
  std::vector<ModVec> f_basis;
  for (std::uint32_t i = 0; i < n; ++i)
    f_basis.push_back(fa * ModVec::unit(ring, n, i));

  // Minimal homogeneous generators of L: keep a relation column iff it is not
  // in the span of those kept so far together with fa*A^n.
  struct Cand {
    std::size_t index;
    int degree;
  };
  auto degrees = homogeneous_column_degrees(module.relations(), zero_shifts);
  std::vector<Cand> cands;
  for (std::size_t j = 0; j < module.relations().cols(); ++j) {
    if (module.relations().column(j).is_zero()) continue;
    cands.push_back({j, (*degrees)[j]});
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Cand& a, const Cand& b) { return a.degree < b.degree; });
  std::vector<ModVec> w_cols;
  std::vector<int> w_degrees;
  for (const auto& c : cands) {
    std::vector<ModVec> span = w_cols;
    span.insert(span.end(), f_basis.begin(), f_basis.end());
    Submodule current(ring, n, std::move(span));
    ModVec col = module.relations().column(c.index);
    if (!current.contains(col)) {
      w_cols.push_back(std::move(col));
      w_degrees.push_back(c.degree);
    }
  }
  const std::size_t m = w_cols.size();
  RingMatrix u = RingMatrix::from_columns(ring, n, w_cols);

  // K = {c in A^m : U*c in fa*A^n}; a minimal generating set must be square
  // for L to have projective dimension one.
  std::vector<ModVec> blocked = w_cols;
  blocked.insert(blocked.end(), f_basis.begin(), f_basis.end());
  std::vector<ModVec> kernel_gens;
  for (const auto& s : syzygies(ring, n, blocked)) {
    std::vector<ModTerm> head;
    for (const auto& t : s.terms())
      if (t.component < m) head.push_back(t);
    ModVec k = ModVec::from_terms(ring, static_cast<std::uint32_t>(m), std::move(head));
    if (!k.is_zero()) kernel_gens.push_back(std::move(k));
  }
  auto minimal = minimal_homogeneous_generators(kernel_gens, w_degrees);
  if (!minimal)
    return ResolveFailure{"homogeneity", "kernel generators are inhomogeneous"};
  if (minimal->gens.size() != m)
    return ResolveFailure{"pd", "the kernel of A^m -> L needs " +
                                    std::to_string(minimal->gens.size()) +
                                    " generators, expected " + std::to_string(m) +
                                    "; the module is not weight two"};
  RingMatrix p = RingMatrix::from_columns(ring, m, minimal->gens);

  std::optional<Wt2Certificate> cert;
  try {
    cert = build_wt2_cube(WeightInput{fa, gb, u, p});
  } catch (const CheckError& e) {
    return ResolveFailure{"build", e.what()};
  }

  // The certified module must present the original one on the nose.
  RingMatrix identity = RingMatrix::identity(ring, n);
  if (!hom_compatible(cert->module, module, identity) ||
      !iso_check(cert->module, module, identity))
    return ResolveFailure{"final-iso",
                          "certificate module is not isomorphic to the input module"};
  return std::move(*cert);
}

}  // namespace koszul
