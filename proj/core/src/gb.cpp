#include "koszul/gb.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace koszul {

// ---------------------------------------------------------------------------
// ModVec

int pot_compare(const PolyRing& ring, const ModTerm& a, const ModTerm& b) {
  if (a.component != b.component) return a.component < b.component ? 1 : -1;
  return ring.compare(a.mono, b.mono);
}

ModVec ModVec::unit(const RingPtr& ring, std::uint32_t rank, std::uint32_t component) {
  if (component >= rank) throw std::invalid_argument("ModVec::unit: component out of range");
  ModVec v(ring, rank);
  v.terms_.push_back({Rational(1), Monomial::one(ring->nvars()), component});
  return v;
}

ModVec ModVec::from_components(std::vector<Polynomial> components) {
  if (components.empty()) throw std::invalid_argument("ModVec::from_components: empty");
  RingPtr ring = components.front().ring();
  ModVec v(ring, static_cast<std::uint32_t>(components.size()));
  std::vector<ModTerm> terms;
  for (std::uint32_t c = 0; c < components.size(); ++c) {
    require_same_ring(components.front(), components[c], "ModVec");
    for (const auto& t : components[c].terms()) terms.push_back({t.coeff, t.mono, c});
  }
  return from_terms(std::move(ring), static_cast<std::uint32_t>(components.size()),
                    std::move(terms));
}

ModVec ModVec::from_terms(RingPtr ring, std::uint32_t rank, std::vector<ModTerm> terms) {
  ModVec v(ring, rank);
  for (const auto& t : terms)
    if (t.component >= rank) throw std::invalid_argument("ModVec: component out of range");
  std::sort(terms.begin(), terms.end(), [&](const ModTerm& a, const ModTerm& b) {
    return pot_compare(*ring, a, b) > 0;
  });
  // Merge equal positions, drop zeros.
  for (auto& t : terms) {
    if (!v.terms_.empty() && v.terms_.back().component == t.component &&
        v.terms_.back().mono == t.mono) {
      v.terms_.back().coeff += t.coeff;
      if (v.terms_.back().coeff == 0) v.terms_.pop_back();
    } else if (t.coeff != 0) {
      v.terms_.push_back(std::move(t));
    }
  }
  return v;
}

const ModTerm& ModVec::leading_term() const {
  if (terms_.empty()) throw std::invalid_argument("leading term of zero module vector");
  return terms_.front();
}

Polynomial ModVec::component(std::uint32_t i) const {
  std::vector<Term> ts;
  for (const auto& t : terms_)
    if (t.component == i) ts.push_back({t.coeff, t.mono});
  return Polynomial::from_terms(ring_, std::move(ts));
}

std::vector<Polynomial> ModVec::components() const {
  std::vector<Polynomial> out;
  out.reserve(rank_);
  for (std::uint32_t i = 0; i < rank_; ++i) out.push_back(component(i));
  return out;
}

ModVec ModVec::operator-() const {
  ModVec r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

ModVec ModVec::operator+(const ModVec& other) const {
  if (!ring_->same_as(*other.ring_) || rank_ != other.rank_)
    throw std::invalid_argument("ModVec add: mismatched module");
  ModVec r(ring_, rank_);
  r.terms_.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    int c = pot_compare(*ring_, terms_[i], other.terms_[j]);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(other.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + other.terms_[j].coeff;
      if (s != 0) r.terms_.push_back({std::move(s), terms_[i].mono, terms_[i].component});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < other.terms_.size(); ++j) r.terms_.push_back(other.terms_[j]);
  return r;
}

ModVec ModVec::operator-(const ModVec& other) const { return *this + (-other); }

ModVec operator*(const Polynomial& scalar, const ModVec& v) {
  std::map<std::pair<std::uint32_t, Monomial>, Rational> acc;
  for (const auto& a : scalar.terms())
    for (const auto& b : v.terms()) acc[{b.component, a.mono * b.mono}] += a.coeff * b.coeff;
  std::vector<ModTerm> terms;
  for (auto& [key, c] : acc)
    if (c != 0) terms.push_back({std::move(c), key.second, key.first});
  return ModVec::from_terms(v.ring(), v.rank(), std::move(terms));
}

ModVec ModVec::operator*(const Rational& scalar) const {
  if (scalar == 0) return ModVec(ring_, rank_);
  ModVec r(*this);
  for (auto& t : r.terms_) t.coeff *= scalar;
  return r;
}

bool ModVec::operator==(const ModVec& other) const {
  return ring_->same_as(*other.ring_) && rank_ == other.rank_ && terms_ == other.terms_;
}

std::string ModVec::str() const {
  std::ostringstream os;
  os << "(";
  for (std::uint32_t i = 0; i < rank_; ++i) {
    if (i) os << ", ";
    os << component(i).str();
  }
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// Buchberger engine

namespace {

// g scaled by c * m, term order preserved.
ModVec term_times(const Rational& c, const Monomial& m, const ModVec& g) {
  std::vector<ModTerm> terms;
  terms.reserve(g.terms().size());
  for (const auto& t : g.terms()) terms.push_back({t.coeff * c, t.mono * m, t.component});
  return ModVec::from_terms(g.ring(), g.rank(), std::move(terms));
}

ModVec make_monic(const ModVec& g) {
  if (g.is_zero()) return g;
  return g * (Rational(1) / g.leading_term().coeff);
}

ModVec normal_form_impl(ModVec v, std::span<const ModVec> basis) {
  const RingPtr ring = v.ring();
  const std::uint32_t rank = v.rank();
  std::vector<ModTerm> out;
  while (!v.is_zero()) {
    const ModTerm lt = v.leading_term();
    const ModVec* reducer = nullptr;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      const ModTerm& glt = g.leading_term();
      if (glt.component == lt.component && glt.mono.divides(lt.mono)) {
        reducer = &g;
        break;
      }
    }
    if (reducer) {
      const ModTerm& glt = reducer->leading_term();
      v = v - term_times(lt.coeff / glt.coeff, *lt.mono.divided_by(glt.mono), *reducer);
    } else {
      out.push_back(lt);
      v = v - ModVec::from_terms(ring, rank, {lt});
    }
  }
  return ModVec::from_terms(ring, rank, std::move(out));
}

// Unique reduced Groebner basis under position-over-term order.
std::vector<ModVec> buchberger(const RingPtr& ring, std::uint32_t rank,
                               std::vector<ModVec> gens) {
  std::vector<ModVec> basis;
  for (auto& g : gens) {
    if (g.rank() != rank) throw std::invalid_argument("groebner: rank mismatch");
    if (!g.is_zero()) basis.push_back(make_monic(g));
  }

  struct Pair {
    int degree;
    std::size_t i, j;
    bool operator<(const Pair& o) const {
      return std::tie(degree, i, j) < std::tie(o.degree, o.i, o.j);
    }
  };
  std::set<Pair> queue;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const ModTerm& a = basis[i].leading_term();
      const ModTerm& b = basis[j].leading_term();
      if (a.component != b.component) continue;
      // Coprime-lead criterion is only sound in the ideal case.
      Monomial l = Monomial::lcm(a.mono, b.mono);
      if (rank == 1 && l == a.mono * b.mono) continue;
      queue.insert({l.degree(), i, j});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  while (!queue.empty()) {
    auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    const ModTerm& a = basis[i].leading_term();
    const ModTerm& b = basis[j].leading_term();
    Monomial l = Monomial::lcm(a.mono, b.mono);
    ModVec s = term_times(Rational(1) / a.coeff, *l.divided_by(a.mono), basis[i]) -
               term_times(Rational(1) / b.coeff, *l.divided_by(b.mono), basis[j]);
    ModVec r = normal_form_impl(std::move(s), basis);
    if (!r.is_zero()) {
      basis.push_back(make_monic(r));
      push_pairs(basis.size() - 1);
    }
  }

  // Minimalize: drop elements whose lead is divisible by another lead.
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!keep[i]) continue;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[j]) continue;
      const ModTerm& a = basis[j].leading_term();
      const ModTerm& b = basis[i].leading_term();
      if (a.component == b.component && a.mono.divides(b.mono)) {
        // On equal leads keep the earlier element.
        if (a.mono == b.mono && j > i) continue;
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<ModVec> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(basis[i]);

  // Tail-reduce every element against the others; leads are untouched since
  // they are pairwise indivisible.
  std::vector<ModVec> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<ModVec> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(make_monic(normal_form_impl(minimal[i], others)));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const ModVec& a, const ModVec& b) {
    return pot_compare(*ring, a.leading_term(), b.leading_term()) > 0;
  });
  return reduced;
}

ModVec poly_to_vec(const Polynomial& p) {
  std::vector<ModTerm> terms;
  for (const auto& t : p.terms()) terms.push_back({t.coeff, t.mono, 0});
  return ModVec::from_terms(p.ring(), 1, std::move(terms));
}

Polynomial vec_to_poly(const ModVec& v) { return v.component(0); }

}  // namespace

std::vector<Polynomial> groebner_basis(const RingPtr& ring, std::vector<Polynomial> gens) {
  std::vector<ModVec> vs;
  for (auto& g : gens) {
    if (!g.ring()->same_as(*ring)) throw std::invalid_argument("groebner: ring mismatch");
    vs.push_back(poly_to_vec(g));
  }
  std::vector<Polynomial> out;
  for (const auto& v : buchberger(ring, 1, std::move(vs))) out.push_back(vec_to_poly(v));
  return out;
}

std::vector<ModVec> groebner_basis(const RingPtr& ring, std::uint32_t rank,
                                   std::vector<ModVec> gens) {
  return buchberger(ring, rank, std::move(gens));
}

Polynomial normal_form(const Polynomial& v, std::span<const Polynomial> basis) {
  std::vector<ModVec> b;
  for (const auto& g : basis) b.push_back(poly_to_vec(g));
  return vec_to_poly(normal_form_impl(poly_to_vec(v), b));
}

ModVec normal_form(const ModVec& v, std::span<const ModVec> basis) {
  return normal_form_impl(v, basis);
}

// ---------------------------------------------------------------------------
// LiftBasis: membership / lift / syzygies through one elimination basis.

namespace {

// (g, e_{rank+index}) in A^(rank+count).
ModVec embed_generator(const ModVec& g, std::uint32_t rank, std::size_t count,
                       std::size_t index) {
  std::vector<ModTerm> terms;
  for (const auto& t : g.terms()) terms.push_back(t);
  terms.push_back({Rational(1), Monomial::one(g.ring()->nvars()),
                   static_cast<std::uint32_t>(rank + index)});
  return ModVec::from_terms(g.ring(), static_cast<std::uint32_t>(rank + count),
                            std::move(terms));
}

ModVec embed_vector(const ModVec& v, std::uint32_t rank, std::size_t count) {
  std::vector<ModTerm> terms(v.terms().begin(), v.terms().end());
  return ModVec::from_terms(v.ring(), static_cast<std::uint32_t>(rank + count),
                            std::move(terms));
}

}  // namespace

LiftBasis::LiftBasis(RingPtr ring, std::uint32_t rank, std::vector<ModVec> gens)
    : ring_(std::move(ring)), rank_(rank), gens_(std::move(gens)) {
  const std::size_t s = gens_.size();
  std::vector<ModVec> hat;
  hat.reserve(s);
  for (std::size_t i = 0; i < s; ++i) {
    if (gens_[i].rank() != rank_) throw std::invalid_argument("LiftBasis: rank mismatch");
    if (!gens_[i].ring()->same_as(*ring_))
      throw std::invalid_argument("LiftBasis: ring mismatch");
    hat.push_back(embed_generator(gens_[i], rank_, s, i));
  }
  combined_gb_ = buchberger(ring_, static_cast<std::uint32_t>(rank_ + s), std::move(hat));
}

bool LiftBasis::contains(const ModVec& v) const {
  ModVec r = normal_form_impl(embed_vector(v, rank_, gens_.size()), combined_gb_);
  for (const auto& t : r.terms())
    if (t.component < rank_) return false;
  return true;
}

std::optional<std::vector<Polynomial>> LiftBasis::lift(const ModVec& v) const {
  if (v.rank() != rank_) throw std::invalid_argument("lift: rank mismatch");
  ModVec r = normal_form_impl(embed_vector(v, rank_, gens_.size()), combined_gb_);
  for (const auto& t : r.terms())
    if (t.component < rank_) return std::nullopt;
  std::vector<Polynomial> coeffs;
  coeffs.reserve(gens_.size());
  for (std::size_t i = 0; i < gens_.size(); ++i)
    coeffs.push_back(-r.component(static_cast<std::uint32_t>(rank_ + i)));
  // Re-verify the exact identity sum c_i g_i = v.
  ModVec check(ring_, rank_);
  for (std::size_t i = 0; i < gens_.size(); ++i) check = check + coeffs[i] * gens_[i];
  if (!(check == v)) throw std::logic_error("lift: verification failed");
  return coeffs;
}

std::vector<ModVec> LiftBasis::syzygies() const {
  const std::size_t s = gens_.size();
  std::vector<ModVec> out;
  for (const auto& g : combined_gb_) {
    if (g.is_zero()) continue;
    if (g.leading_term().component < rank_) continue;
    std::vector<ModTerm> terms;
    for (const auto& t : g.terms())
      terms.push_back({t.coeff, t.mono, t.component - rank_});
    ModVec syz = ModVec::from_terms(ring_, static_cast<std::uint32_t>(s), std::move(terms));
    // Each relation must annihilate the generators exactly.
    ModVec check(ring_, rank_);
    for (std::size_t i = 0; i < s; ++i)
      check = check + syz.component(static_cast<std::uint32_t>(i)) * gens_[i];
    if (!check.is_zero()) throw std::logic_error("syzygies: verification failed");
    out.push_back(std::move(syz));
  }
  return out;
}

std::vector<ModVec> syzygies(const RingPtr& ring, std::uint32_t rank,
                             std::span<const ModVec> gens) {
  LiftBasis lb(ring, rank, std::vector<ModVec>(gens.begin(), gens.end()));
  return lb.syzygies();
}

std::vector<ModVec> syzygies(std::span<const Polynomial> gens) {
  if (gens.empty()) throw std::invalid_argument("syzygies: empty generator list needs a ring");
  std::vector<ModVec> vs;
  for (const auto& g : gens) vs.push_back(poly_to_vec(g));
  return syzygies(gens.front().ring(), 1, vs);
}

std::optional<std::vector<Polynomial>> lift(const ModVec& v, std::span<const ModVec> gens) {
  LiftBasis lb(v.ring(), v.rank(), std::vector<ModVec>(gens.begin(), gens.end()));
  return lb.lift(v);
}

std::optional<std::vector<Polynomial>> lift(const Polynomial& v,
                                            std::span<const Polynomial> gens) {
  std::vector<ModVec> vs;
  for (const auto& g : gens) vs.push_back(poly_to_vec(g));
  LiftBasis lb(v.ring(), 1, std::move(vs));
  return lb.lift(poly_to_vec(v));
}

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : gens_)
    if (!g.ring()->same_as(*ring_)) throw std::invalid_argument("Ideal: ring mismatch");
}

const std::vector<Polynomial>& Ideal::reduced_basis() const {
  std::call_once(cache_->once, [this] { cache_->basis = groebner_basis(ring_, gens_); });
  return cache_->basis;
}

bool Ideal::contains(const Polynomial& p) const {
  return normal_form(p, reduced_basis()).is_zero();
}

bool Ideal::is_unit() const {
  const auto& b = reduced_basis();
  return b.size() == 1 && b.front().is_constant();
}

bool Ideal::same_ideal_as(const Ideal& other) const {
  if (!ring_->same_as(*other.ring_)) return false;
  return reduced_basis() == other.reduced_basis();
}

// ---------------------------------------------------------------------------
// Submodule

Submodule::Submodule(RingPtr ring, std::uint32_t rank, std::vector<ModVec> gens)
    : ring_(std::move(ring)), rank_(rank), gens_(std::move(gens)),
      cache_(std::make_shared<Cache>()) {
  for (const auto& g : gens_)
    if (g.rank() != rank_) throw std::invalid_argument("Submodule: rank mismatch");
}

const std::vector<ModVec>& Submodule::reduced_basis() const {
  std::call_once(cache_->once, [this] { cache_->basis = groebner_basis(ring_, rank_, gens_); });
  return cache_->basis;
}

bool Submodule::contains(const ModVec& v) const {
  if (v.rank() != rank_) throw std::invalid_argument("Submodule::contains: rank mismatch");
  return normal_form(v, reduced_basis()).is_zero();
}

bool Submodule::same_submodule_as(const Submodule& other) const {
  if (!ring_->same_as(*other.ring_) || rank_ != other.rank_) return false;
  return reduced_basis() == other.reduced_basis();
}

// ---------------------------------------------------------------------------
// Ideal-level operations

Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("ideal_quotient: f must be nonzero");
  std::vector<ModVec> gens;
  gens.push_back(poly_to_vec(f));
  for (const auto& g : ideal.generators()) gens.push_back(poly_to_vec(g));
  std::vector<Polynomial> out;
  for (const auto& s : syzygies(ideal.ring(), 1, gens)) {
    Polynomial c0 = s.component(0);
    if (!c0.is_zero()) out.push_back(std::move(c0));
  }
  return Ideal(ideal.ring(), std::move(out));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  if (!a.ring()->same_as(*b.ring()))
    throw std::invalid_argument("ideal_intersect: ring mismatch");
  const RingPtr& ring = a.ring();
  // h in I cap J  <=>  h*(1,1) lies in span{(f_i,0)} + span{(0,g_j)}.
  std::vector<ModVec> gens;
  Polynomial one = Polynomial::constant(ring, 1);
  Polynomial zero(ring);
  gens.push_back(ModVec::from_components({one, one}));
  for (const auto& f : a.generators()) gens.push_back(ModVec::from_components({f, zero}));
  for (const auto& g : b.generators()) gens.push_back(ModVec::from_components({zero, g}));
  std::vector<Polynomial> out;
  for (const auto& s : syzygies(ring, 2, gens)) {
    Polynomial c0 = s.component(0);
    if (!c0.is_zero()) out.push_back(std::move(c0));
  }
  return Ideal(ring, std::move(out));
}

namespace {

Polynomial map_to_extension(const Polynomial& p, const RingPtr& big) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    std::vector<std::uint32_t> e = t.mono.exponents();
    e.resize(big->nvars(), 0);
    terms.push_back({t.coeff, Monomial(std::move(e))});
  }
  return Polynomial::from_terms(big, std::move(terms));
}

}  // namespace

bool radical_membership(const Polynomial& f, const Ideal& ideal) {
  if (!f.ring()->same_as(*ideal.ring()))
    throw std::invalid_argument("radical_membership: ring mismatch");
  if (f.is_zero()) return true;
  std::string fresh;
  RingPtr big = ideal.ring()->extended(&fresh);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(map_to_extension(g, big));
  Polynomial t = Polynomial::variable(big, *big->var_index(fresh));
  gens.push_back(Polynomial::constant(big, 1) - t * map_to_extension(f, big));
  Ideal extended(big, std::move(gens));
  return extended.is_unit();
}

int dim_quotient(const Ideal& ideal) {
  const auto& basis = ideal.reduced_basis();
  if (!basis.empty() && basis.front().is_constant()) return -1;
  const std::size_t n = ideal.ring()->nvars();
  if (n > 20) throw std::invalid_argument("dim_quotient: too many variables");
  std::vector<Monomial> leads;
  leads.reserve(basis.size());
  for (const auto& g : basis) leads.push_back(g.leading_term().mono);
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<bool> in_set(n, false);
    int size = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) in_set[i] = true, ++size;
    if (size <= best) continue;
    bool independent = true;
    for (const auto& m : leads) {
      if (m.supported_on(in_set)) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

int grade(const Ideal& ideal) {
  const int n = static_cast<int>(ideal.ring()->nvars());
  if (ideal.is_zero()) return 0;
  if (ideal.is_unit()) return n + 1;  // +infinity sentinel
  return n - dim_quotient(ideal);
}

bool is_regular_sequence(const RingPtr& ring, std::span<const Polynomial> fs) {
  if (fs.empty()) return true;
  std::vector<Polynomial> prefix;
  for (const auto& f : fs) {
    if (!f.ring()->same_as(*ring))
      throw std::invalid_argument("is_regular_sequence: ring mismatch");
    if (f.is_zero()) return false;
    Ideal so_far(ring, prefix);
    if (!ideal_quotient(so_far, f).same_ideal_as(so_far)) return false;
    prefix.push_back(f);
  }
  return !Ideal(ring, prefix).is_unit();
}

bool is_A_sequence(const RingPtr& ring, std::span<const Polynomial> fs) {
  if (fs.empty()) return true;
  bool graded = true;
  for (const auto& f : fs) {
    auto h = homogeneity(f);
    if (!h.homogeneous || !h.degree || *h.degree <= 0) {
      graded = false;
      break;
    }
  }
  if (graded) return is_regular_sequence(ring, fs);
  if (fs.size() > 6)
    throw std::invalid_argument(
        "is_A_sequence: non-homogeneous sequences longer than 6 are unsupported");
  std::vector<std::size_t> perm(fs.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<Polynomial> arranged;
    arranged.reserve(fs.size());
    for (auto i : perm) arranged.push_back(fs[i]);
    if (!is_regular_sequence(ring, arranged)) return false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

}  // namespace koszul
