#pragma once

#include "koszul/modvec.hpp"
#include "koszul/ring.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

namespace koszul {

/// Unique reduced Groebner basis of the ideal generated by `gens`, under the
/// ring's order: monic, auto-reduced, sorted descending by leading term.
std::vector<Polynomial> groebner_basis(const RingPtr& ring, std::vector<Polynomial> gens);

/// Module version, position-over-term order on A^rank.
std::vector<ModVec> groebner_basis(const RingPtr& ring, std::uint32_t rank,
                                   std::vector<ModVec> gens);

/// Remainder of full division by a reduced basis: no term of the result is
/// divisible by any leading term of the basis.
Polynomial normal_form(const Polynomial& v, std::span<const Polynomial> basis);
ModVec normal_form(const ModVec& v, std::span<const ModVec> basis);

/// Division data over a fixed generator list: membership, lifting through
/// the generators, and the syzygy module. Built once, queried many times.
class LiftBasis {
public:
  LiftBasis(RingPtr ring, std::uint32_t rank, std::vector<ModVec> gens);

  std::uint32_t ambient_rank() const { return rank_; }
  std::size_t generator_count() const { return gens_.size(); }

  bool contains(const ModVec& v) const;
  /// Coefficients c with sum c_i * gens_i = v (verified by expansion), or
  /// nullopt when v is not in the span.
  std::optional<std::vector<Polynomial>> lift(const ModVec& v) const;
  /// Reduced Groebner basis of {c : sum c_i * gens_i = 0} in A^s.
  std::vector<ModVec> syzygies() const;

private:
  RingPtr ring_;
  std::uint32_t rank_;
  std::vector<ModVec> gens_;
  std::vector<ModVec> combined_gb_;  // reduced GB of {(g_i, e_i)} in A^(rank+s)
};

std::vector<ModVec> syzygies(const RingPtr& ring, std::uint32_t rank,
                             std::span<const ModVec> gens);
std::vector<ModVec> syzygies(std::span<const Polynomial> gens);
std::optional<std::vector<Polynomial>> lift(const ModVec& v, std::span<const ModVec> gens);
std::optional<std::vector<Polynomial>> lift(const Polynomial& v,
                                            std::span<const Polynomial> gens);

/// Ideal of the base ring with a lazily cached reduced Groebner basis.
class Ideal {
public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(const RingPtr& ring) {
    return Ideal(ring, {Polynomial::constant(ring, 1)});
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const std::vector<Polynomial>& reduced_basis() const;

  bool contains(const Polynomial& p) const;
  bool is_zero() const { return reduced_basis().empty(); }
  bool is_unit() const;
  bool same_ideal_as(const Ideal& other) const;

private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
  };
  std::shared_ptr<Cache> cache_;
};

/// Submodule of A^rank with a lazily cached reduced module Groebner basis.
class Submodule {
public:
  Submodule(RingPtr ring, std::uint32_t rank, std::vector<ModVec> gens);
  static Submodule zero(RingPtr ring, std::uint32_t rank) {
    return Submodule(std::move(ring), rank, {});
  }

  const RingPtr& ring() const { return ring_; }
  std::uint32_t rank() const { return rank_; }
  const std::vector<ModVec>& generators() const { return gens_; }
  const std::vector<ModVec>& reduced_basis() const;

  bool contains(const ModVec& v) const;
  bool is_zero() const { return reduced_basis().empty(); }
  bool same_submodule_as(const Submodule& other) const;

private:
  RingPtr ring_;
  std::uint32_t rank_;
  std::vector<ModVec> gens_;
  struct Cache {
    std::once_flag once;
    std::vector<ModVec> basis;
  };
  std::shared_ptr<Cache> cache_;
};

/// (I : f) = {a : a*f in I}, computed from syzygies of [f, gens of I].
Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f);

Ideal ideal_intersect(const Ideal& a, const Ideal& b);

/// f in sqrt(I), via 1 in I + (1 - t*f) over the ring extended by t.
bool radical_membership(const Polynomial& f, const Ideal& ideal);

/// Krull dimension of A/I from the leading-term ideal: the largest variable
/// subset meeting the support of no leading monomial. -1 for the unit ideal.
int dim_quotient(const Ideal& ideal);

/// nvars - dim for proper nonzero ideals; 0 for the zero ideal;
/// nvars + 1 as the +infinity sentinel for the unit ideal.
int grade(const Ideal& ideal);

bool is_regular_sequence(const RingPtr& ring, std::span<const Polynomial> fs);

/// Regular under every permutation. Homogeneous sequences of positive degree
/// use a single check; otherwise all permutations are enumerated (length <= 6,
/// larger inputs throw std::invalid_argument).
bool is_A_sequence(const RingPtr& ring, std::span<const Polynomial> fs);

}  // namespace koszul
