#pragma once

#include "koszul/ring.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace koszul {

struct ModTerm {
  Rational coeff;
  Monomial mono;
  std::uint32_t component = 0;
  bool operator==(const ModTerm&) const = default;
};

/// Element of a free module A^r, stored as a flat term list sorted strictly
/// descending under position-over-term order (lower component dominant,
/// ties broken by the ring's monomial order).
class ModVec {
public:
  ModVec(RingPtr ring, std::uint32_t rank) : ring_(std::move(ring)), rank_(rank) {}
  static ModVec unit(const RingPtr& ring, std::uint32_t rank, std::uint32_t component);
  static ModVec from_components(std::vector<Polynomial> components);
  static ModVec from_terms(RingPtr ring, std::uint32_t rank, std::vector<ModTerm> terms);

  const RingPtr& ring() const { return ring_; }
  std::uint32_t rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  std::span<const ModTerm> terms() const { return terms_; }
  const ModTerm& leading_term() const;

  Polynomial component(std::uint32_t i) const;
  std::vector<Polynomial> components() const;

  ModVec operator-() const;
  ModVec operator+(const ModVec& other) const;
  ModVec operator-(const ModVec& other) const;
  /// Multiplication by a ring element.
  friend ModVec operator*(const Polynomial& scalar, const ModVec& v);
  ModVec operator*(const Rational& scalar) const;
  bool operator==(const ModVec& other) const;

  std::string str() const;

private:
  RingPtr ring_;
  std::uint32_t rank_;
  std::vector<ModTerm> terms_;
};

/// Position-over-term comparison: <0, 0, >0. A term in a lower component is
/// greater than any term in a higher component.
int pot_compare(const PolyRing& ring, const ModTerm& a, const ModTerm& b);

}  // namespace koszul
