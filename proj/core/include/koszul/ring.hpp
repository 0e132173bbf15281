#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace koszul {

/// A verified mathematical identity failed to hold for the given input.
/// Distinct from std::invalid_argument, which flags contract misuse.
class CheckError : public std::runtime_error {
public:
  explicit CheckError(const std::string& what) : std::runtime_error(what) {}
};

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class TermOrder { lex, degrevlex };

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Exponent vector with one entry per ring variable. Comparison under the
/// ring's term order lives on PolyRing; operator<=> here is structural and
/// only used for container keys.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents) : exp_(std::move(exponents)) {}
  static Monomial one(std::size_t nvars) { return Monomial(std::vector<std::uint32_t>(nvars, 0)); }

  std::size_t size() const { return exp_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exp_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exp_; }

  int degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient this / other, or nullopt when other does not divide this.
  std::optional<Monomial> divided_by(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  /// True when every variable in the support lies in `vars` (given as flags).
  bool supported_on(const std::vector<bool>& vars) const;

  auto operator<=>(const Monomial&) const = default;

private:
  std::vector<std::uint32_t> exp_;
};

/// The base ring: Q[x_1,...,x_n] with a fixed monomial order.
class PolyRing {
public:
  static RingPtr make(std::vector<std::string> variables,
                      TermOrder order = TermOrder::degrevlex);

  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  TermOrder order() const { return order_; }

  bool same_as(const PolyRing& other) const {
    return this == &other || (vars_ == other.vars_ && order_ == other.order_);
  }

  /// Three-way comparison of monomials under the ring's order (<0, 0, >0).
  int compare(const Monomial& a, const Monomial& b) const;

  std::optional<std::size_t> var_index(std::string_view name) const;

  /// Same variables plus one fresh variable appended (used for the
  /// Rabinowitsch trick). Reports the chosen name through `fresh_name`.
  RingPtr extended(std::string* fresh_name = nullptr) const;

private:
  PolyRing(std::vector<std::string> vars, TermOrder order)
      : vars_(std::move(vars)), order_(order) {}

  std::vector<std::string> vars_;
  TermOrder order_;
};

struct Term {
  Rational coeff;
  Monomial mono;
  bool operator==(const Term&) const = default;
};

/// Immutable exact polynomial; terms are strictly descending in the ring
/// order and never carry a zero coefficient.
class Polynomial {
public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  static Polynomial constant(RingPtr ring, Rational value);
  static Polynomial variable(const RingPtr& ring, std::size_t index);
  static Polynomial from_term(RingPtr ring, Rational coeff, Monomial mono);
  static Polynomial from_terms(RingPtr ring, std::vector<Term> unsorted_terms);

  /// Parses the shared text grammar: terms joined by +/-, a term is a
  /// rational coefficient, a monomial, or coeff*monomial; monomials are
  /// var, var^k, or *-joined products. Throws std::invalid_argument.
  static Polynomial parse(const RingPtr& ring, std::string_view text);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The value when constant (zero included), nullopt otherwise.
  std::optional<Rational> constant_value() const;
  std::span<const Term> terms() const { return terms_; }
  const Term& leading_term() const;
  int total_degree() const;  // -1 for the zero polynomial

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& scalar) const;
  bool operator==(const Polynomial& other) const;

  std::string str() const;

private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

/// Exact quotient p / q, or nullopt when q does not divide p.
/// Throws std::invalid_argument when q is zero.
std::optional<Polynomial> exact_div(const Polynomial& p, const Polynomial& q);

struct AssociatePower {
  int exponent = 0;
  Rational unit;
};

/// Writes p as unit * f^e with a maximal exponent, or nullopt when the
/// cofactor after dividing out f is not a nonzero rational.
/// Requires p nonzero and f nonconstant.
std::optional<AssociatePower> associate_power(const Polynomial& p, const Polynomial& f);

struct Homogeneity {
  bool homogeneous = false;
  std::optional<int> degree;  // absent for the zero polynomial
};

Homogeneity homogeneity(const Polynomial& p);

void require_same_ring(const Polynomial& a, const Polynomial& b, const char* what);

}  // namespace koszul
