#include "koszul/ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace koszul {

int Monomial::degree() const {
  int d = 0;
  for (auto e : exp_) d += static_cast<int>(e);
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exp_.begin(), exp_.end(), [](std::uint32_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  if (exp_.size() != other.exp_.size()) return false;
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<std::uint32_t> e(exp_.size());
  for (std::size_t i = 0; i < exp_.size(); ++i) e[i] = exp_[i] + other.exp_[i];
  return Monomial(std::move(e));
}

std::optional<Monomial> Monomial::divided_by(const Monomial& other) const {
  if (!other.divides(*this)) return std::nullopt;
  std::vector<std::uint32_t> e(exp_.size());
  for (std::size_t i = 0; i < exp_.size(); ++i) e[i] = exp_[i] - other.exp_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> e(a.exp_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exp_[i], b.exp_[i]);
  return Monomial(std::move(e));
}

bool Monomial::supported_on(const std::vector<bool>& vars) const {
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] > 0 && !vars[i]) return false;
  return true;
}

RingPtr PolyRing::make(std::vector<std::string> variables, TermOrder order) {
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty()) throw std::invalid_argument("ring: empty variable name");
    if (!seen.insert(v).second)
      throw std::invalid_argument("ring: duplicate variable name '" + v + "'");
  }
  return RingPtr(new PolyRing(std::move(variables), order));
}

int PolyRing::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != nvars() || b.size() != nvars())
    throw std::invalid_argument("monomial arity does not match ring");
  switch (order_) {
    case TermOrder::lex:
      for (std::size_t i = 0; i < nvars(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      return 0;
    case TermOrder::degrevlex: {
      int da = a.degree(), db = b.degree();
      if (da != db) return da > db ? 1 : -1;
      // Same degree: the greater monomial has the smaller exponent at the
      // last variable where they differ.
      for (std::size_t i = nvars(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      return 0;
    }
  }
  return 0;
}

std::optional<std::size_t> PolyRing::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

RingPtr PolyRing::extended(std::string* fresh_name) const {
  std::string name = "t0";
  for (int i = 0; var_index(name).has_value(); ++i) name = "t" + std::to_string(i);
  auto vars = vars_;
  vars.push_back(name);
  if (fresh_name) *fresh_name = name;
  return make(std::move(vars), order_);
}

void require_same_ring(const Polynomial& a, const Polynomial& b, const char* what) {
  if (!a.ring()->same_as(*b.ring()))
    throw std::invalid_argument(std::string(what) + ": ring mismatch");
}

Polynomial Polynomial::constant(RingPtr ring, Rational value) {
  Polynomial p(ring);
  if (value != 0) p.terms_.push_back({std::move(value), Monomial::one(ring->nvars())});
  return p;
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t index) {
  if (index >= ring->nvars()) throw std::invalid_argument("variable index out of range");
  std::vector<std::uint32_t> e(ring->nvars(), 0);
  e[index] = 1;
  return from_term(ring, 1, Monomial(std::move(e)));
}

Polynomial Polynomial::from_term(RingPtr ring, Rational coeff, Monomial mono) {
  Polynomial p(std::move(ring));
  if (mono.size() != p.ring_->nvars())
    throw std::invalid_argument("monomial arity does not match ring");
  if (coeff != 0) p.terms_.push_back({std::move(coeff), std::move(mono)});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> unsorted_terms) {
  // Merge duplicates and sort strictly descending.
  std::map<Monomial, Rational> acc;
  for (auto& t : unsorted_terms) {
    if (t.mono.size() != ring->nvars())
      throw std::invalid_argument("monomial arity does not match ring");
    acc[t.mono] += t.coeff;
  }
  Polynomial p(ring);
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({std::move(c), m});
  std::sort(p.terms_.begin(), p.terms_.end(), [&](const Term& a, const Term& b) {
    return ring->compare(a.mono, b.mono) > 0;
  });
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

std::optional<Rational> Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].mono.is_one()) return terms_[0].coeff;
  return std::nullopt;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::invalid_argument("leading term of zero polynomial");
  return terms_.front();
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_ring(*this, other, "add");
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    int c = ring_->compare(terms_[i].mono, other.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(other.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + other.terms_[j].coeff;
      if (s != 0) r.terms_.push_back({std::move(s), terms_[i].mono});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < other.terms_.size(); ++j) r.terms_.push_back(other.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_ring(*this, other, "mul");
  std::map<Monomial, Rational> acc;
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) acc[a.mono * b.mono] += a.coeff * b.coeff;
  Polynomial r(ring_);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.push_back({std::move(c), m});
  std::sort(r.terms_.begin(), r.terms_.end(), [&](const Term& a, const Term& b) {
    return ring_->compare(a.mono, b.mono) > 0;
  });
  return r;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
  if (scalar == 0) return Polynomial(ring_);
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff *= scalar;
  return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return ring_->same_as(*other.ring_) && terms_ == other.terms_;
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial r = Polynomial::constant(base.ring(), 1);
  for (unsigned i = 0; i < exponent; ++i) r = r * base;
  return r;
}

std::optional<Polynomial> exact_div(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p, q, "exact_div");
  if (q.is_zero()) throw std::invalid_argument("exact_div: division by zero");
  Polynomial rem = p;
  Polynomial quot(p.ring());
  const Term& qlt = q.leading_term();
  while (!rem.is_zero()) {
    auto m = rem.leading_term().mono.divided_by(qlt.mono);
    if (!m) return std::nullopt;
    Polynomial t = Polynomial::from_term(p.ring(), rem.leading_term().coeff / qlt.coeff,
                                         std::move(*m));
    quot = quot + t;
    rem = rem - t * q;
  }
  return quot;
}

std::optional<AssociatePower> associate_power(const Polynomial& p, const Polynomial& f) {
  if (p.is_zero()) throw std::invalid_argument("associate_power: zero polynomial");
  if (f.is_constant()) throw std::invalid_argument("associate_power: f must be nonconstant");
  Polynomial r = p;
  int e = 0;
  while (true) {
    if (auto c = r.constant_value()) return AssociatePower{e, *c};
    auto next = exact_div(r, f);
    if (!next) return std::nullopt;
    r = std::move(*next);
    ++e;
  }
}

Homogeneity homogeneity(const Polynomial& p) {
  if (p.is_zero()) return {true, std::nullopt};
  int d = p.terms().front().mono.degree();
  for (const auto& t : p.terms())
    if (t.mono.degree() != d) return {false, std::nullopt};
  return {true, d};
}

namespace {

struct Parser {
  const RingPtr& ring;
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos) +
                                ": " + msg);
  }

  Integer parse_integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    return Integer(std::string(text.substr(start, pos - start)));
  }

  std::string parse_name() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= text.size() || !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      fail("expected a variable name");
    ++pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return std::string(text.substr(start, pos - start));
  }

  // factor := number [/ number] | name [^ number]
  void parse_factor(Rational& coeff, std::vector<std::uint32_t>& exps) {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = parse_integer();
      Integer den = 1;
      if (peek() == '/') {
        ++pos;
        den = parse_integer();
        if (den == 0) fail("zero denominator");
      }
      coeff *= Rational(num, den);
    } else {
      std::string name = parse_name();
      auto idx = ring->var_index(name);
      if (!idx) fail("unknown variable '" + name + "'");
      std::uint32_t e = 1;
      if (peek() == '^') {
        ++pos;
        Integer k = parse_integer();
        if (k < 0 || k > 1000000) fail("exponent out of range");
        e = static_cast<std::uint32_t>(k);
      }
      exps[*idx] += e;
    }
  }

  Polynomial parse_term() {
    Rational coeff = 1;
    std::vector<std::uint32_t> exps(ring->nvars(), 0);
    parse_factor(coeff, exps);
    while (peek() == '*') {
      ++pos;
      parse_factor(coeff, exps);
    }
    return Polynomial::from_term(ring, std::move(coeff), Monomial(std::move(exps)));
  }

  Polynomial parse_sum() {
    Polynomial result(ring);
    bool negate = false;
    char c = peek();
    if (c == '+' || c == '-') {
      negate = (c == '-');
      ++pos;
    }
    if (eof()) fail("empty polynomial");
    while (true) {
      Polynomial term = parse_term();
      result = negate ? result - term : result + term;
      if (eof()) break;
      char op = peek();
      if (op == '+') {
        negate = false;
      } else if (op == '-') {
        negate = true;
      } else {
        fail(std::string("unexpected character '") + op + "'");
      }
      ++pos;
    }
    return result;
  }
};

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace

Polynomial Polynomial::parse(const RingPtr& ring, std::string_view text) {
  Parser parser{ring, text};
  Polynomial p = parser.parse_sum();
  return p;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->variables()[i];
      if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
    }
    if (mono.empty()) {
      os << rational_str(c);
    } else {
      if (c != 1) os << rational_str(c) << "*";
      os << mono;
    }
  }
  return os.str();
}

}  // namespace koszul
