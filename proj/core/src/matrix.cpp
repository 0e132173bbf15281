#include "koszul/matrix.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace koszul {

RingMatrix::RingMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      entries_(rows * cols, Polynomial(ring_)) {}

RingMatrix RingMatrix::identity(const RingPtr& ring, std::size_t n) {
  RingMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Polynomial::constant(ring, 1));
  return m;
}

RingMatrix RingMatrix::diagonal(const RingPtr& ring, std::vector<Polynomial> entries) {
  RingMatrix m(ring, entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, i, std::move(entries[i]));
  return m;
}

RingMatrix RingMatrix::from_rows(const RingPtr& ring,
                                 std::vector<std::vector<Polynomial>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  RingMatrix m(ring, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, std::move(rows[i][j]));
  }
  return m;
}

RingMatrix RingMatrix::from_columns(const RingPtr& ring, std::size_t rows,
                                    const std::vector<ModVec>& columns) {
  RingMatrix m(ring, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].rank() != rows) throw std::invalid_argument("from_columns: rank mismatch");
    for (std::size_t i = 0; i < rows; ++i)
      m.set(i, j, columns[j].component(static_cast<std::uint32_t>(i)));
  }
  return m;
}

const Polynomial& RingMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::invalid_argument("matrix index out of range");
  return entries_[i * cols_ + j];
}

void RingMatrix::set(std::size_t i, std::size_t j, Polynomial value) {
  if (i >= rows_ || j >= cols_) throw std::invalid_argument("matrix index out of range");
  if (!value.ring()->same_as(*ring_)) throw std::invalid_argument("matrix entry: ring mismatch");
  entries_[i * cols_ + j] = std::move(value);
}

ModVec RingMatrix::column(std::size_t j) const {
  std::vector<Polynomial> comps;
  comps.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) comps.push_back(at(i, j));
  if (rows_ == 0) return ModVec(ring_, 0);
  return ModVec::from_components(std::move(comps));
}

std::vector<ModVec> RingMatrix::columns() const {
  std::vector<ModVec> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

RingMatrix RingMatrix::operator*(const RingMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  if (!ring_->same_as(*other.ring_)) throw std::invalid_argument("matrix product: ring mismatch");
  RingMatrix out(ring_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < other.cols_; ++j) {
      Polynomial s(ring_);
      for (std::size_t k = 0; k < cols_; ++k) s = s + at(i, k) * other.at(k, j);
      out.set(i, j, std::move(s));
    }
  return out;
}

RingMatrix RingMatrix::operator+(const RingMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix sum: dimension mismatch");
  RingMatrix out(ring_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] + other.entries_[i];
  return out;
}

RingMatrix RingMatrix::operator-(const RingMatrix& other) const { return *this + (-other); }

RingMatrix RingMatrix::operator-() const {
  RingMatrix out(ring_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = -entries_[i];
  return out;
}

RingMatrix RingMatrix::scaled(const Polynomial& factor) const {
  RingMatrix out(ring_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * factor;
  return out;
}

RingMatrix RingMatrix::transpose() const {
  RingMatrix out(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  return out;
}

bool RingMatrix::operator==(const RingMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && ring_->same_as(*other.ring_) &&
         entries_ == other.entries_;
}

bool RingMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

std::string RingMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).str();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

Polynomial det_cofactor(const RingMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial::constant(m.ring(), 1);
  if (n == 1) return m.at(0, 0);
  Polynomial acc(m.ring());
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    RingMatrix minor(m.ring(), n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == j) continue;
        minor.set(i - 1, cc++, m.at(i, k));
      }
    }
    Polynomial term = m.at(0, j) * det_cofactor(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

Polynomial det_bareiss(const RingMatrix& input) {
  const std::size_t n = input.rows();
  std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, Polynomial(input.ring())));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = input.at(i, j);
  Polynomial prev = Polynomial::constant(input.ring(), 1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t pivot = k;
      while (pivot < n && m[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return Polynomial(input.ring());
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = exact_div(num, prev);
        if (!q) throw std::logic_error("bareiss: inexact division");
        m[i][j] = std::move(*q);
      }
      m[i][k] = Polynomial(input.ring());
    }
    prev = m[k][k];
  }
  Polynomial d = m[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

}  // namespace

Polynomial determinant(const RingMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
  if (m.rows() <= 3) return det_cofactor(m);
  return det_bareiss(m);
}

namespace {

void combinations(std::size_t n, std::size_t k,
                  const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i-- > 0) {
      if (idx[i] + (k - i) < n) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
  }
}

}  // namespace

Ideal minors_ideal(const RingMatrix& m, int t) {
  if (t <= 0) return Ideal::unit(m.ring());
  const std::size_t mn = std::min(m.rows(), m.cols());
  if (static_cast<std::size_t>(t) > mn) return Ideal::zero(m.ring());
  if (std::max(m.rows(), m.cols()) > 8)
    throw std::invalid_argument("minors_ideal: enumeration capped at matrices of size 8");
  std::vector<Polynomial> gens;
  combinations(m.rows(), static_cast<std::size_t>(t), [&](const std::vector<std::size_t>& ri) {
    combinations(m.cols(), static_cast<std::size_t>(t), [&](const std::vector<std::size_t>& ci) {
      RingMatrix sub(m.ring(), ri.size(), ci.size());
      for (std::size_t a = 0; a < ri.size(); ++a)
        for (std::size_t b = 0; b < ci.size(); ++b) sub.set(a, b, m.at(ri[a], ci[b]));
      Polynomial d = determinant(sub);
      if (!d.is_zero()) gens.push_back(std::move(d));
    });
  });
  return Ideal(m.ring(), std::move(gens));
}

int rank_ff(const RingMatrix& input) {
  const std::size_t rows = input.rows(), cols = input.cols();
  std::vector<std::vector<Polynomial>> m(rows,
                                         std::vector<Polynomial>(cols, Polynomial(input.ring())));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = input.at(i, j);
  Polynomial prev = Polynomial::constant(input.ring(), 1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Polynomial num = m[i][j] * m[r][c] - m[i][c] * m[r][j];
        auto q = exact_div(num, prev);
        if (!q) throw std::logic_error("rank_ff: inexact division");
        m[i][j] = std::move(*q);
      }
      m[i][c] = Polynomial(input.ring());
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

bool is_injective(const RingMatrix& m) {
  if (m.cols() == 0) return true;
  if (m.rows() == m.cols()) return !determinant(m).is_zero();
  if (m.rows() == 0) return false;  // nonzero domain into the zero module
  return syzygies(m.ring(), static_cast<std::uint32_t>(m.rows()), m.columns()).empty();
}

RingMatrix block2x2(const RingMatrix& a, const RingMatrix& b, const RingMatrix& c,
                    const RingMatrix& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() ||
      b.cols() != d.cols())
    throw std::invalid_argument("block2x2: inconsistent block dimensions");
  RingMatrix out(a.ring(), a.rows() + c.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
    for (std::size_t j = 0; j < b.cols(); ++j) out.set(i, a.cols() + j, b.at(i, j));
  }
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) out.set(a.rows() + i, j, c.at(i, j));
    for (std::size_t j = 0; j < d.cols(); ++j) out.set(a.rows() + i, a.cols() + j, d.at(i, j));
  }
  return out;
}

}  // namespace koszul
