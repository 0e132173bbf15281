#pragma once

#include "koszul/gb.hpp"
#include "koszul/modvec.hpp"
#include "koszul/ring.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace koszul {

/// Dense matrix over the polynomial ring. Zero-by-n shapes are legal; they
/// represent maps in and out of the rank-0 free module.
class RingMatrix {
public:
  RingMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  static RingMatrix identity(const RingPtr& ring, std::size_t n);
  static RingMatrix diagonal(const RingPtr& ring, std::vector<Polynomial> entries);
  static RingMatrix from_rows(const RingPtr& ring,
                              std::vector<std::vector<Polynomial>> rows);
  static RingMatrix from_columns(const RingPtr& ring, std::size_t rows,
                                 const std::vector<ModVec>& columns);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Polynomial& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Polynomial value);

  ModVec column(std::size_t j) const;
  std::vector<ModVec> columns() const;

  RingMatrix operator*(const RingMatrix& other) const;
  RingMatrix operator+(const RingMatrix& other) const;
  RingMatrix operator-(const RingMatrix& other) const;
  RingMatrix operator-() const;
  RingMatrix scaled(const Polynomial& factor) const;
  RingMatrix transpose() const;
  bool operator==(const RingMatrix& other) const;
  bool is_zero() const;

  std::string str() const;

private:
  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<Polynomial> entries_;  // row-major
};

/// Exact determinant; cofactor expansion for sizes up to 3, fraction-free
/// Bareiss elimination above that.
Polynomial determinant(const RingMatrix& m);

/// Ideal of t x t minors. I_t = (1) for t <= 0 and (0) for t > min(rows, cols).
/// Enumeration is capped at matrices with max dimension 8.
Ideal minors_ideal(const RingMatrix& m, int t);

/// Rank over the fraction field, by fraction-free echelon elimination.
int rank_ff(const RingMatrix& m);

/// Kernel-freeness of the induced map on free modules: the syzygy module of
/// the columns is zero. Square matrices use the determinant shortcut.
bool is_injective(const RingMatrix& m);

/// [[a, b], [c, d]] with consistent block dimensions.
RingMatrix block2x2(const RingMatrix& a, const RingMatrix& b, const RingMatrix& c,
                    const RingMatrix& d);

}  // namespace koszul
