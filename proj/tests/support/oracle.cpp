#include "oracle.hpp"

#include <koszul/graded.hpp>

#include <map>
#include <stdexcept>

namespace koszul::oracle {

std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<std::uint32_t> exps(ring->nvars(), 0);
  // Lexicographic enumeration by recursion on variables.
  auto rec = [&](auto&& self, std::size_t var, int remaining) -> void {
    if (var + 1 == ring->nvars()) {
      exps[var] = static_cast<std::uint32_t>(remaining);
      out.emplace_back(exps);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      exps[var] = static_cast<std::uint32_t>(e);
      self(self, var + 1, remaining - e);
    }
  };
  if (ring->nvars() == 0) {
    if (d == 0) out.push_back(Monomial::one(0));
    return out;
  }
  rec(rec, 0, d);
  return out;
}

int rational_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational factor = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

namespace {

// Index of every ambient module monomial (mono, comp) of plain degree d.
struct AmbientBasis {
  std::vector<std::pair<Monomial, std::uint32_t>> monos;
  std::map<std::pair<std::uint32_t, Monomial>, std::size_t> index;
};

AmbientBasis ambient_basis(const RingPtr& ring, std::uint32_t rank, int d) {
  AmbientBasis b;
  for (std::uint32_t c = 0; c < rank; ++c)
    for (const auto& m : monomials_of_degree(ring, d)) {
      b.index[{c, m}] = b.monos.size();
      b.monos.emplace_back(m, c);
    }
  return b;
}

// Columns: m * gen for every generator and every monomial m of complementary
// degree. Returns the evaluation matrix over the ambient degree-d basis.
std::vector<std::vector<Rational>> evaluation_matrix(const RingPtr& ring, std::uint32_t rank,
                                                     const std::vector<ModVec>& gens, int d,
                                                     std::size_t* column_count) {
  std::vector<int> zero_shifts(rank, 0);
  AmbientBasis basis = ambient_basis(ring, rank, d);
  std::vector<std::vector<Rational>> matrix;
  std::size_t cols = 0;
  std::vector<std::vector<Rational>> columns;
  for (const auto& g : gens) {
    auto deg = shifted_degree(g, zero_shifts);
    if (!deg) throw std::invalid_argument("oracle: inhomogeneous generator");
    if (!deg->has_value()) continue;  // zero generator: no columns
    for (const auto& m : monomials_of_degree(ring, d - **deg)) {
      std::vector<Rational> col(basis.monos.size(), Rational(0));
      for (const auto& t : g.terms()) col[basis.index.at({t.component, t.mono * m})] += t.coeff;
      columns.push_back(std::move(col));
      ++cols;
    }
  }
  // Transpose into row-major rows x cols.
  matrix.assign(basis.monos.size(), std::vector<Rational>(cols, Rational(0)));
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < basis.monos.size(); ++i) matrix[i][j] = columns[j][i];
  if (column_count) *column_count = cols;
  return matrix;
}

}  // namespace

int span_piece_dim(const RingPtr& ring, std::uint32_t rank, const std::vector<ModVec>& gens,
                   int d) {
  std::size_t cols = 0;
  auto matrix = evaluation_matrix(ring, rank, gens, d, &cols);
  return rational_rank(std::move(matrix));
}

int syzygy_piece_dim(const RingPtr& ring, std::uint32_t rank, const std::vector<ModVec>& gens,
                     int d) {
  std::size_t cols = 0;
  auto matrix = evaluation_matrix(ring, rank, gens, d, &cols);
  return static_cast<int>(cols) - rational_rank(std::move(matrix));
}

int piece_dim_from_leads(const RingPtr& ring, std::uint32_t rank,
                         const std::vector<ModVec>& reduced_basis,
                         const std::vector<int>& shifts, int d) {
  int count = 0;
  for (std::uint32_t c = 0; c < rank; ++c) {
    for (const auto& m : monomials_of_degree(ring, d - shifts[c])) {
      for (const auto& g : reduced_basis) {
        const ModTerm& lt = g.leading_term();
        if (lt.component == c && lt.mono.divides(m)) {
          ++count;
          break;
        }
      }
    }
  }
  return count;
}

}  // namespace koszul::oracle
