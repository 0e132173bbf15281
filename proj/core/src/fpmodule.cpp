#include "koszul/fpmodule.hpp"

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

// First `take` coordinates of each syzygy of the given columns, zeros dropped.
std::vector<ModVec> syzygy_projections(const RingPtr& ring, std::uint32_t ambient,
                                       const std::vector<ModVec>& columns,
                                       std::uint32_t take) {
  std::vector<ModVec> out;
  for (const auto& s : syzygies(ring, ambient, columns)) {
    std::vector<ModTerm> terms;
    for (const auto& t : s.terms())
      if (t.component < take) terms.push_back(t);
    ModVec head = ModVec::from_terms(ring, take, std::move(terms));
    if (!head.is_zero()) out.push_back(std::move(head));
  }
  return out;
}

}  // namespace

FPModule::FPModule(std::size_t generators, RingMatrix relations)
    : generators_(generators), relations_(std::move(relations)),
      once_(std::make_shared<std::once_flag>()) {
  if (relations_.rows() != generators_)
    throw std::invalid_argument("FPModule: relations must have one row per generator");
}

FPModule FPModule::free_module(const RingPtr& ring, std::size_t rank) {
  return FPModule(rank, RingMatrix(ring, rank, 0));
}

FPModule FPModule::cokernel(RingMatrix relations) {
  std::size_t g = relations.rows();
  return FPModule(g, std::move(relations));
}

const Submodule& FPModule::relation_submodule() const {
  std::call_once(*once_, [this] {
    span_ = std::make_shared<Submodule>(ring(), static_cast<std::uint32_t>(generators_),
                                        relations_.columns());
  });
  return *span_;
}

bool FPModule::is_zero() const {
  for (std::size_t i = 0; i < generators_; ++i) {
    ModVec e = ModVec::unit(ring(), static_cast<std::uint32_t>(generators_),
                            static_cast<std::uint32_t>(i));
    if (!relation_submodule().contains(e)) return false;
  }
  return true;
}

FPModule FPModule::simplified() const {
  RingMatrix rel = relations_;
  std::size_t gens = generators_;
  while (true) {
    std::size_t pi = 0, pj = 0;
    bool found = false;
    for (std::size_t i = 0; i < rel.rows() && !found; ++i)
      for (std::size_t j = 0; j < rel.cols() && !found; ++j) {
        auto c = rel.at(i, j).constant_value();
        if (c && *c != 0) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    Rational c = *rel.at(pi, pj).constant_value();
    // Substitute generator pi using relation column pj, then drop both.
    RingMatrix next(rel.ring(), rel.rows() - 1, rel.cols() - 1);
    std::size_t jj = 0;
    for (std::size_t j = 0; j < rel.cols(); ++j) {
      if (j == pj) continue;
      Polynomial factor = rel.at(pi, j) * (Rational(1) / c);
      std::size_t ii = 0;
      for (std::size_t i = 0; i < rel.rows(); ++i) {
        if (i == pi) continue;
        next.set(ii, jj, rel.at(i, j) - factor * rel.at(i, pj));
        ++ii;
      }
      ++jj;
    }
    rel = std::move(next);
    --gens;
  }
  // Drop zero relation columns.
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < rel.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < rel.rows(); ++i)
      if (!rel.at(i, j).is_zero()) {
        zero = false;
        break;
      }
    if (!zero) keep.push_back(j);
  }
  RingMatrix pruned(rel.ring(), gens, keep.size());
  for (std::size_t i = 0; i < gens; ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) pruned.set(i, j, rel.at(i, keep[j]));
  return FPModule(gens, std::move(pruned));
}

bool hom_compatible(const FPModule& src, const FPModule& dst, const RingMatrix& map) {
  if (map.rows() != dst.generators() || map.cols() != src.generators()) return false;
  if (!map.ring()->same_as(*src.ring())) return false;
  if (dst.generators() == 0) return true;
  RingMatrix image = map * src.relations();
  for (std::size_t j = 0; j < image.cols(); ++j)
    if (!dst.relation_submodule().contains(image.column(j))) return false;
  return true;
}

FPModule kernel_of_hom(const FPModule& src, const FPModule& dst, const RingMatrix& map) {
  if (!hom_compatible(src, dst, map))
    throw std::invalid_argument("kernel_of_hom: map is not a homomorphism of presentations");
  const RingPtr& ring = src.ring();
  const std::uint32_t srank = static_cast<std::uint32_t>(src.generators());

  // Generators of {v : map(v) in relations(dst)}.
  std::vector<ModVec> kernel_gens;
  if (dst.generators() == 0) {
    for (std::uint32_t i = 0; i < srank; ++i)
      kernel_gens.push_back(ModVec::unit(ring, srank, i));
  } else {
    RingMatrix blocked = hcat(map, dst.relations());
    kernel_gens = syzygy_projections(ring, static_cast<std::uint32_t>(dst.generators()),
                                     blocked.columns(), srank);
  }

  if (kernel_gens.empty()) return FPModule::zero(ring);

  // Relations among those generators, modulo relations(src).
  std::vector<ModVec> block = kernel_gens;
  for (const auto& c : src.relations().columns()) block.push_back(c);
  std::vector<ModVec> rel = syzygy_projections(ring, srank, block,
                                               static_cast<std::uint32_t>(kernel_gens.size()));
  return FPModule(kernel_gens.size(),
                  RingMatrix::from_columns(ring, kernel_gens.size(), rel));
}

FPModule cokernel_of_hom(const FPModule& src, const FPModule& dst, const RingMatrix& map) {
  if (!hom_compatible(src, dst, map))
    throw std::invalid_argument("cokernel_of_hom: map is not a homomorphism of presentations");
  return FPModule(dst.generators(), hcat(map, dst.relations()));
}

bool iso_check(const FPModule& src, const FPModule& dst, const RingMatrix& map) {
  if (!hom_compatible(src, dst, map))
    throw std::invalid_argument("iso_check: map is not a homomorphism of presentations");
  return kernel_of_hom(src, dst, map).is_zero() && cokernel_of_hom(src, dst, map).is_zero();
}

Ideal annihilator(const FPModule& m) {
  const RingPtr& ring = m.ring();
  Ideal acc = Ideal::unit(ring);
  const std::uint32_t rank = static_cast<std::uint32_t>(m.generators());
  for (std::uint32_t i = 0; i < rank; ++i) {
    // {a : a e_i in relations} is the first coordinate of the syzygies of
    // [e_i | relation columns].
    std::vector<ModVec> block;
    block.push_back(ModVec::unit(ring, rank, i));
    for (const auto& c : m.relations().columns()) block.push_back(c);
    std::vector<Polynomial> quot;
    for (const auto& s : syzygies(ring, rank, block)) {
      Polynomial c0 = s.component(0);
      if (!c0.is_zero()) quot.push_back(std::move(c0));
    }
    acc = ideal_intersect(acc, Ideal(ring, std::move(quot)));
  }
  return acc;
}

}  // namespace koszul
