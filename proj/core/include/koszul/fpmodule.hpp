#pragma once

#include "koszul/gb.hpp"
#include "koszul/matrix.hpp"

#include <optional>

namespace koszul {

/// Finitely presented module coker(relations): `generators` free generators,
/// relation submodule spanned by the columns of `relations`.
class FPModule {
public:
  FPModule(std::size_t generators, RingMatrix relations);
  static FPModule free_module(const RingPtr& ring, std::size_t rank);
  static FPModule zero(const RingPtr& ring) { return free_module(ring, 0); }
  /// coker of a matrix: generators = rows.
  static FPModule cokernel(RingMatrix relations);

  const RingPtr& ring() const { return relations_.ring(); }
  std::size_t generators() const { return generators_; }
  const RingMatrix& relations() const { return relations_; }
  const Submodule& relation_submodule() const;

  /// Every generator lies in the relation submodule.
  bool is_zero() const;

  /// Unit-pivot reduction of the presentation: repeatedly removes a generator
  /// carrying a unit coefficient in some relation. Purely cosmetic; presents
  /// an isomorphic module.
  FPModule simplified() const;

private:
  std::size_t generators_;
  RingMatrix relations_;
  mutable std::shared_ptr<Submodule> span_;  // lazily built, write-once
  mutable std::shared_ptr<std::once_flag> once_;
};

/// G maps generators of `src` to `dst`; well-defined iff G sends every
/// relation of src into the relation submodule of dst.
bool hom_compatible(const FPModule& src, const FPModule& dst, const RingMatrix& map);

/// Presentation of ker(src -> dst). Throws std::invalid_argument when the map
/// is not compatible.
FPModule kernel_of_hom(const FPModule& src, const FPModule& dst, const RingMatrix& map);

/// Presentation of coker(src -> dst).
FPModule cokernel_of_hom(const FPModule& src, const FPModule& dst, const RingMatrix& map);

/// Compatible and bijective: kernel and cokernel both vanish.
bool iso_check(const FPModule& src, const FPModule& dst, const RingMatrix& map);

/// {a in A : a * M = 0}.
Ideal annihilator(const FPModule& m);

}  // namespace koszul
