#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "fia/series.hpp"

namespace fia {

/// Black-box algebra isomorphism FI(source) -> FI(target) over a fixed
/// field. The mapping must be a pure function; it is spot-verified on
/// randomized pairs at construction (full verification is impossible), and
/// recover_poset_iso fails loudly when it is not an isomorphism after all.
struct AlgebraIso {
  PosetPtr source;
  PosetPtr target;
  Field field;
  std::function<Series(const Series&)> forward;
  std::string description;
};

/// Transport of structure along a poset isomorphism:
/// forward(a)(w(x), w(y)) = a(x, y). Throws InvalidWitness unless w is an
/// order isomorphism source -> target.
AlgebraIso induced_iso(const PosetPtr& source, const PosetPtr& target, const IsoWitness& w,
                       Field field);

/// The inner automorphism a -> u^-1 a u. Throws NotInvertible.
AlgebraIso conjugation_iso(const Series& u);

/// Applies `first`, then `then`. Throws PosetMismatch / FieldMismatch when
/// the interfaces do not line up.
AlgebraIso compose(const AlgebraIso& first, const AlgebraIso& then);

/// Wraps an arbitrary mapping after spot-checking that it is unital,
/// additive and multiplicative on `rounds` randomized pairs. Throws
/// InvalidWitness when a spot check fails.
AlgebraIso custom_iso(PosetPtr source, PosetPtr target, Field field,
                      std::function<Series(const Series&)> forward, std::string description,
                      std::uint64_t seed = 0, int rounds = 4);

/// The spot check used by custom_iso, callable on any AlgebraIso.
bool spot_check(const AlgebraIso& iso, std::uint64_t seed, int rounds);

/// Recovers the underlying poset isomorphism from an algebra isomorphism:
/// the image of each diagonal unit is an idempotent whose diagonal is a
/// single 1, because conjugation cannot move diagonals; reading that 1
/// yields the element mapping, which is then verified to be an order
/// isomorphism in both directions.
///
/// Throws NotPrimitiveImage when some image fails to be a primitive
/// idempotent (the forward map is not an isomorphism), NotOrderPreserving
/// when the read-off mapping fails verification.
IsoWitness recover_poset_iso(const AlgebraIso& iso);

/// Order query through the algebra: x <= y iff the diagonal unit at x times
/// some series times the diagonal unit at y is nonzero. Implemented as the
/// direct order lookup; the product characterization is exercised in tests.
bool leq_via_products(const Poset& p, std::string_view x, std::string_view y);

}  // namespace fia
