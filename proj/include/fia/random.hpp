#pragma once

#include <random>

#include "fia/series.hpp"

namespace fia {

/// Deterministic generators for randomized verification. All draws go
/// through rng() % k, so a fixed seed reproduces the same objects on every
/// platform.
using Rng = std::mt19937_64;

/// Rationals with small numerator/denominator, or a uniform residue.
Scalar random_scalar(const Field& f, Rng& rng);
Scalar random_nonzero_scalar(const Field& f, Rng& rng);

/// Sparse series: each segment is filled with probability density_pct/100.
Series random_series(const PosetPtr& poset, Field f, Rng& rng, int density_pct = 35);

/// Nonzero everywhere on the diagonal, random elsewhere; always invertible.
Series random_invertible_series(const PosetPtr& poset, Field f, Rng& rng,
                                int density_pct = 35);

/// Zero diagonal, random off-diagonal support; always in the radical.
Series random_radical_series(const PosetPtr& poset, Field f, Rng& rng,
                             int density_pct = 35);

/// Diagonal series with entries drawn from {0, 1}.
Series random_diagonal_idempotent(const PosetPtr& poset, Field f, Rng& rng);

/// Poset on 1..max_elements elements: random edges over a shuffled
/// topological order, then closed. Never cyclic.
PosetPtr random_poset(Rng& rng, int max_elements, int edge_pct = 35);

}  // namespace fia
