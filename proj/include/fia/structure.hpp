#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fia/series.hpp"

namespace fia {

bool is_idempotent(const Series& a);

/// Same diagonal, zero elsewhere.
Series diagonal_part(const Series& a);

/// Result of conjugating an idempotent onto its diagonal: the input equals
/// conjugator^-1 * epsilon * conjugator.
struct DiagonalizedIdempotent {
  Series epsilon;     // diagonal, entries in {0, 1}
  Series conjugator;  // invertible
};

/// Conjugates an idempotent a to the diagonal idempotent with the same
/// diagonal. The conjugator is identity + (2 epsilon - identity) * (a -
/// epsilon), which is invertible because a - epsilon has zero diagonal.
/// With check_identities set, the two internal identities the construction
/// relies on are verified:
///   eps*rho + rho*eps = rho - rho^2
///   eps*rho*eps + eps*rho^2 = 0        (rho = a - epsilon)
/// Throws NotIdempotent when a*a != a.
DiagonalizedIdempotent diagonalize_idempotent(const Series& a, bool check_identities = false);

/// True iff the (idempotent) argument has exactly one diagonal 1, i.e. is
/// conjugate to a diagonal unit. Throws NotIdempotent otherwise.
bool is_primitive_idempotent(const Series& a);

/// Searches for chi with a * chi * a = a by solving the linear system over
/// the segment coefficients with exact elimination. Returns nullopt when the
/// system is inconsistent (the element is not regular); this is a result,
/// not an error.
std::optional<Series> inner_inverse(const Series& a);

/// chi * a * chi for a witness chi of a * chi * a = a. The result g
/// satisfies a g a = a and g a g = g; both are verified before returning.
/// Throws NotAWitness when chi is not a witness.
Series reflexive_inverse(const Series& a, const Series& chi);

/// Factorization of a regular element as (invertible) * (diagonal
/// idempotent) * (invertible).
struct RegularFactorization {
  Series beta;
  Series epsilon;
  Series gamma;
};

/// Factors a = beta * epsilon * gamma from a regularity witness chi,
/// diagonalizing a*chi and chi*a and completing the diagonal between them.
/// epsilon(x,x) = 0 exactly where a(x,x) = 0. Throws NotAWitness.
RegularFactorization regular_factorization(const Series& a, const Series& chi,
                                           bool check_identities = false);

/// True iff on every connected component the restriction of a is zero or
/// invertible. Equivalent to a having exactly one reflexive generalized
/// inverse.
bool is_superregular(const Series& a);

/// Restriction of a to the induced subposet on one connected component
/// (given by element ids). Throws NotAComponent unless the set is exactly a
/// component of the owning poset.
Series restrict_to_component(const Series& a, const std::vector<std::string>& component_ids);

}  // namespace fia
