#pragma once

#include <map>
#include <string_view>
#include <tuple>
#include <vector>

#include "fia/field.hpp"
#include "fia/poset.hpp"

namespace fia {

/// Element of the incidence algebra of a finite poset: a sparse map from
/// segments [x, y] to nonzero coefficients of a fixed field. Zero
/// coefficients are never stored, so equality is map equality. Series are
/// immutable values and every operation on them is a pure function.
class Series {
 public:
  /// The zero series.
  Series(PosetPtr poset, Field field) : poset_(std::move(poset)), field_(field) {}

  /// The algebra identity: 1 on (x, x) for every x.
  static Series identity(PosetPtr poset, Field field);
  /// The diagonal unit at x: 1 on (x, x) only. The primitive diagonal
  /// idempotent supported at x.
  static Series diagonal_unit(PosetPtr poset, Field field, std::string_view x);
  /// Single-entry series: 1 on the segment (x, y). Requires x <= y.
  static Series unit(PosetPtr poset, Field field, std::string_view x, std::string_view y);
  /// 1 on every segment.
  static Series zeta(PosetPtr poset, Field field);

  /// Builds a series from (x, y, value) triples; repeated segments
  /// accumulate, zeros are dropped. Keys must satisfy x <= y.
  static Series from_entries(PosetPtr poset, Field field,
                             const std::vector<std::tuple<std::string, std::string, Scalar>>& entries);
  /// Canonicalizes an index-keyed map: validates keys and fields, drops
  /// zeros.
  static Series from_map(PosetPtr poset, Field field, std::map<Segment, Scalar> entries);

  const PosetPtr& poset() const { return poset_; }
  const Field& field() const { return field_; }

  /// Sparse entries in (lo, hi) element order.
  const std::map<Segment, Scalar>& entries() const { return entries_; }
  int support_size() const { return int(entries_.size()); }

  /// Coefficient at (x, y); zero when absent.
  Scalar at(int x, int y) const;
  Scalar at(std::string_view x, std::string_view y) const;

  bool is_zero() const { return entries_.empty(); }

 private:
  PosetPtr poset_;
  Field field_;
  std::map<Segment, Scalar> entries_;
};

/// Throws PosetMismatch / FieldMismatch unless a and b live in the same
/// algebra.
void require_compatible(const Series& a, const Series& b);

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series scale(const Scalar& c, const Series& a);
bool equal(const Series& a, const Series& b);

/// Convolution (ab)(x,y) = sum over x <= z <= y of a(x,z) b(z,y).
/// Result rows are independent, so the kernel parallelizes over them; the
/// serial definition-based implementation lives in fia::reference.
Series convolve(const Series& a, const Series& b);

/// a convolved with itself k times; k = 0 gives the identity.
Series power(const Series& a, int k);

/// Number of nonzero off-diagonal coefficients on subsegments of [u, v].
/// This is the quantity whose finiteness defines a finitary series; on a
/// finite poset it is a diagnostic counter (see the truncation-growth demo).
long long finitarity_count(const Series& a, int u, int v);
long long finitarity_count(const Series& a, std::string_view u, std::string_view v);

/// True iff every diagonal coefficient is nonzero, which characterizes
/// invertibility in the whole algebra.
bool is_invertible(const Series& a);

/// Two-sided inverse, computed by the triangular coefficient recursion
///   b(u,u) = a(u,u)^-1
///   b(u,v) = -a(u,u)^-1 * sum over u < x <= v of a(u,x) b(x,v)
/// processed in an order where (x,v) is ready before (u,v) whenever u < x.
/// Throws NotInvertible naming a witness element with zero diagonal.
Series invert(const Series& a);

/// True iff all diagonal coefficients vanish; such series form the radical,
/// and they are nilpotent with exponent bounded by the poset height.
bool is_radical(const Series& a);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator*(const Series& a, const Series& b) { return convolve(a, b); }
inline Series operator*(const Scalar& c, const Series& a) { return scale(c, a); }
inline Series operator-(const Series& a) { return scale(a.field().from_integer(-1), a); }
inline bool operator==(const Series& a, const Series& b) { return equal(a, b); }

namespace reference {
/// Serial reference convolution: evaluates the defining interval sum for
/// every segment. Kept independent of the sparse parallel kernel for tests
/// and the benchmark.
Series convolve(const Series& a, const Series& b);
}  // namespace reference

}  // namespace fia
