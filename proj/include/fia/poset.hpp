#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fia {

/// Closed segment [lo, hi] of a poset, stored as element indices into the
/// owning poset's element list. Ordering is lexicographic by (lo, hi), which
/// is the deterministic segment order used everywhere.
struct Segment {
  int lo = 0;
  int hi = 0;
  friend auto operator<=>(const Segment&, const Segment&) = default;
};

class Poset;
using PosetPtr = std::shared_ptr<const Poset>;

/// Finite poset with a precomputed dense order table. Immutable after
/// construction; shared by value via PosetPtr.
///
/// Element order is the input order, and every derived listing (segments,
/// intervals, components) follows it, so outputs are reproducible.
class Poset {
 public:
  /// Closes the given relation reflexively and transitively and validates it.
  /// The edges may be any subrelation whose closure is the intended order;
  /// construction fails with CycleDetected rather than repairing a cycle.
  static PosetPtr build(std::vector<std::string> elements,
                        const std::vector<std::pair<std::string, std::string>>& edges);

  static PosetPtr chain(int n);      // ids c0 < c1 < ... < c{n-1}
  static PosetPtr antichain(int n);  // ids a0, ..., a{n-1}, no relations
  static PosetPtr diamond();         // a < b, a < c, b < d, c < d
  static PosetPtr boolean_lattice(int k);  // subsets of k atoms as bit strings

  /// Order sum: every element of p below every element of q. Ids are
  /// namespaced ("l."/"r.") so the inputs never collide.
  static PosetPtr order_sum(const PosetPtr& p, const PosetPtr& q);
  /// Componentwise order on pairs "(a,b)".
  static PosetPtr order_product(const PosetPtr& p, const PosetPtr& q);
  /// Disjoint union with the same namespacing as order_sum and no cross
  /// relations.
  static PosetPtr disjoint_union(const PosetPtr& p, const PosetPtr& q);

  int size() const { return n_; }
  const std::vector<std::string>& elements() const { return elems_; }
  const std::string& id_of(int i) const { return elems_[i]; }
  int index_of(std::string_view id) const;  // UnknownElement
  bool contains(std::string_view id) const;

  bool leq(int x, int y) const { return leq_[std::size_t(x) * n_ + y] != 0; }
  bool less(int x, int y) const { return x != y && leq(x, y); }
  bool leq(std::string_view x, std::string_view y) const;

  /// All z with x <= z <= y, in element order. Requires x <= y.
  std::vector<int> interval(int x, int y) const;
  int interval_size(int x, int y) const;

  /// All segments (x, y) with x <= y, ordered by (lo, hi).
  const std::vector<Segment>& segments() const { return segments_; }

  /// Covering pairs (the transitive reduction of the order).
  const std::vector<std::pair<int, int>>& covering_pairs() const { return covers_; }

  /// Partition of the elements into components of the comparability graph.
  /// Components are ordered by their smallest element index.
  const std::vector<std::vector<int>>& connected_components() const { return components_; }

  /// Number of elements in the longest chain (0 for the empty poset).
  int height() const;

  /// Subposet induced by the given element indices (kept in element order).
  PosetPtr induced(const std::vector<int>& indices) const;

  /// Structural equality: same ids in the same order and the same relation.
  bool operator==(const Poset& other) const;

 private:
  Poset() = default;
  void finalize();  // fills segments_, covers_, components_ from leq_

  int n_ = 0;
  std::vector<std::string> elems_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::uint8_t> leq_;  // n*n, row-major
  std::vector<Segment> segments_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> components_;
};

/// Two series interoperate when they reference the same poset object or
/// structurally equal ones.
bool same_poset(const PosetPtr& a, const PosetPtr& b);

/// Order-preserving bijection between two posets, keyed by element id.
struct IsoWitness {
  std::map<std::string, std::string> mapping;

  const std::string& apply(const std::string& id) const;
};

/// Checks that `w` is a bijection P -> Q with x <= y iff w(x) <= w(y).
bool is_order_isomorphism(const Poset& p, const Poset& q, const IsoWitness& w);

/// Backtracking search for an order isomorphism, pruned by degree invariants.
std::optional<IsoWitness> poset_isomorphism(const Poset& p, const Poset& q);

/// One representative per isomorphism class of n-element posets, obtained by
/// exhaustive enumeration of strict orders with isomorphism deduplication.
/// Class counts for n = 1..5 are 1, 2, 5, 16, 63. Throws SizeTooLarge for
/// n > 5.
std::vector<PosetPtr> enumerate_posets(int n);

namespace detail {
/// All bitmasks over the n*(n-1) ordered pairs that encode a strict partial
/// order on n labeled points, ascending. The scan parallelizes over the mask
/// range; `parallel = false` forces the serial path (kept as the reference
/// for tests and benchmarks).
std::vector<std::uint32_t> strict_order_masks(int n, bool parallel);
}  // namespace detail

}  // namespace fia
