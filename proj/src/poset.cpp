#include "fia/poset.hpp"

#include <algorithm>
#include <numeric>

#include "fia/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fia {

int Poset::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) {
    throw UnknownElement("unknown element '" + std::string(id) + "'");
  }
  return it->second;
}

bool Poset::contains(std::string_view id) const {
  return index_.find(std::string(id)) != index_.end();
}

bool Poset::leq(std::string_view x, std::string_view y) const {
  return leq(index_of(x), index_of(y));
}

std::vector<int> Poset::interval(int x, int y) const {
  if (!leq(x, y)) {
    throw NotComparable("elements '" + elems_[x] + "' and '" + elems_[y] +
                        "' do not satisfy '" + elems_[x] + "' <= '" + elems_[y] + "'");
  }
  std::vector<int> zs;
  for (int z = 0; z < n_; ++z) {
    if (leq(x, z) && leq(z, y)) zs.push_back(z);
  }
  return zs;
}

int Poset::interval_size(int x, int y) const {
  int count = 0;
  for (int z = 0; z < n_; ++z) {
    if (leq(x, z) && leq(z, y)) ++count;
  }
  return count;
}

int Poset::height() const {
  // down-set sizes give a topological order for the longest-chain DP
  std::vector<int> down(n_, 0);
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      if (leq(y, x)) ++down[x];
    }
  }
  std::vector<int> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return down[a] < down[b]; });

  std::vector<int> h(n_, 1);
  int best = 0;
  for (int x : order) {
    for (int y = 0; y < n_; ++y) {
      if (less(y, x)) h[x] = std::max(h[x], h[y] + 1);
    }
    best = std::max(best, h[x]);
  }
  return best;
}

void Poset::finalize() {
  index_.clear();
  for (int i = 0; i < n_; ++i) {
    auto [it, inserted] = index_.emplace(elems_[i], i);
    if (!inserted) {
      throw DuplicateElement("duplicate element '" + elems_[i] + "'");
    }
  }

  segments_.clear();
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      if (leq(x, y)) segments_.push_back({x, y});
    }
  }

  covers_.clear();
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      if (!less(x, y)) continue;
      bool covering = true;
      for (int z = 0; z < n_ && covering; ++z) {
        if (less(x, z) && less(z, y)) covering = false;
      }
      if (covering) covers_.emplace_back(x, y);
    }
  }

  components_.clear();
  std::vector<int> comp(n_, -1);
  for (int start = 0; start < n_; ++start) {
    if (comp[start] != -1) continue;
    int label = int(components_.size());
    std::vector<int> stack = {start};
    comp[start] = label;
    std::vector<int> members;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (int y = 0; y < n_; ++y) {
        if (comp[y] == -1 && (leq(x, y) || leq(y, x))) {
          comp[y] = label;
          stack.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    components_.push_back(std::move(members));
  }
}

PosetPtr Poset::build(std::vector<std::string> elements,
                      const std::vector<std::pair<std::string, std::string>>& edges) {
  auto poset = std::shared_ptr<Poset>(new Poset());
  poset->elems_ = std::move(elements);
  poset->n_ = int(poset->elems_.size());
  const int n = poset->n_;

  // id -> index, rejecting duplicates early so edge lookups are unambiguous
  for (int i = 0; i < n; ++i) {
    auto [it, inserted] = poset->index_.emplace(poset->elems_[i], i);
    if (!inserted) {
      throw DuplicateElement("duplicate element '" + poset->elems_[i] + "'");
    }
  }

  poset->leq_.assign(std::size_t(n) * n, 0);
  for (int i = 0; i < n; ++i) poset->leq_[std::size_t(i) * n + i] = 1;
  for (const auto& [from, to] : edges) {
    poset->leq_[std::size_t(poset->index_of(from)) * n + poset->index_of(to)] = 1;
  }

  // reflexive-transitive closure (Warshall)
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!poset->leq(i, k)) continue;
      for (int j = 0; j < n; ++j) {
        if (poset->leq(k, j)) poset->leq_[std::size_t(i) * n + j] = 1;
      }
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (poset->leq(i, j) && poset->leq(j, i)) {
        throw CycleDetected("order cycle through '" + poset->elems_[i] + "' and '" +
                            poset->elems_[j] + "'");
      }
    }
  }

  poset->finalize();
  return poset;
}

namespace {

PosetPtr make_from_leq(std::vector<std::string> elements, std::vector<std::uint8_t> leq) {
  // used for constructions whose output is a poset by construction
  std::vector<std::pair<std::string, std::string>> edges;
  const int n = int(elements.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && leq[std::size_t(i) * n + j]) {
        edges.emplace_back(elements[i], elements[j]);
      }
    }
  }
  return Poset::build(std::move(elements), edges);
}

}  // namespace

PosetPtr Poset::chain(int n) {
  std::vector<std::string> elems;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) elems.push_back("c" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(elems[i], elems[i + 1]);
  return build(std::move(elems), edges);
}

PosetPtr Poset::antichain(int n) {
  std::vector<std::string> elems;
  for (int i = 0; i < n; ++i) elems.push_back("a" + std::to_string(i));
  return build(std::move(elems), {});
}

PosetPtr Poset::diamond() {
  return build({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
}

PosetPtr Poset::boolean_lattice(int k) {
  if (k < 0 || k > 20) throw SizeTooLarge("boolean lattice rank out of range");
  const int n = 1 << k;
  std::vector<std::string> elems;
  elems.reserve(n);
  for (int mask = 0; mask < n; ++mask) {
    std::string id(std::size_t(k), '0');
    for (int b = 0; b < k; ++b) {
      if (mask & (1 << b)) id[std::size_t(b)] = '1';
    }
    elems.push_back(k == 0 ? "0" : id);
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (int mask = 0; mask < n; ++mask) {
    for (int b = 0; b < k; ++b) {
      if (!(mask & (1 << b))) edges.emplace_back(elems[mask], elems[mask | (1 << b)]);
    }
  }
  return build(std::move(elems), edges);
}

namespace {

std::vector<std::string> namespaced_union(const Poset& p, const Poset& q) {
  std::vector<std::string> elems;
  elems.reserve(std::size_t(p.size()) + q.size());
  for (const auto& id : p.elements()) elems.push_back("l." + id);
  for (const auto& id : q.elements()) elems.push_back("r." + id);
  return elems;
}

}  // namespace

PosetPtr Poset::order_sum(const PosetPtr& p, const PosetPtr& q) {
  const int np = p->size(), nq = q->size(), n = np + nq;
  std::vector<std::uint8_t> leq(std::size_t(n) * n, 0);
  for (int i = 0; i < np; ++i) {
    for (int j = 0; j < np; ++j) leq[std::size_t(i) * n + j] = p->leq(i, j);
    for (int j = 0; j < nq; ++j) leq[std::size_t(i) * n + np + j] = 1;
  }
  for (int i = 0; i < nq; ++i) {
    for (int j = 0; j < nq; ++j) leq[std::size_t(np + i) * n + np + j] = q->leq(i, j);
  }
  return make_from_leq(namespaced_union(*p, *q), std::move(leq));
}

PosetPtr Poset::disjoint_union(const PosetPtr& p, const PosetPtr& q) {
  const int np = p->size(), nq = q->size(), n = np + nq;
  std::vector<std::uint8_t> leq(std::size_t(n) * n, 0);
  for (int i = 0; i < np; ++i) {
    for (int j = 0; j < np; ++j) leq[std::size_t(i) * n + j] = p->leq(i, j);
  }
  for (int i = 0; i < nq; ++i) {
    for (int j = 0; j < nq; ++j) leq[std::size_t(np + i) * n + np + j] = q->leq(i, j);
  }
  return make_from_leq(namespaced_union(*p, *q), std::move(leq));
}

PosetPtr Poset::order_product(const PosetPtr& p, const PosetPtr& q) {
  const int np = p->size(), nq = q->size(), n = np * nq;
  std::vector<std::string> elems;
  elems.reserve(std::size_t(n));
  for (int i = 0; i < np; ++i) {
    for (int j = 0; j < nq; ++j) {
      elems.push_back("(" + p->id_of(i) + "," + q->id_of(j) + ")");
    }
  }
  std::vector<std::uint8_t> leq(std::size_t(n) * n, 0);
  for (int i = 0; i < np; ++i) {
    for (int j = 0; j < nq; ++j) {
      for (int k = 0; k < np; ++k) {
        for (int l = 0; l < nq; ++l) {
          leq[std::size_t(i * nq + j) * n + (k * nq + l)] = p->leq(i, k) && q->leq(j, l);
        }
      }
    }
  }
  return make_from_leq(std::move(elems), std::move(leq));
}

PosetPtr Poset::induced(const std::vector<int>& indices) const {
  std::vector<std::string> elems;
  elems.reserve(indices.size());
  for (int i : indices) elems.push_back(elems_[std::size_t(i)]);
  const int m = int(indices.size());
  std::vector<std::uint8_t> sub(std::size_t(m) * m, 0);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) sub[std::size_t(a) * m + b] = leq(indices[a], indices[b]);
  }
  return make_from_leq(std::move(elems), std::move(sub));
}

bool Poset::operator==(const Poset& other) const {
  return elems_ == other.elems_ && leq_ == other.leq_;
}

bool same_poset(const PosetPtr& a, const PosetPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  return *a == *b;
}

const std::string& IsoWitness::apply(const std::string& id) const {
  auto it = mapping.find(id);
  if (it == mapping.end()) {
    throw UnknownElement("witness does not map element '" + id + "'");
  }
  return it->second;
}

bool is_order_isomorphism(const Poset& p, const Poset& q, const IsoWitness& w) {
  if (p.size() != q.size() || int(w.mapping.size()) != p.size()) return false;
  std::vector<int> image(std::size_t(p.size()), -1);
  std::vector<bool> hit(std::size_t(q.size()), false);
  for (const auto& [from, to] : w.mapping) {
    if (!p.contains(from) || !q.contains(to)) return false;
    int xi = p.index_of(from), yi = q.index_of(to);
    if (hit[std::size_t(yi)]) return false;
    hit[std::size_t(yi)] = true;
    image[std::size_t(xi)] = yi;
  }
  for (int x = 0; x < p.size(); ++x) {
    for (int y = 0; y < p.size(); ++y) {
      if (p.leq(x, y) != q.leq(image[std::size_t(x)], image[std::size_t(y)])) return false;
    }
  }
  return true;
}

namespace {

struct DegreeSignature {
  int down = 0;
  int up = 0;
  friend auto operator<=>(const DegreeSignature&, const DegreeSignature&) = default;
};

std::vector<DegreeSignature> degree_signatures(const Poset& p) {
  std::vector<DegreeSignature> sig(std::size_t(p.size()));
  for (int x = 0; x < p.size(); ++x) {
    for (int y = 0; y < p.size(); ++y) {
      if (p.leq(y, x)) ++sig[std::size_t(x)].down;
      if (p.leq(x, y)) ++sig[std::size_t(x)].up;
    }
  }
  return sig;
}

bool extend_isomorphism(const Poset& p, const Poset& q,
                        const std::vector<DegreeSignature>& sp,
                        const std::vector<DegreeSignature>& sq, std::vector<int>& image,
                        std::vector<bool>& used, int x) {
  if (x == p.size()) return true;
  for (int y = 0; y < q.size(); ++y) {
    if (used[std::size_t(y)] || sp[std::size_t(x)] != sq[std::size_t(y)]) continue;
    bool consistent = true;
    for (int x2 = 0; x2 < x && consistent; ++x2) {
      int y2 = image[std::size_t(x2)];
      consistent = p.leq(x, x2) == q.leq(y, y2) && p.leq(x2, x) == q.leq(y2, y);
    }
    if (!consistent) continue;
    image[std::size_t(x)] = y;
    used[std::size_t(y)] = true;
    if (extend_isomorphism(p, q, sp, sq, image, used, x + 1)) return true;
    used[std::size_t(y)] = false;
  }
  return false;
}

}  // namespace

std::optional<IsoWitness> poset_isomorphism(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return std::nullopt;
  auto sp = degree_signatures(p);
  auto sq = degree_signatures(q);
  auto sorted_p = sp, sorted_q = sq;
  std::sort(sorted_p.begin(), sorted_p.end());
  std::sort(sorted_q.begin(), sorted_q.end());
  if (sorted_p != sorted_q) return std::nullopt;

  std::vector<int> image(std::size_t(p.size()), -1);
  std::vector<bool> used(std::size_t(q.size()), false);
  if (!extend_isomorphism(p, q, sp, sq, image, used, 0)) return std::nullopt;

  IsoWitness w;
  for (int x = 0; x < p.size(); ++x) {
    w.mapping.emplace(p.id_of(x), q.id_of(image[std::size_t(x)]));
  }
  return w;
}

namespace detail {

namespace {

// bit index of the ordered pair (i, j), i != j
inline int pair_bit(int n, int i, int j) { return i * (n - 1) + (j > i ? j - 1 : j); }

bool mask_is_strict_order(std::uint32_t mask, int n) {
  auto rel = [&](int i, int j) { return (mask >> pair_bit(n, i, j)) & 1u; };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rel(i, j) && rel(j, i)) return false;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || !rel(i, j)) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (rel(j, k) && !rel(i, k)) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<std::uint32_t> strict_order_masks(int n, bool parallel) {
  if (n == 0) return {0};
  const std::uint64_t total = std::uint64_t(1) << (n * (n - 1));
  std::vector<std::vector<std::uint32_t>> chunks;

#ifdef _OPENMP
  if (parallel) {
    const int max_threads = omp_get_max_threads();
    chunks.assign(std::size_t(max_threads), {});
    const std::uint64_t block = (total + max_threads - 1) / max_threads;
#pragma omp parallel num_threads(max_threads)
    {
      const int t = omp_get_thread_num();
      const std::uint64_t lo = std::uint64_t(t) * block;
      const std::uint64_t hi = std::min(total, lo + block);
      auto& mine = chunks[std::size_t(t)];
      for (std::uint64_t mask = lo; mask < hi; ++mask) {
        if (mask_is_strict_order(std::uint32_t(mask), n)) {
          mine.push_back(std::uint32_t(mask));
        }
      }
    }
  }
#else
  (void)parallel;
#endif

  if (chunks.empty()) {
    chunks.emplace_back();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      if (mask_is_strict_order(std::uint32_t(mask), n)) {
        chunks.back().push_back(std::uint32_t(mask));
      }
    }
  }

  // chunk ranges are disjoint and ascending, so concatenation keeps the
  // result independent of the thread count
  std::vector<std::uint32_t> masks;
  for (auto& c : chunks) masks.insert(masks.end(), c.begin(), c.end());
  return masks;
}

}  // namespace detail

std::vector<PosetPtr> enumerate_posets(int n) {
  if (n < 0 || n > 5) {
    throw SizeTooLarge("poset enumeration is exhaustive and limited to n <= 5, got " +
                       std::to_string(n));
  }

  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back("x" + std::to_string(i));

  std::vector<PosetPtr> classes;
  std::vector<std::vector<DegreeSignature>> class_sigs;
  for (std::uint32_t mask : detail::strict_order_masks(n, true)) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j && ((mask >> (i * (n - 1) + (j > i ? j - 1 : j))) & 1u)) {
          edges.emplace_back(ids[std::size_t(i)], ids[std::size_t(j)]);
        }
      }
    }
    PosetPtr candidate = Poset::build(ids, edges);
    auto sig = degree_signatures(*candidate);
    std::sort(sig.begin(), sig.end());
    bool fresh = true;
    for (std::size_t c = 0; c < classes.size() && fresh; ++c) {
      if (class_sigs[c] == sig && poset_isomorphism(*classes[c], *candidate)) {
        fresh = false;
      }
    }
    if (fresh) {
      classes.push_back(std::move(candidate));
      class_sigs.push_back(std::move(sig));
    }
  }
  return classes;
}

}  // namespace fia
