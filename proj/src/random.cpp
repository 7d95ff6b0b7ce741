#include "fia/random.hpp"

#include <numeric>

namespace fia {

Scalar random_scalar(const Field& f, Rng& rng) {
  if (f.is_rationals()) {
    long long num = static_cast<long long>(rng() % 19) - 9;
    long long den = 1 + static_cast<long long>(rng() % 9);
    return f.from_integer(num) / f.from_integer(den);
  }
  return f.from_integer(static_cast<long long>(rng() % f.modulus()));
}

Scalar random_nonzero_scalar(const Field& f, Rng& rng) {
  while (true) {
    Scalar s = random_scalar(f, rng);
    if (!s.is_zero()) return s;
  }
}

Series random_series(const PosetPtr& poset, Field f, Rng& rng, int density_pct) {
  std::map<Segment, Scalar> m;
  for (Segment seg : poset->segments()) {
    if (int(rng() % 100) < density_pct) {
      m.emplace_hint(m.end(), seg, random_nonzero_scalar(f, rng));
    }
  }
  return Series::from_map(poset, f, std::move(m));
}

Series random_invertible_series(const PosetPtr& poset, Field f, Rng& rng, int density_pct) {
  std::map<Segment, Scalar> m;
  for (Segment seg : poset->segments()) {
    if (seg.lo == seg.hi) {
      m.emplace_hint(m.end(), seg, random_nonzero_scalar(f, rng));
    } else if (int(rng() % 100) < density_pct) {
      m.emplace_hint(m.end(), seg, random_nonzero_scalar(f, rng));
    }
  }
  return Series::from_map(poset, f, std::move(m));
}

Series random_radical_series(const PosetPtr& poset, Field f, Rng& rng, int density_pct) {
  std::map<Segment, Scalar> m;
  for (Segment seg : poset->segments()) {
    if (seg.lo != seg.hi && int(rng() % 100) < density_pct) {
      m.emplace_hint(m.end(), seg, random_nonzero_scalar(f, rng));
    }
  }
  return Series::from_map(poset, f, std::move(m));
}

Series random_diagonal_idempotent(const PosetPtr& poset, Field f, Rng& rng) {
  std::map<Segment, Scalar> m;
  for (int x = 0; x < poset->size(); ++x) {
    if (rng() % 2 == 1) m.emplace_hint(m.end(), Segment{x, x}, f.one());
  }
  return Series::from_map(poset, f, std::move(m));
}

PosetPtr random_poset(Rng& rng, int max_elements, int edge_pct) {
  int n = 1 + int(rng() % std::uint64_t(max_elements));
  std::vector<std::string> elems;
  for (int i = 0; i < n; ++i) elems.push_back("e" + std::to_string(i));
  std::vector<int> perm(std::size_t(n), 0);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(perm[std::size_t(i)], perm[rng() % std::uint64_t(i + 1)]);
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (int(rng() % 100) < edge_pct) {
        edges.emplace_back(elems[std::size_t(perm[std::size_t(i)])],
                           elems[std::size_t(perm[std::size_t(j)])]);
      }
    }
  }
  return Poset::build(std::move(elems), edges);
}

}  // namespace fia
