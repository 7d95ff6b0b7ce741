#include "fia/series.hpp"

#include <algorithm>

#include "fia/errors.hpp"

namespace fia {

namespace {

std::string segment_text(const Poset& p, int x, int y) {
  return "(" + p.id_of(x) + ", " + p.id_of(y) + ")";
}

}  // namespace

Series Series::identity(PosetPtr poset, Field field) {
  Series s(poset, field);
  for (int x = 0; x < poset->size(); ++x) {
    s.entries_.emplace_hint(s.entries_.end(), Segment{x, x}, field.one());
  }
  return s;
}

Series Series::diagonal_unit(PosetPtr poset, Field field, std::string_view x) {
  Series s(poset, field);
  int xi = poset->index_of(x);
  s.entries_.emplace(Segment{xi, xi}, field.one());
  return s;
}

Series Series::unit(PosetPtr poset, Field field, std::string_view x, std::string_view y) {
  Series s(poset, field);
  int xi = poset->index_of(x);
  int yi = poset->index_of(y);
  if (!poset->leq(xi, yi)) {
    throw NotComparable("segment " + segment_text(*poset, xi, yi) + " is not in the poset");
  }
  s.entries_.emplace(Segment{xi, yi}, field.one());
  return s;
}

Series Series::zeta(PosetPtr poset, Field field) {
  Series s(poset, field);
  for (Segment seg : poset->segments()) {
    s.entries_.emplace_hint(s.entries_.end(), seg, field.one());
  }
  return s;
}

Series Series::from_entries(
    PosetPtr poset, Field field,
    const std::vector<std::tuple<std::string, std::string, Scalar>>& entries) {
  std::map<Segment, Scalar> m;
  for (const auto& [x, y, v] : entries) {
    Segment seg{poset->index_of(x), poset->index_of(y)};
    auto [it, inserted] = m.emplace(seg, v);
    if (!inserted) it->second += v;
  }
  return from_map(std::move(poset), field, std::move(m));
}

Series Series::from_map(PosetPtr poset, Field field, std::map<Segment, Scalar> entries) {
  Series s(std::move(poset), field);
  for (auto& [seg, v] : entries) {
    if (seg.lo < 0 || seg.hi >= s.poset_->size() || !s.poset_->leq(seg.lo, seg.hi)) {
      throw NotComparable("segment " + segment_text(*s.poset_, seg.lo, seg.hi) +
                          " is not in the poset");
    }
    if (v.field() != field) {
      throw MixedFields("coefficient at " + segment_text(*s.poset_, seg.lo, seg.hi) +
                        " belongs to " + v.field().name() + ", series is over " +
                        field.name());
    }
    if (!v.is_zero()) {
      s.entries_.emplace_hint(s.entries_.end(), seg, std::move(v));
    }
  }
  return s;
}

Scalar Series::at(int x, int y) const {
  auto it = entries_.find({x, y});
  return it == entries_.end() ? field_.zero() : it->second;
}

Scalar Series::at(std::string_view x, std::string_view y) const {
  return at(poset_->index_of(x), poset_->index_of(y));
}

void require_compatible(const Series& a, const Series& b) {
  if (a.field() != b.field()) {
    throw FieldMismatch("series fields differ: " + a.field().name() + " vs " +
                        b.field().name());
  }
  if (!same_poset(a.poset(), b.poset())) {
    throw PosetMismatch("series reference different posets");
  }
}

Series add(const Series& a, const Series& b) {
  require_compatible(a, b);
  std::map<Segment, Scalar> out = a.entries();
  for (const auto& [seg, v] : b.entries()) {
    auto [it, inserted] = out.emplace(seg, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return Series::from_map(a.poset(), a.field(), std::move(out));
}

Series sub(const Series& a, const Series& b) {
  return add(a, scale(a.field().from_integer(-1), b));
}

Series scale(const Scalar& c, const Series& a) {
  if (c.field() != a.field()) {
    throw FieldMismatch("scaling coefficient is over " + c.field().name() +
                        ", series over " + a.field().name());
  }
  std::map<Segment, Scalar> out;
  if (!c.is_zero()) {
    for (const auto& [seg, v] : a.entries()) {
      out.emplace_hint(out.end(), seg, c * v);
    }
  }
  return Series::from_map(a.poset(), a.field(), std::move(out));
}

bool equal(const Series& a, const Series& b) {
  require_compatible(a, b);
  return a.entries() == b.entries();
}

Series convolve(const Series& a, const Series& b) {
  require_compatible(a, b);
  const int n = a.poset()->size();
  const auto& ae = a.entries();
  const auto& be = b.entries();

  // one output map per result row; rows never share state
  std::vector<std::map<Segment, Scalar>> rows;
  rows.resize(std::size_t(n));
  const bool worthwhile = a.support_size() + b.support_size() > 512;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (worthwhile)
#endif
  for (int x = 0; x < n; ++x) {
    auto& out = rows[std::size_t(x)];
    auto a_row = ae.lower_bound({x, 0});
    auto a_row_end = ae.lower_bound({x + 1, 0});
    for (auto it = a_row; it != a_row_end; ++it) {
      const int z = it->first.hi;
      const Scalar& av = it->second;
      auto b_row = be.lower_bound({z, 0});
      auto b_row_end = be.lower_bound({z + 1, 0});
      for (auto jt = b_row; jt != b_row_end; ++jt) {
        Scalar term = av * jt->second;
        auto [slot, inserted] = out.try_emplace({x, jt->first.hi}, term);
        if (!inserted) slot->second += term;
      }
    }
  }
  (void)worthwhile;

  std::map<Segment, Scalar> merged;
  for (auto& row : rows) {
    for (auto& [seg, v] : row) {
      if (!v.is_zero()) merged.emplace_hint(merged.end(), seg, std::move(v));
    }
  }
  return Series::from_map(a.poset(), a.field(), std::move(merged));
}

Series power(const Series& a, int k) {
  Series acc = Series::identity(a.poset(), a.field());
  for (int i = 0; i < k; ++i) acc = convolve(acc, a);
  return acc;
}

long long finitarity_count(const Series& a, int u, int v) {
  const Poset& p = *a.poset();
  if (!p.leq(u, v)) {
    throw NotComparable("elements '" + p.id_of(u) + "' and '" + p.id_of(v) +
                        "' are not comparable in that order");
  }
  long long count = 0;
  for (const auto& [seg, value] : a.entries()) {
    if (seg.lo != seg.hi && p.leq(u, seg.lo) && p.leq(seg.hi, v)) ++count;
  }
  return count;
}

long long finitarity_count(const Series& a, std::string_view u, std::string_view v) {
  return finitarity_count(a, a.poset()->index_of(u), a.poset()->index_of(v));
}

bool is_invertible(const Series& a) {
  for (int x = 0; x < a.poset()->size(); ++x) {
    if (a.at(x, x).is_zero()) return false;
  }
  return true;
}

Series invert(const Series& a) {
  const Poset& p = *a.poset();
  const Field f = a.field();
  for (int x = 0; x < p.size(); ++x) {
    if (a.at(x, x).is_zero()) {
      throw NotInvertible("series is not invertible: zero diagonal at '" + p.id_of(x) + "'",
                          p.id_of(x));
    }
  }

  // ascending interval cardinality guarantees (x,v) precedes (u,v) for u < x
  std::vector<Segment> order = p.segments();
  std::vector<int> card(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    card[i] = p.interval_size(order[i].lo, order[i].hi);
  }
  std::vector<std::size_t> idx(order.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t i, std::size_t j) { return card[i] < card[j]; });

  const auto& ae = a.entries();
  std::map<Segment, Scalar> out;
  for (std::size_t i : idx) {
    const Segment seg = order[i];
    if (seg.lo == seg.hi) {
      out.emplace(seg, a.at(seg.lo, seg.lo).inverse());
      continue;
    }
    Scalar sum = f.zero();
    auto row = ae.lower_bound({seg.lo, 0});
    auto row_end = ae.lower_bound({seg.lo + 1, 0});
    for (auto it = row; it != row_end; ++it) {
      const int x = it->first.hi;
      if (x == seg.lo || !p.leq(x, seg.hi)) continue;  // need u < x <= v
      auto jt = out.find({x, seg.hi});
      if (jt == out.end()) continue;
      sum += it->second * jt->second;
    }
    if (!sum.is_zero()) {
      out.emplace(seg, -(a.at(seg.lo, seg.lo).inverse() * sum));
    }
  }
  return Series::from_map(a.poset(), f, std::move(out));
}

bool is_radical(const Series& a) {
  for (const auto& [seg, value] : a.entries()) {
    if (seg.lo == seg.hi) return false;
  }
  return true;
}

namespace reference {

Series convolve(const Series& a, const Series& b) {
  require_compatible(a, b);
  const Poset& p = *a.poset();
  std::map<Segment, Scalar> out;
  for (Segment seg : p.segments()) {
    Scalar sum = a.field().zero();
    for (int z : p.interval(seg.lo, seg.hi)) {
      sum += a.at(seg.lo, z) * b.at(z, seg.hi);
    }
    if (!sum.is_zero()) out.emplace_hint(out.end(), seg, std::move(sum));
  }
  return Series::from_map(a.poset(), a.field(), std::move(out));
}

}  // namespace reference

}  // namespace fia
