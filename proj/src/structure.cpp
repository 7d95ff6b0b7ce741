#include "fia/structure.hpp"

#include <algorithm>

#include "fia/errors.hpp"

namespace fia {

bool is_idempotent(const Series& a) { return convolve(a, a) == a; }

Series diagonal_part(const Series& a) {
  std::map<Segment, Scalar> out;
  for (const auto& [seg, v] : a.entries()) {
    if (seg.lo == seg.hi) out.emplace_hint(out.end(), seg, v);
  }
  return Series::from_map(a.poset(), a.field(), std::move(out));
}

namespace {

void require_idempotent(const Series& a) {
  if (!is_idempotent(a)) throw NotIdempotent("series is not idempotent");
}

}  // namespace

DiagonalizedIdempotent diagonalize_idempotent(const Series& a, bool check_identities) {
  require_idempotent(a);
  const Field f = a.field();
  Series epsilon = diagonal_part(a);
  Series rho = sub(a, epsilon);
  Series delta = Series::identity(a.poset(), f);

  if (check_identities) {
    Series lhs5 = add(convolve(epsilon, rho), convolve(rho, epsilon));
    Series rhs5 = sub(rho, convolve(rho, rho));
    if (!(lhs5 == rhs5)) throw Error("idempotent diagonalization: identity (eps,rho) failed");
    Series lhs6 = add(convolve(convolve(epsilon, rho), epsilon),
                      convolve(epsilon, convolve(rho, rho)));
    if (!lhs6.is_zero()) throw Error("idempotent diagonalization: absorbed identity failed");
  }

  Series mirror = sub(scale(f.from_integer(2), epsilon), delta);
  Series conjugator = add(delta, convolve(mirror, rho));

  if (check_identities) {
    Series reconstructed = convolve(invert(conjugator), convolve(epsilon, conjugator));
    if (!(reconstructed == a)) throw Error("idempotent diagonalization: conjugation failed");
  }
  return {std::move(epsilon), std::move(conjugator)};
}

bool is_primitive_idempotent(const Series& a) {
  require_idempotent(a);
  int ones = 0;
  for (const auto& [seg, v] : a.entries()) {
    if (seg.lo == seg.hi) ++ones;
  }
  return ones == 1;
}

std::optional<Series> inner_inverse(const Series& a) {
  const Poset& p = *a.poset();
  const Field f = a.field();
  const auto& segs = p.segments();
  const std::size_t dim = segs.size();

  std::map<Segment, std::size_t> seg_index;
  for (std::size_t i = 0; i < dim; ++i) seg_index.emplace(segs[i], i);

  // equations indexed by segments (x,y):
  //   sum over x <= u <= v <= y of a(x,u) chi(u,v) a(v,y)  =  a(x,y)
  std::vector<std::vector<Scalar>> m;
  m.reserve(dim);
  std::vector<Scalar> rhs;
  rhs.reserve(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const auto [x, y] = segs[r];
    std::vector<Scalar> row(dim, f.zero());
    for (std::size_t c = 0; c < dim; ++c) {
      const auto [u, v] = segs[c];
      if (p.leq(x, u) && p.leq(v, y)) row[c] = a.at(x, u) * a.at(v, y);
    }
    m.push_back(std::move(row));
    rhs.push_back(a.at(x, y));
  }

  // reduced row echelon with deterministic pivoting; free unknowns stay 0
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < dim && rank < dim; ++col) {
    std::size_t r = rank;
    while (r < dim && m[r][col].is_zero()) ++r;
    if (r == dim) continue;
    std::swap(m[r], m[rank]);
    std::swap(rhs[r], rhs[rank]);
    Scalar inv = m[rank][col].inverse();
    for (std::size_t j = col; j < dim; ++j) m[rank][j] = inv * m[rank][j];
    rhs[rank] = inv * rhs[rank];
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == rank || m[i][col].is_zero()) continue;
      Scalar factor = m[i][col];
      for (std::size_t j = col; j < dim; ++j) m[i][j] -= factor * m[rank][j];
      rhs[i] -= factor * rhs[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < dim; ++r) {
    if (!rhs[r].is_zero()) return std::nullopt;  // inconsistent: not regular
  }

  std::map<Segment, Scalar> chi;
  for (std::size_t r = 0; r < rank; ++r) {
    if (!rhs[r].is_zero()) chi.emplace(segs[pivot_col[r]], rhs[r]);
  }
  return Series::from_map(a.poset(), f, std::move(chi));
}

namespace {

void require_witness(const Series& a, const Series& chi) {
  require_compatible(a, chi);
  if (!(convolve(convolve(a, chi), a) == a)) {
    throw NotAWitness("chi does not satisfy a * chi * a = a");
  }
}

}  // namespace

Series reflexive_inverse(const Series& a, const Series& chi) {
  require_witness(a, chi);
  Series g = convolve(convolve(chi, a), chi);
  if (!(convolve(convolve(a, g), a) == a) || !(convolve(convolve(g, a), g) == g)) {
    throw Error("reflexive inverse construction violated its defining identities");
  }
  return g;
}

RegularFactorization regular_factorization(const Series& a, const Series& chi,
                                           bool check_identities) {
  require_witness(a, chi);
  const Field f = a.field();
  const Poset& p = *a.poset();

  auto [epsilon, eta] = diagonalize_idempotent(convolve(a, chi), check_identities);
  auto [epsilon1, gamma] = diagonalize_idempotent(convolve(chi, a), check_identities);
  if (!(epsilon == epsilon1)) {
    throw Error("regular factorization: the two diagonal idempotents disagree");
  }

  // m = eta * a * gamma^-1 has nonzero diagonal exactly on the support of
  // epsilon; complete it to an invertible diagonal eta1
  Series middle = convolve(convolve(eta, a), invert(gamma));
  std::map<Segment, Scalar> eta1_entries;
  for (int x = 0; x < p.size(); ++x) {
    Scalar d = epsilon.at(x, x).is_one() ? middle.at(x, x) : f.one();
    eta1_entries.emplace(Segment{x, x}, std::move(d));
  }
  Series eta1 = Series::from_map(a.poset(), f, std::move(eta1_entries));
  Series rho = sub(middle, convolve(eta1, epsilon));

  Series beta = convolve(invert(eta), add(eta1, convolve(epsilon, rho)));

  RegularFactorization fact{std::move(beta), std::move(epsilon), gamma};
  Series reconstructed = convolve(convolve(fact.beta, fact.epsilon), fact.gamma);
  if (!(reconstructed == a)) {
    throw Error("regular factorization failed to reconstruct its input");
  }
  for (int x = 0; x < p.size(); ++x) {
    if (fact.epsilon.at(x, x).is_zero() != a.at(x, x).is_zero()) {
      throw Error("regular factorization: diagonal support mismatch at '" + p.id_of(x) + "'");
    }
  }
  return fact;
}

bool is_superregular(const Series& a) {
  const Poset& p = *a.poset();
  for (const auto& component : p.connected_components()) {
    bool any_entry = false;
    for (const auto& [seg, v] : a.entries()) {
      // lo and hi are comparable, hence in the same component
      if (std::binary_search(component.begin(), component.end(), seg.lo)) {
        any_entry = true;
        break;
      }
    }
    if (!any_entry) continue;  // zero on this component
    for (int x : component) {
      if (a.at(x, x).is_zero()) return false;  // neither zero nor invertible
    }
  }
  return true;
}

Series restrict_to_component(const Series& a, const std::vector<std::string>& component_ids) {
  const Poset& p = *a.poset();
  std::vector<int> indices;
  indices.reserve(component_ids.size());
  for (const auto& id : component_ids) indices.push_back(p.index_of(id));
  std::sort(indices.begin(), indices.end());

  const auto& components = p.connected_components();
  if (std::find(components.begin(), components.end(), indices) == components.end()) {
    throw NotAComponent("the given element set is not a connected component");
  }

  PosetPtr sub = p.induced(indices);
  std::map<int, int> reindex;
  for (std::size_t i = 0; i < indices.size(); ++i) reindex.emplace(indices[std::size_t(i)], int(i));

  std::map<Segment, Scalar> out;
  for (const auto& [seg, v] : a.entries()) {
    auto lo = reindex.find(seg.lo);
    if (lo == reindex.end()) continue;
    out.emplace(Segment{lo->second, reindex.at(seg.hi)}, v);
  }
  return Series::from_map(std::move(sub), a.field(), std::move(out));
}

}  // namespace fia
