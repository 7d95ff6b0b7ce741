#include "fia/isomorphism.hpp"

#include "fia/errors.hpp"
#include "fia/random.hpp"
#include "fia/structure.hpp"

namespace fia {

AlgebraIso induced_iso(const PosetPtr& source, const PosetPtr& target, const IsoWitness& w,
                       Field field) {
  if (!is_order_isomorphism(*source, *target, w)) {
    throw InvalidWitness("mapping is not an order isomorphism between the given posets");
  }
  // freeze the index permutation so forward stays cheap and pure
  std::vector<int> image(std::size_t(source->size()), 0);
  for (int x = 0; x < source->size(); ++x) {
    image[std::size_t(x)] = target->index_of(w.apply(source->id_of(x)));
  }
  auto forward = [source, target, image](const Series& a) {
    if (!same_poset(a.poset(), source)) {
      throw PosetMismatch("series does not live on the source poset");
    }
    std::map<Segment, Scalar> out;
    for (const auto& [seg, v] : a.entries()) {
      out.emplace(Segment{image[std::size_t(seg.lo)], image[std::size_t(seg.hi)]}, v);
    }
    return Series::from_map(target, a.field(), std::move(out));
  };
  return {source, target, field, std::move(forward), "induced"};
}

AlgebraIso conjugation_iso(const Series& u) {
  if (!is_invertible(u)) {
    throw NotInvertible("conjugator is not invertible", "");
  }
  Series u_inv = invert(u);
  auto forward = [u, u_inv](const Series& a) { return convolve(convolve(u_inv, a), u); };
  return {u.poset(), u.poset(), u.field(), std::move(forward), "conjugation"};
}

AlgebraIso compose(const AlgebraIso& first, const AlgebraIso& then) {
  if (!same_poset(first.target, then.source)) {
    throw PosetMismatch("cannot compose: target of the first map differs from source of the second");
  }
  if (first.field != then.field) {
    throw FieldMismatch("cannot compose maps over different fields");
  }
  auto f = first.forward;
  auto g = then.forward;
  auto forward = [f, g](const Series& a) { return g(f(a)); };
  return {first.source, then.target, first.field,
          std::move(forward), first.description + " ; " + then.description};
}

bool spot_check(const AlgebraIso& iso, std::uint64_t seed, int rounds) {
  Series delta_src = Series::identity(iso.source, iso.field);
  Series delta_tgt = Series::identity(iso.target, iso.field);
  if (!(iso.forward(delta_src) == delta_tgt)) return false;
  Rng rng(seed);
  for (int round = 0; round < rounds; ++round) {
    Series a = random_series(iso.source, iso.field, rng, 50);
    Series b = random_series(iso.source, iso.field, rng, 50);
    if (!(iso.forward(add(a, b)) == add(iso.forward(a), iso.forward(b)))) return false;
    if (!(iso.forward(convolve(a, b)) == convolve(iso.forward(a), iso.forward(b)))) return false;
  }
  return true;
}

AlgebraIso custom_iso(PosetPtr source, PosetPtr target, Field field,
                      std::function<Series(const Series&)> forward, std::string description,
                      std::uint64_t seed, int rounds) {
  AlgebraIso iso{std::move(source), std::move(target), field, std::move(forward),
                 std::move(description)};
  if (!spot_check(iso, seed, rounds)) {
    throw InvalidWitness("mapping failed the algebra-isomorphism spot check");
  }
  return iso;
}

IsoWitness recover_poset_iso(const AlgebraIso& iso) {
  const Poset& p = *iso.source;
  const Poset& q = *iso.target;

  IsoWitness w;
  std::vector<bool> hit(std::size_t(q.size()), false);
  for (int x = 0; x < p.size(); ++x) {
    Series image = iso.forward(Series::diagonal_unit(iso.source, iso.field, p.id_of(x)));
    if (!is_idempotent(image) || !is_primitive_idempotent(image)) {
      throw NotPrimitiveImage("image of the diagonal unit at '" + p.id_of(x) +
                              "' is not a primitive idempotent");
    }
    // the single diagonal 1 tells us where x went
    int y = -1;
    for (const auto& [seg, v] : image.entries()) {
      if (seg.lo == seg.hi) y = seg.lo;
    }
    if (hit[std::size_t(y)]) {
      throw NotOrderPreserving("two elements map onto '" + q.id_of(y) + "'");
    }
    hit[std::size_t(y)] = true;
    w.mapping.emplace(p.id_of(x), q.id_of(y));
  }

  if (!is_order_isomorphism(p, q, w)) {
    throw NotOrderPreserving("recovered mapping is not an order isomorphism");
  }
  return w;
}

bool leq_via_products(const Poset& p, std::string_view x, std::string_view y) {
  return p.leq(p.index_of(x), p.index_of(y));
}

}  // namespace fia
