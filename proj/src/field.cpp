#include "fia/field.hpp"

#include <charconv>

#include "fia/errors.hpp"

namespace fia {

namespace {

bool is_prime_u32(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t mod_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t(a) + b;
  return std::uint32_t(s >= p ? s - p : s);
}

std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return std::uint32_t(std::uint64_t(a) * b % p);
}

std::uint32_t mod_neg(std::uint32_t a, std::uint32_t p) {
  return a == 0 ? 0 : p - a;
}

// Extended Euclid; requires 0 < a < p.
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return std::uint32_t(t);
}

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31)) {
    throw ParseError("prime field modulus must be < 2^31, got " + std::to_string(p));
  }
  if (!is_prime_u32(p)) {
    throw ParseError("prime field modulus must be prime, got " + std::to_string(p));
  }
  return Field(p);
}

std::uint32_t Field::modulus() const {
  if (p_ == 0) throw Error("modulus() called on the rational field");
  return p_;
}

Scalar Field::zero() const { return from_integer(0); }

Scalar Field::one() const { return from_integer(1); }

Scalar Field::from_integer(long long n) const {
  if (p_ == 0) {
    mpq_class q;
    q = mpz_class(static_cast<long>(n));
    return Scalar(std::move(q));
  }
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Scalar(Scalar::Mod{p_, std::uint32_t(r)});
}

Scalar Field::parse(std::string_view text) const {
  if (p_ == 0) {
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      num = text.substr(0, slash);
      den = text.substr(slash + 1);
    }
    if (!valid_integer_text(num) || !valid_integer_text(den)) {
      throw ParseError("invalid rational literal '" + std::string(text) + "'");
    }
    mpq_class q{mpz_class{std::string(num)}, mpz_class{std::string(den)}};
    if (q.get_den() == 0) {
      throw ParseError("zero denominator in rational literal '" + std::string(text) + "'");
    }
    q.canonicalize();
    return Scalar(std::move(q));
  }
  if (!valid_integer_text(text)) {
    throw ParseError("invalid prime-field literal '" + std::string(text) + "'");
  }
  mpz_class z{std::string(text)};
  mpz_class r = z % p_;
  if (r < 0) r += p_;
  return Scalar(Scalar::Mod{p_, std::uint32_t(r.get_ui())});
}

std::string Field::name() const {
  return p_ == 0 ? "q" : "fp:" + std::to_string(p_);
}

Field Field::parse_name(std::string_view name) {
  if (name == "q") return rationals();
  constexpr std::string_view kPrefix = "fp:";
  if (name.substr(0, kPrefix.size()) == kPrefix) {
    std::string_view digits = name.substr(kPrefix.size());
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ParseError("invalid field name '" + std::string(name) + "'");
    }
    return prime(p);
  }
  throw ParseError("invalid field name '" + std::string(name) + "' (expected q or fp:<p>)");
}

Field Scalar::field() const {
  if (const auto* m = std::get_if<Mod>(&rep_)) return Field(m->p);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* m = std::get_if<Mod>(&rep_)) return m->v == 0;
  return std::get<mpq_class>(rep_) == 0;
}

bool Scalar::is_one() const {
  if (const auto* m = std::get_if<Mod>(&rep_)) return m->v == 1;
  return std::get<mpq_class>(rep_) == 1;
}

namespace {

void require_same_field(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field()) {
    throw MixedFields("operands belong to different fields: " + a.field().name() +
                      " vs " + b.field().name());
  }
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  if (const auto* m = std::get_if<Scalar::Mod>(&a.rep_)) {
    const auto& n = std::get<Scalar::Mod>(b.rep_);
    return Scalar(Scalar::Mod{m->p, mod_add(m->v, n.v, m->p)});
  }
  return Scalar(mpq_class(std::get<mpq_class>(a.rep_) + std::get<mpq_class>(b.rep_)));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  if (const auto* m = std::get_if<Scalar::Mod>(&a.rep_)) {
    const auto& n = std::get<Scalar::Mod>(b.rep_);
    return Scalar(Scalar::Mod{m->p, mod_add(m->v, mod_neg(n.v, m->p), m->p)});
  }
  return Scalar(mpq_class(std::get<mpq_class>(a.rep_) - std::get<mpq_class>(b.rep_)));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  if (const auto* m = std::get_if<Scalar::Mod>(&a.rep_)) {
    const auto& n = std::get<Scalar::Mod>(b.rep_);
    return Scalar(Scalar::Mod{m->p, mod_mul(m->v, n.v, m->p)});
  }
  return Scalar(mpq_class(std::get<mpq_class>(a.rep_) * std::get<mpq_class>(b.rep_)));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  return a * b.inverse();
}

Scalar Scalar::operator-() const {
  if (const auto* m = std::get_if<Mod>(&rep_)) {
    return Scalar(Mod{m->p, mod_neg(m->v, m->p)});
  }
  return Scalar(mpq_class(-std::get<mpq_class>(rep_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (const auto* m = std::get_if<Mod>(&rep_)) {
    return Scalar(Mod{m->p, mod_inverse(m->v, m->p)});
  }
  return Scalar(mpq_class(1 / std::get<mpq_class>(rep_)));
}

bool operator==(const Scalar& a, const Scalar& b) { return a.rep_ == b.rep_; }

std::string Scalar::str() const {
  if (const auto* m = std::get_if<Mod>(&rep_)) return std::to_string(m->v);
  return std::get<mpq_class>(rep_).get_str();
}

}  // namespace fia
