#include "axial/field.hpp"

#include <cctype>

namespace axial {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Extended Euclid; a must be nonzero mod p.
std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

FieldSpec FieldSpec::rationals() { return FieldSpec{FieldKind::Rationals, 0}; }

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (p == 2) throw BadField("characteristic 2 is not supported");
  if (!is_prime_u64(p)) throw BadField("GF(p) requires p prime, got " + std::to_string(p));
  return FieldSpec{FieldKind::PrimeField, p};
}

std::uint64_t characteristic(const FieldSpec& field) {
  return field.kind == FieldKind::Rationals ? 0 : field.p;
}

bool Scalar::operator==(const Scalar& o) const {
  if (v_.index() != o.v_.index()) return false;
  if (is_rational()) return cmp(rational(), o.rational()) == 0;
  return residue() == o.residue();
}

Field::Field(FieldSpec spec) : spec_(spec) {
  if (spec_.kind == FieldKind::PrimeField) {
    // Re-validate so raw aggregate FieldSpec values cannot smuggle in a bad p.
    spec_ = FieldSpec::prime_field(spec_.p);
  }
}

Scalar Field::zero() const {
  if (spec_.kind == FieldKind::Rationals) return Scalar(mpq_class(0));
  return Scalar(std::uint64_t{0});
}

Scalar Field::one() const { return from_long(1); }

Scalar Field::from_long(long n) const {
  if (spec_.kind == FieldKind::Rationals) return Scalar(mpq_class(n));
  std::int64_t m = n % static_cast<std::int64_t>(spec_.p);
  if (m < 0) m += static_cast<std::int64_t>(spec_.p);
  return Scalar(static_cast<std::uint64_t>(m));
}

Scalar Field::from_fraction(long n, long d) const {
  if (d == 0) throw DivisionByZero();
  if (spec_.kind == FieldKind::Rationals) {
    mpq_class q(n, d);
    q.canonicalize();
    return Scalar(q);
  }
  Scalar den = from_long(d);
  if (is_zero(den))
    throw NonInvertibleDenominator("denominator " + std::to_string(d) +
                                   " vanishes in GF(" + std::to_string(spec_.p) + ")");
  return mul(from_long(n), inv(den));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (spec_.kind == FieldKind::Rationals)
    return Scalar(mpq_class(a.rational() + b.rational()));
  std::uint64_t s = a.residue() + b.residue();
  if (s >= spec_.p) s -= spec_.p;
  return Scalar(s);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (spec_.kind == FieldKind::Rationals)
    return Scalar(mpq_class(a.rational() * b.rational()));
  return Scalar(mulmod(a.residue(), b.residue(), spec_.p));
}

Scalar Field::neg(const Scalar& a) const {
  if (spec_.kind == FieldKind::Rationals) return Scalar(mpq_class(-a.rational()));
  return Scalar(a.residue() == 0 ? 0 : spec_.p - a.residue());
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw DivisionByZero("inverse of zero");
  if (spec_.kind == FieldKind::Rationals)
    return Scalar(mpq_class(1 / a.rational()));
  return Scalar(invmod(a.residue(), spec_.p));
}

bool Field::is_zero(const Scalar& a) const {
  if (spec_.kind == FieldKind::Rationals) return sgn(a.rational()) == 0;
  return a.residue() == 0;
}

std::string Field::to_string(const Scalar& a) const {
  if (spec_.kind == FieldKind::Rationals) return a.rational().get_str();
  return std::to_string(a.residue());
}

Scalar scalar_parse(const std::string& text, const FieldSpec& field) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) throw MalformedScalar("bad scalar '" + text + "'");
  std::string num = text.substr(num_begin, i - num_begin);
  std::string den;
  if (i < text.size()) {
    if (text[i] != '/') throw MalformedScalar("bad scalar '" + text + "'");
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size())
      throw MalformedScalar("bad scalar '" + text + "'");
    den = text.substr(den_begin);
  }

  if (field.kind == FieldKind::Rationals) {
    mpq_class q;
    mpz_class n(num), d(den.empty() ? "1" : den);
    if (sgn(d) == 0) throw DivisionByZero("zero denominator in '" + text + "'");
    q = mpq_class(n) / mpq_class(d);
    q.canonicalize();
    if (negative) q = -q;
    return Scalar(q);
  }

  Field f(field);
  auto digits_mod = [&](const std::string& s) {
    std::uint64_t r = 0;
    for (char c : s) r = (mulmod(r, 10, field.p) + static_cast<std::uint64_t>(c - '0')) % field.p;
    return Scalar(r);
  };
  Scalar n = digits_mod(num);
  if (negative) n = f.neg(n);
  if (den.empty()) return n;
  bool den_all_zero = den.find_first_not_of('0') == std::string::npos;
  if (den_all_zero) throw DivisionByZero("zero denominator in '" + text + "'");
  Scalar d = digits_mod(den);
  if (f.is_zero(d))
    throw NonInvertibleDenominator("denominator of '" + text + "' vanishes in GF(" +
                                   std::to_string(field.p) + ")");
  return f.div(n, d);
}

}  // namespace axial
