#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace axial {

// Error categories map onto the CLI exit-code contract:
// Parse -> 2, Math -> 1, Internal -> 3, Precondition -> 4.
struct Error : std::runtime_error {
  enum class Cat { Parse, Math, Internal, Precondition };
  Cat cat;
  Error(Cat c, const std::string& msg) : std::runtime_error(msg), cat(c) {}
};

struct MalformedScalar : Error {
  explicit MalformedScalar(const std::string& msg) : Error(Cat::Parse, msg) {}
};
struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& msg = "division by zero")
      : Error(Cat::Math, msg) {}
};
struct NonInvertibleDenominator : Error {
  explicit NonInvertibleDenominator(const std::string& msg)
      : Error(Cat::Precondition, msg) {}
};
struct BadField : Error {
  explicit BadField(const std::string& msg) : Error(Cat::Precondition, msg) {}
};

enum class FieldKind { Rationals, PrimeField };

struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t p = 0;  // set iff kind == PrimeField

  // Rejects characteristic 2 and composite p.
  static FieldSpec rationals();
  static FieldSpec prime_field(std::uint64_t p);

  bool operator==(const FieldSpec&) const = default;
};

std::uint64_t characteristic(const FieldSpec& field);

// A field element in canonical form: reduced fraction with positive
// denominator over Q, residue in [0, p) over GF(p).  Scalars carry no field
// reference; all arithmetic goes through Field so cross-field mixing is a
// contract violation caught at the Algebra boundary.
class Scalar {
 public:
  Scalar() : v_(std::uint64_t{0}) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}
  explicit Scalar(std::uint64_t r) : v_(r) {}

  bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(v_); }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

 private:
  std::variant<mpq_class, std::uint64_t> v_;
};

// All arithmetic for one FieldSpec.  Immutable; freely shareable.
class Field {
 public:
  explicit Field(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  std::uint64_t characteristic() const { return axial::characteristic(spec_); }

  Scalar zero() const;
  Scalar one() const;
  Scalar half() const { return inv(from_long(2)); }
  Scalar from_long(long n) const;
  // Maps n/d into the field; NonInvertibleDenominator if char divides d.
  Scalar from_fraction(long n, long d) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;  // DivisionByZero on 0
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  bool is_zero(const Scalar& a) const;
  bool eq(const Scalar& a, const Scalar& b) const { return a == b; }

  std::string to_string(const Scalar& a) const;

 private:
  FieldSpec spec_;
};

// Text syntax: "a" or "a/b", a an optionally signed decimal integer, b an
// unsigned decimal integer.
Scalar scalar_parse(const std::string& text, const FieldSpec& field);

}  // namespace axial
