#ifndef QUIVERHH_FIELD_HPP_
#define QUIVERHH_FIELD_HPP_

#include <gmpxx.h>

#include <string>

#include "quiverhh/errors.hpp"

namespace quiverhh {

// Ground field of a session: the rationals or a prime field F_p.
// The field is fixed per session; scalars from different fields never mix.
class Field {
 public:
  Field() : p_(0) {}  // rationals

  static Field rationals() { return Field(); }
  static Field prime(unsigned long p);

  // Accepts "Q", "Fp" and "F p" spellings (e.g. "F5").
  static Field parse(const std::string& text);

  bool is_rational() const { return p_ == 0; }
  unsigned long characteristic() const { return p_; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(unsigned long p) : p_(p) {}
  unsigned long p_;  // 0 means the rationals
};

// Exact element of the session field.  All arithmetic is exact; there is no
// floating point anywhere in the engine.
class Scalar {
 public:
  Scalar() : field_(Field::rationals()), v_(0) {}
  explicit Scalar(const Field& f, long n = 0) : field_(f), v_(n) { reduce(); }
  Scalar(const Field& f, long num, long den);

  // Parses "3", "-7", "3/2".  Over F_p a fraction means num * den^{-1}.
  static Scalar parse(const Field& f, const std::string& text);

  static Scalar zero(const Field& f) { return Scalar(f, 0); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }

  const Field& field() const { return field_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on division by zero
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const;

  bool operator==(const Scalar& o) const {
    check_same_field(o);
    return v_ == o.v_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Canonical text form: "3", "-1", "3/2"; over F_p always in [0, p).
  std::string str() const;

  // True when the canonical form carries a leading minus sign (Q only).
  bool is_negative() const { return v_ < 0; }
  Scalar abs() const;

 private:
  void check_same_field(const Scalar& o) const {
    if (!(field_ == o.field_))
      throw FieldMismatch("cannot mix scalars from " + field_.name() +
                          " and " + o.field_.name());
  }
  void reduce();  // over F_p clamps the value into [0, p)

  Field field_;
  mpq_class v_;
};

}  // namespace quiverhh

#endif  // QUIVERHH_FIELD_HPP_
