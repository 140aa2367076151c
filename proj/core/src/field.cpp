#include "quiverhh/field.hpp"

#include <cctype>

namespace quiverhh {

namespace {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(unsigned long p) {
  if (!is_prime(p))
    throw SemanticError("field characteristic " + std::to_string(p) +
                        " is not prime");
  return Field(p);
}

Field Field::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "Q" || s == "q") return rationals();
  if (!s.empty() && (s[0] == 'F' || s[0] == 'f')) {
    std::string digits = s.substr(1);
    if (!digits.empty() &&
        digits.find_first_not_of("0123456789") == std::string::npos)
      return prime(std::stoul(digits));
  }
  throw SemanticError("unknown field '" + text + "' (expected Q or F<p>)");
}

std::string Field::name() const {
  return is_rational() ? "Q" : "F" + std::to_string(p_);
}

Scalar::Scalar(const Field& f, long num, long den) : field_(f), v_(num, den) {
  if (den == 0) throw SemanticError("zero denominator");
  v_.canonicalize();
  reduce();
}

void Scalar::reduce() {
  if (field_.is_rational()) return;
  const unsigned long p = field_.characteristic();
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class den = v_.get_den();
  mpz_class num = v_.get_num();
  if (den != 1) {
    // num / den -> num * den^{-1} mod p
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
      throw SemanticError("denominator not invertible mod " +
                          std::to_string(p));
    num *= dinv;
  }
  mpz_class r = num % pz;
  if (r < 0) r += pz;
  v_ = mpq_class(r);
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  try {
    mpq_class q(text);
    q.canonicalize();
    Scalar s(f, 0);
    s.v_ = q;
    s.reduce();
    return s;
  } catch (const std::invalid_argument&) {
    throw SemanticError("bad scalar literal '" + text + "'");
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.v_ = -r.v_;
  r.reduce();
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar r = *this;
  r.v_ += o.v_;
  r.reduce();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  Scalar r = *this;
  r.v_ -= o.v_;
  r.reduce();
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar r = *this;
  r.v_ *= o.v_;
  r.reduce();
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(o);
  if (o.is_zero()) throw SemanticError("division by zero");
  return *this * o.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw SemanticError("zero has no inverse");
  Scalar r = *this;
  if (field_.is_rational()) {
    r.v_ = 1 / v_;
    return r;
  }
  mpz_class pz(field_.characteristic());
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), pz.get_mpz_t());
  r.v_ = mpq_class(inv);
  r.reduce();
  return r;
}

std::string Scalar::str() const { return v_.get_str(); }

Scalar Scalar::abs() const {
  Scalar r = *this;
  r.v_ = ::abs(r.v_);
  return r;
}

}  // namespace quiverhh
