#include "quiverhh/path_vector.hpp"

namespace quiverhh {

void PathVector::add_term(const Path& p, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar PathVector::coefficient(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

PathVector PathVector::operator+(const PathVector& o) const {
  PathVector r = *this;
  r += o;
  return r;
}

PathVector PathVector::operator-(const PathVector& o) const {
  PathVector r = *this;
  r -= o;
  return r;
}

PathVector PathVector::operator-() const {
  PathVector r(field_);
  for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
  return r;
}

PathVector PathVector::operator*(const Scalar& c) const {
  PathVector r(field_);
  if (c.is_zero()) return r;
  for (const auto& [p, v] : terms_) r.terms_.emplace(p, v * c);
  return r;
}

PathVector& PathVector::operator+=(const PathVector& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

PathVector& PathVector::operator-=(const PathVector& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

PathVector PathVector::left_mul(const Path& p) const {
  PathVector r(field_);
  for (const auto& [t, c] : terms_)
    if (auto pt = compose(p, t)) r.add_term(*pt, c);
  return r;
}

PathVector PathVector::right_mul(const Path& p) const {
  PathVector r(field_);
  for (const auto& [t, c] : terms_)
    if (auto tp = compose(t, p)) r.add_term(*tp, c);
  return r;
}

std::optional<std::pair<Path, Scalar>> PathVector::leading_term() const {
  if (terms_.empty()) return std::nullopt;
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (term_greater(it->first, best->first)) best = it;
  return std::make_pair(best->first, best->second);
}

std::size_t PathVector::degree() const {
  std::size_t d = 0;
  for (const auto& [p, c] : terms_) d = std::max(d, p.length());
  return d;
}

bool PathVector::endpoint_homogeneous() const {
  if (terms_.empty()) return true;
  VertexId s = terms_.begin()->first.source();
  VertexId t = terms_.begin()->first.target();
  for (const auto& [p, c] : terms_)
    if (p.source() != s || p.target() != t) return false;
  return true;
}

std::string PathVector::str(const Quiver& q) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    Scalar a = c;
    if (first) {
      if (a.is_negative()) {
        out += "-";
        a = a.abs();
      }
    } else {
      if (a.is_negative()) {
        out += " - ";
        a = a.abs();
      } else {
        out += " + ";
      }
    }
    if (!a.is_one()) {
      out += a.str();
      out += "*";
    }
    out += p.str(q);
    first = false;
  }
  return out;
}

std::vector<Path> PathVector::support() const {
  std::vector<Path> s;
  s.reserve(terms_.size());
  for (const auto& [p, c] : terms_) s.push_back(p);
  return s;
}

}  // namespace quiverhh
