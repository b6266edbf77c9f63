#include "monoseq/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace monoseq {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat::Rat(long num, long den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rat::Rat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  const auto den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num_text) || !is_integer_literal(den_text) || den_text[0] == '-' || den_text[0] == '+') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  const auto strip_plus = [](std::string_view s) { return std::string(s[0] == '+' ? s.substr(1) : s); };
  mpz_class num(strip_plus(num_text), 10);
  mpz_class den(strip_plus(den_text), 10);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rat(mpq_class(num, den));
}

Rat Rat::abs() const { return Rat(mpq_class(::abs(value_))); }

Rat Rat::inverse() const {
  if (is_zero()) throw std::domain_error("Rat: inverse of zero");
  return Rat(mpq_class(1 / value_));
}

Rat& Rat::operator+=(const Rat& other) {
  value_ += other.value_;
  return *this;
}

Rat& Rat::operator-=(const Rat& other) {
  value_ -= other.value_;
  return *this;
}

Rat& Rat::operator*=(const Rat& other) {
  value_ *= other.value_;
  return *this;
}

Rat& Rat::operator/=(const Rat& other) {
  if (other.is_zero()) throw std::domain_error("Rat: division by zero");
  value_ /= other.value_;
  return *this;
}

Rat operator-(const Rat& x) { return Rat(mpq_class(-x.value_)); }

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering rat_cmp(const Rat& a, const Rat& b) { return a <=> b; }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat pow2(unsigned exponent) {
  mpz_class p = 1;
  p <<= exponent;
  return Rat(p);
}

}  // namespace monoseq

std::size_t std::hash<monoseq::Rat>::operator()(const monoseq::Rat& r) const noexcept {
  return std::hash<std::string>{}(r.str());
}
