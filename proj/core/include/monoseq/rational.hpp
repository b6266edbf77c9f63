#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace monoseq {

// Exact rational number backed by GMP. Every value is kept in canonical form
// (gcd(num, den) = 1, den > 0), so equality is structural.
class Rat {
 public:
  Rat() = default;
  Rat(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  explicit Rat(const mpz_class& integer) : value_(integer) {}
  explicit Rat(mpq_class value);

  // Accepts "p", "p/q" and "-p/q". Throws std::invalid_argument otherwise.
  static Rat parse(std::string_view text);

  [[nodiscard]] const mpq_class& get() const { return value_; }
  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }

  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

  // Canonical text: "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string str() const { return value_.get_str(); }
  [[nodiscard]] double to_double() const { return value_.get_d(); }

  [[nodiscard]] Rat abs() const;
  [[nodiscard]] Rat inverse() const;

  Rat& operator+=(const Rat& other);
  Rat& operator-=(const Rat& other);
  Rat& operator*=(const Rat& other);
  Rat& operator/=(const Rat& other);

  friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
  friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
  friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }
  friend Rat operator-(const Rat& x);

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

 private:
  mpq_class value_;
};

std::strong_ordering rat_cmp(const Rat& a, const Rat& b);

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat pow2(unsigned exponent);

}  // namespace monoseq

template <>
struct std::hash<monoseq::Rat> {
  std::size_t operator()(const monoseq::Rat& r) const noexcept;
};
