#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pertinax {

// Exact rational number. Values whose numerator and denominator fit in
// 63 bits are kept inline; anything larger spills to a GMP rational.
// Always stored in lowest terms with a positive denominator.
class Rational {
public:
  Rational() noexcept : num_(0), den_(1) {}
  Rational(int value) noexcept : num_(value), den_(1) {}
  Rational(long value) noexcept;
  Rational(long long value) noexcept;
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& other);
  Rational(Rational&& other) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&& other) noexcept = default;
  ~Rational() = default;

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  Rational inv() const;
  Rational abs() const;

  mpq_class to_mpq() const;
  std::string str() const;

  // Parses an unsigned decimal integer literal of any length.
  static Rational from_decimal(std::string_view digits);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b);

private:
  static Rational from_i128(__int128 num, __int128 den);
  static Rational from_mpq(mpq_class&& q);

  std::int64_t num_;
  std::int64_t den_;
  std::unique_ptr<mpq_class> big_;  // authoritative when set
};

}  // namespace pertinax
