#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "pertinax/rational.hpp"

namespace pertinax {

class Scalar;

// The cyclotomic field Q(zeta_m) for a fixed conductor m, realized as
// Q[t] / Phi_m(t). Instances are interned per conductor and never destroyed,
// so scalars can refer to them by plain pointer.
class CyclotomicField {
public:
  static const CyclotomicField& get(int conductor);

  int conductor() const noexcept { return m_; }
  int degree() const noexcept { return static_cast<int>(phi_.size()) - 1; }

  /// Phi_m, monic, lowest coefficient first.
  const std::vector<std::int64_t>& minimal_polynomial() const noexcept { return phi_; }

  /// zeta_m^(m/n): a primitive n-th root of unity. Requires n | m.
  Scalar primitive_root(int n) const;
  Scalar zeta_power(long long k) const;

  /// Reduces t^k modulo Phi_m; 0 <= k < m.
  const std::vector<std::int64_t>& reduced_power(int k) const { return powers_[k]; }

private:
  explicit CyclotomicField(int m);

  int m_;
  std::vector<std::int64_t> phi_;
  std::vector<std::vector<std::int64_t>> powers_;
};

/// Euler's totient.
int euler_phi(int n);

// Element of Q(zeta_m) in canonical form: coefficients of 1, t, ..., t^(phi-1)
// with trailing zeros trimmed. Zero is the empty vector and a rational value
// has at most one coefficient, so rationals mix freely with any field.
class Scalar {
public:
  using Coeffs = boost::container::small_vector<Rational, 2>;

  Scalar() = default;
  Scalar(int v) : Scalar(Rational(v)) {}
  Scalar(long long v) : Scalar(Rational(v)) {}
  Scalar(const Rational& r);

  static Scalar from_coeffs(const CyclotomicField& field, const std::vector<Rational>& coeffs);

  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }
  bool is_rational() const noexcept { return c_.size() <= 1; }
  Rational rational() const;
  const CyclotomicField* field() const noexcept { return f_; }
  const Coeffs& coeffs() const noexcept { return c_; }

  Scalar inv() const;
  Scalar pow(long long e) const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }
  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  /// this += a * b, the inner loop of every elimination.
  void add_mul(const Scalar& a, const Scalar& b);

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.c_ == b.c_; }

  /// Rational values print plainly; others as "(c0 + c1*zm + ...)" in powers of zeta_m.
  std::string str() const;

private:
  friend class CyclotomicField;
  void trim();
  static const CyclotomicField* join(const Scalar& a, const Scalar& b);

  Coeffs c_;
  const CyclotomicField* f_ = nullptr;
};

}  // namespace pertinax
