#include "pertinax/rational.hpp"

#include <limits>
#include <numeric>

#include "pertinax/error.hpp"

namespace pertinax {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr std::int64_t kSmallMax = std::numeric_limits<std::int64_t>::max();

u128 gcd_u128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0)
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs_u128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

mpz_class mpz_from_i128(i128 v) {
  const bool neg = v < 0;
  u128 mag = abs_u128(v);
  mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64));
  mpz_class lo = static_cast<unsigned long>(static_cast<std::uint64_t>(mag));
  mpz_class out = (hi << 64) + lo;
  return neg ? mpz_class(-out) : out;
}

bool fits_small(const mpz_class& z) {
  return mpz_sizeinbase(z.get_mpz_t(), 2) <= 63;
}

std::int64_t mpz_to_i64(const mpz_class& z) {
  // |z| < 2^63 is guaranteed by the caller.
  mpz_class mag = abs(z);
  std::uint64_t lo = 0;
  size_t count = 0;
  mpz_export(&lo, &count, -1, sizeof(lo), 0, 0, mag.get_mpz_t());
  auto v = static_cast<std::int64_t>(lo);
  return sgn(z) < 0 ? -v : v;
}

mpz_class mpz_from_i64(std::int64_t v) {
  mpz_class out;
  std::uint64_t mag = v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(mag), 0, 0, &mag);
  if (v < 0) out = -out;
  return out;
}

}  // namespace

Rational::Rational(long value) noexcept : Rational(static_cast<long long>(value)) {}

Rational::Rational(long long value) noexcept : num_(value), den_(1) {
  if (value == std::numeric_limits<long long>::min()) {
    big_ = std::make_unique<mpq_class>(mpz_from_i64(value));
    num_ = 0;
  }
}

Rational::Rational(long long num, long long den) : num_(0), den_(1) {
  if (den == 0) raise(ErrorCode::DivisionByZero, "rational with zero denominator");
  *this = from_i128(num, den);
}

Rational::Rational(const mpq_class& q) : num_(0), den_(1) {
  mpq_class copy(q);
  copy.canonicalize();
  *this = from_mpq(std::move(copy));
}

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

Rational Rational::from_i128(i128 num, i128 den) {
  if (den == 0) raise(ErrorCode::DivisionByZero, "division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational();
  u128 g = gcd_u128(abs_u128(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  Rational r;
  if (abs_u128(num) <= static_cast<u128>(kSmallMax) && den <= kSmallMax) {
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
  r.big_ = std::make_unique<mpq_class>(std::move(q));
  return r;
}

Rational Rational::from_mpq(mpq_class&& q) {
  Rational r;
  if (fits_small(q.get_num()) && fits_small(q.get_den())) {
    r.num_ = mpz_to_i64(q.get_num());
    r.den_ = mpz_to_i64(q.get_den());
    return r;
  }
  r.big_ = std::make_unique<mpq_class>(std::move(q));
  return r;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_from_i64(num_), mpz_from_i64(den_));
}

bool Rational::is_integer() const {
  if (big_) return big_->get_den() == 1;
  return den_ == 1;
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

Rational Rational::inv() const {
  if (is_zero()) raise(ErrorCode::DivisionByZero, "inverse of zero");
  if (big_) {
    mpq_class q = 1 / *big_;
    return from_mpq(std::move(q));
  }
  Rational r;
  if (num_ < 0) {
    r.num_ = -den_;
    r.den_ = -num_;
  } else {
    r.num_ = den_;
    r.den_ = num_;
  }
  return r;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::operator-() const {
  if (big_) {
    mpq_class q = -*big_;
    return from_mpq(std::move(q));
  }
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      i128 s = static_cast<i128>(a.num_) + b.num_;
      if (s <= kSmallMax && s >= -kSmallMax) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(s);
        return r;
      }
      return Rational::from_i128(s, 1);
    }
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
    i128 d = static_cast<i128>(a.den_) * b.den_;
    return Rational::from_i128(n, d);
  }
  mpq_class q = a.to_mpq() + b.to_mpq();
  return Rational::from_mpq(std::move(q));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    if (a.den_ == 1 && b.den_ == 1) {
      i128 p = static_cast<i128>(a.num_) * b.num_;
      if (p <= kSmallMax && p >= -kSmallMax) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(p);
        return r;
      }
      return Rational::from_i128(p, 1);
    }
    std::uint64_t g1 = std::gcd(static_cast<std::uint64_t>(a.num_ < 0 ? -a.num_ : a.num_),
                                static_cast<std::uint64_t>(b.den_));
    std::uint64_t g2 = std::gcd(static_cast<std::uint64_t>(b.num_ < 0 ? -b.num_ : b.num_),
                                static_cast<std::uint64_t>(a.den_));
    i128 n = static_cast<i128>(a.num_ / static_cast<std::int64_t>(g1)) *
             (b.num_ / static_cast<std::int64_t>(g2));
    i128 d = static_cast<i128>(a.den_ / static_cast<std::int64_t>(g2)) *
             (b.den_ / static_cast<std::int64_t>(g1));
    return Rational::from_i128(n, d);
  }
  mpq_class q = a.to_mpq() * b.to_mpq();
  return Rational::from_mpq(std::move(q));
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inv(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical: a spilled value never fits inline
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_)
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  return a.to_mpq() < b.to_mpq();
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::from_decimal(std::string_view digits) {
  if (digits.empty()) raise(ErrorCode::BadInput, "empty integer literal");
  if (digits.size() <= 18) {
    std::int64_t v = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') raise(ErrorCode::BadInput, "bad integer literal");
      v = v * 10 + (c - '0');
    }
    return Rational(static_cast<long long>(v));
  }
  mpz_class z(std::string(digits), 10);
  return Rational(mpq_class(z));
}

}  // namespace pertinax
