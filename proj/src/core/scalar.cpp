#include "pertinax/scalar.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "pertinax/error.hpp"

namespace pertinax {

namespace {

using IntPoly = std::vector<std::int64_t>;

void trim_int(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials; the divisor is monic.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  trim_int(num);
  const size_t dd = den.size() - 1;
  if (num.size() < den.size()) return {0};
  IntPoly q(num.size() - dd, 0);
  for (size_t i = num.size(); i-- > dd;) {
    std::int64_t c = num[i];
    q[i - dd] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return q;
}

IntPoly cyclotomic_polynomial(int m) {
  // Phi_m = (t^m - 1) / prod_{d | m, d < m} Phi_d
  IntPoly p(static_cast<size_t>(m) + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    p = divide_monic(p, cyclotomic_polynomial(d));
    trim_int(p);
  }
  return p;
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

CyclotomicField::CyclotomicField(int m) : m_(m), phi_(cyclotomic_polynomial(m)) {
  const int deg = degree();
  powers_.resize(static_cast<size_t>(m));
  IntPoly cur(static_cast<size_t>(deg), 0);
  cur[0] = 1;
  if (deg == 0) cur = {};
  for (int k = 0; k < m; ++k) {
    powers_[k] = cur;
    // multiply by t and fold t^deg = -sum phi_i t^i
    IntPoly next(static_cast<size_t>(deg) + 1, 0);
    for (int i = 0; i < deg; ++i) next[i + 1] = cur[i];
    std::int64_t lead = next[deg];
    for (int i = 0; i < deg; ++i) next[i] -= lead * phi_[i];
    next.resize(static_cast<size_t>(deg));
    cur = next;
  }
  for (auto& p : powers_) trim_int(p);
}

const CyclotomicField& CyclotomicField::get(int conductor) {
  if (conductor < 1) raise(ErrorCode::BadInput, "conductor must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicField>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[conductor];
  if (!slot) slot.reset(new CyclotomicField(conductor));
  return *slot;
}

Scalar CyclotomicField::zeta_power(long long k) const {
  long long r = k % m_;
  if (r < 0) r += m_;
  const IntPoly& p = powers_[static_cast<size_t>(r)];
  std::vector<Rational> coeffs(p.begin(), p.end());
  if (m_ <= 2) {
    // t is rational (+-1); value is p[0] when p is not empty
    return Scalar(p.empty() ? Rational(0) : Rational(static_cast<long long>(p[0])));
  }
  return Scalar::from_coeffs(*this, coeffs);
}

Scalar CyclotomicField::primitive_root(int n) const {
  if (n < 1 || m_ % n != 0)
    raise(ErrorCode::ConductorTooSmall, "primitive " + std::to_string(n) +
                                            "-th root of unity needs a conductor divisible by " +
                                            std::to_string(n) + ", session conductor is " +
                                            std::to_string(m_));
  return zeta_power(m_ / n);
}

Scalar::Scalar(const Rational& r) {
  if (!r.is_zero()) c_.push_back(r);
}

Scalar Scalar::from_coeffs(const CyclotomicField& field, const std::vector<Rational>& coeffs) {
  Scalar s;
  s.f_ = &field;
  const int deg = field.degree();
  s.c_.assign(static_cast<size_t>(std::max(deg, 1)), Rational());
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    if (static_cast<int>(k) < deg) {
      s.c_[k] += coeffs[k];
      continue;
    }
    const auto& red = field.reduced_power(static_cast<int>(k % static_cast<size_t>(field.conductor())));
    for (size_t i = 0; i < red.size(); ++i)
      if (red[i] != 0) s.c_[i] += coeffs[k] * Rational(static_cast<long long>(red[i]));
  }
  s.trim();
  return s;
}

void Scalar::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const CyclotomicField* Scalar::join(const Scalar& a, const Scalar& b) {
  if (!a.f_) return b.f_;
  if (!b.f_ || a.f_ == b.f_) return a.f_;
  if (a.is_rational()) return b.f_;
  if (b.is_rational()) return a.f_;
  raise(ErrorCode::FieldMismatch, "scalars from Q(zeta_" + std::to_string(a.f_->conductor()) +
                                      ") and Q(zeta_" + std::to_string(b.f_->conductor()) + ")");
}

Rational Scalar::rational() const {
  if (!is_rational()) raise(ErrorCode::BadInput, "scalar " + str() + " is not rational");
  return c_.empty() ? Rational() : c_[0];
}

Scalar Scalar::operator-() const {
  Scalar s;
  s.f_ = f_;
  s.c_.reserve(c_.size());
  for (const auto& r : c_) s.c_.push_back(-r);
  return s;
}

Scalar& Scalar::operator+=(const Scalar& b) {
  if (b.c_.empty()) return *this;
  f_ = join(*this, b);
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size());
  for (size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
  trim();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) {
  if (b.c_.empty()) return *this;
  f_ = join(*this, b);
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size());
  for (size_t i = 0; i < b.c_.size(); ++i) c_[i] -= b.c_[i];
  trim();
  return *this;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar s(a);
  s += b;
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar s(a);
  s -= b;
  return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.c_.empty() || b.c_.empty()) return Scalar();
  Scalar s;
  s.f_ = Scalar::join(a, b);
  if (a.c_.size() == 1) {
    s.c_.reserve(b.c_.size());
    for (const auto& r : b.c_) s.c_.push_back(a.c_[0] * r);
    s.trim();
    return s;
  }
  if (b.c_.size() == 1) {
    s.c_.reserve(a.c_.size());
    for (const auto& r : a.c_) s.c_.push_back(r * b.c_[0]);
    s.trim();
    return s;
  }
  std::vector<Rational> conv(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) conv[i + j] += a.c_[i] * b.c_[j];
  }
  return Scalar::from_coeffs(*s.f_, conv);
}

void Scalar::add_mul(const Scalar& a, const Scalar& b) {
  if (a.c_.empty() || b.c_.empty()) return;
  if (a.c_.size() == 1 && b.c_.size() == 1) {
    if (c_.empty()) {
      c_.push_back(a.c_[0] * b.c_[0]);
      f_ = join(a, b);
      return;
    }
    c_[0] += a.c_[0] * b.c_[0];
    if (c_.size() == 1) trim();
    return;
  }
  *this += a * b;
}

Scalar Scalar::inv() const {
  if (c_.empty()) raise(ErrorCode::DivisionByZero, "inverse of zero scalar");
  if (c_.size() == 1) {
    Scalar s(c_[0].inv());
    s.f_ = f_;
    return s;
  }
  // Solve (this * y) = 1 over the power basis.
  const CyclotomicField& F = *f_;
  const int n = F.degree();
  std::vector<std::vector<Rational>> M(static_cast<size_t>(n),
                                       std::vector<Rational>(static_cast<size_t>(n) + 1));
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> shifted(static_cast<size_t>(j) + c_.size());
    for (size_t i = 0; i < c_.size(); ++i) shifted[static_cast<size_t>(j) + i] = c_[i];
    Scalar col = Scalar::from_coeffs(F, shifted);
    for (size_t i = 0; i < col.c_.size(); ++i) M[i][static_cast<size_t>(j)] = col.c_[i];
  }
  M[0][static_cast<size_t>(n)] = Rational(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!M[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) raise(ErrorCode::DivisionByZero, "singular multiplication map");
    std::swap(M[piv], M[col]);
    Rational pinv = M[col][col].inv();
    for (int k = col; k <= n; ++k) M[col][k] *= pinv;
    for (int r = 0; r < n; ++r) {
      if (r == col || M[r][col].is_zero()) continue;
      Rational f = M[r][col];
      for (int k = col; k <= n; ++k) M[r][k] -= f * M[col][k];
    }
  }
  std::vector<Rational> y(static_cast<size_t>(n));
  for (int r = 0; r < n; ++r) y[r] = M[r][n];
  return Scalar::from_coeffs(F, y);
}

Scalar Scalar::pow(long long e) const {
  if (e < 0) return inv().pow(-e);
  Scalar result(1);
  Scalar base(*this);
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::string Scalar::str() const {
  if (c_.empty()) return "0";
  if (c_.size() == 1) return c_[0].str();
  const std::string z = "z" + std::to_string(f_->conductor());
  std::string out = "(";
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    const Rational& r = c_[k];
    if (r.is_zero()) continue;
    Rational mag = r.abs();
    if (first) {
      if (r.sign() < 0) out += "-";
    } else {
      out += r.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += mag.str();
      continue;
    }
    if (!mag.is_one()) out += mag.str() + "*";
    out += z;
    if (k > 1) out += "^" + std::to_string(k);
  }
  out += ")";
  return out;
}

}  // namespace pertinax
