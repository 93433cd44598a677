#include "pertinax/linalg.hpp"

#include <algorithm>

#include "pertinax/error.hpp"

namespace pertinax {

SparseVec SparseVec::unit(Index i, Scalar value) {
  SparseVec v;
  if (!value.is_zero()) v.e_.emplace_back(i, std::move(value));
  return v;
}

SparseVec SparseVec::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  SparseVec v;
  for (auto& [i, s] : entries) {
    if (!v.e_.empty() && v.e_.back().first == i) {
      v.e_.back().second += s;
      if (v.e_.back().second.is_zero()) v.e_.pop_back();
    } else if (!s.is_zero()) {
      v.e_.emplace_back(i, std::move(s));
    }
  }
  return v;
}

Scalar SparseVec::get(Index i) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), i,
                             [](const Entry& e, Index k) { return e.first < k; });
  if (it != e_.end() && it->first == i) return it->second;
  return Scalar();
}

SparseVec SparseVec::scaled(const Scalar& a) const {
  SparseVec out;
  if (a.is_zero()) return out;
  out.e_.reserve(e_.size());
  for (const auto& [i, s] : e_) out.e_.emplace_back(i, s * a);
  return out;
}

SparseVec SparseVec::axpy(const Scalar& a, const SparseVec& y) const {
  if (a.is_zero() || y.e_.empty()) return *this;
  SparseVec out;
  out.e_.reserve(e_.size() + y.e_.size());
  auto it = e_.begin();
  auto jt = y.e_.begin();
  while (it != e_.end() || jt != y.e_.end()) {
    if (jt == y.e_.end() || (it != e_.end() && it->first < jt->first)) {
      out.e_.push_back(*it++);
    } else if (it == e_.end() || jt->first < it->first) {
      out.e_.emplace_back(jt->first, a * jt->second);
      ++jt;
    } else {
      Scalar s = it->second;
      s.add_mul(a, jt->second);
      if (!s.is_zero()) out.e_.emplace_back(it->first, std::move(s));
      ++it;
      ++jt;
    }
  }
  return out;
}

void Accumulator::add(Index i, const Scalar& v) {
  if (v.is_zero()) return;
  if (!used_[i]) {
    used_[i] = true;
    touched_.push_back(i);
  }
  buf_[i] += v;
}

void Accumulator::add_mul(Index i, const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (!used_[i]) {
    used_[i] = true;
    touched_.push_back(i);
  }
  buf_[i].add_mul(a, b);
}

void Accumulator::add_scaled(const SparseVec& v, const Scalar& a) {
  for (const auto& [i, s] : v) add_mul(i, s, a);
}

SparseVec Accumulator::take() {
  std::sort(touched_.begin(), touched_.end());
  std::vector<SparseVec::Entry> out;
  out.reserve(touched_.size());
  for (Index i : touched_) {
    if (!buf_[i].is_zero()) out.emplace_back(i, std::move(buf_[i]));
    buf_[i] = Scalar();
    used_[i] = false;
  }
  touched_.clear();
  return SparseVec::from_entries(std::move(out));
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  for (Index i = 0; i < ambient; ++i) s.rows_.emplace(i, SparseVec::unit(i));
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<SparseVec>& vectors) {
  Subspace s(ambient);
  for (const auto& v : vectors) {
    if (s.is_full()) break;
    s.insert(v);
  }
  return s;
}

SparseVec Subspace::reduce(const SparseVec& v) const {
  SparseVec r = v;
  if (rows_.empty()) return r;
  for (const auto& [c, coeff] : v) {
    auto it = rows_.find(c);
    if (it == rows_.end()) continue;
    r = r.axpy(-coeff, it->second);
  }
  return r;
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& [p, row] : other.rows_)
    if (!contains(row)) return false;
  return true;
}

bool Subspace::insert(const SparseVec& v) {
  if (v.is_zero() || is_full()) return false;
  SparseVec r = reduce(v);
  if (r.is_zero()) return false;
  r = r.scaled(r.lead_coeff().inv());
  const Index p = r.lead();
  for (auto& [c, row] : rows_) {
    Scalar coeff = row.get(p);
    if (!coeff.is_zero()) row = row.axpy(-coeff, r);
  }
  rows_.emplace(p, std::move(r));
  return true;
}

void Subspace::insert_all(const Subspace& other) {
  for (const auto& [p, row] : other.rows_) {
    if (is_full()) return;
    insert(row);
  }
}

std::vector<SparseVec> Subspace::basis() const {
  std::vector<SparseVec> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(row);
  return out;
}

std::vector<Index> Subspace::pivots() const {
  std::vector<Index> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(p);
  return out;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (n_ != other.n_) raise(ErrorCode::BadInput, "intersecting subspaces of different ambient spaces");
  Subspace out(n_);
  if (is_zero() || other.is_zero()) return out;
  if (is_full()) return other;
  if (other.is_full()) return *this;
  Eliminator elim;
  for (const auto& [p, row] : rows_) elim.insert(row, row);
  for (const auto& [p, row] : other.rows_) {
    if (auto payload = elim.insert(row, SparseVec())) out.insert(*payload);
  }
  return out;
}

std::optional<SparseVec> Eliminator::insert(SparseVec key, SparseVec payload) {
  while (!key.is_zero()) {
    auto it = pivots_.find(key.lead());
    if (it == pivots_.end()) {
      Scalar inv = key.lead_coeff().inv();
      const Index p = key.lead();
      pivots_.emplace(p, std::make_pair(key.scaled(inv), payload.scaled(inv)));
      return std::nullopt;
    }
    Scalar coeff = -key.lead_coeff();
    key = key.axpy(coeff, it->second.first);
    payload = payload.axpy(coeff, it->second.second);
  }
  return payload;
}

Subspace kernel_of_columns(std::size_t domain_dim, const std::vector<SparseVec>& columns) {
  Subspace ker(domain_dim);
  Eliminator elim;
  for (Index i = 0; i < columns.size(); ++i) {
    if (auto payload = elim.insert(columns[i], SparseVec::unit(i))) ker.insert(*payload);
  }
  return ker;
}

}  // namespace pertinax
