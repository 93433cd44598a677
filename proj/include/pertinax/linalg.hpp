#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pertinax/scalar.hpp"

namespace pertinax {

using Index = std::uint32_t;

// Sparse vector: entries sorted by index, no stored zeros.
class SparseVec {
public:
  using Entry = std::pair<Index, Scalar>;

  SparseVec() = default;
  static SparseVec unit(Index i, Scalar value = Scalar(1));
  /// Builds from unsorted entries, summing duplicates.
  static SparseVec from_entries(std::vector<Entry> entries);

  bool is_zero() const noexcept { return e_.empty(); }
  std::size_t size() const noexcept { return e_.size(); }
  const std::vector<Entry>& entries() const noexcept { return e_; }
  auto begin() const noexcept { return e_.begin(); }
  auto end() const noexcept { return e_.end(); }

  Index lead() const { return e_.front().first; }
  const Scalar& lead_coeff() const { return e_.front().second; }
  Scalar get(Index i) const;

  SparseVec scaled(const Scalar& a) const;
  /// this + a * y
  SparseVec axpy(const Scalar& a, const SparseVec& y) const;
  SparseVec operator+(const SparseVec& y) const { return axpy(Scalar(1), y); }
  SparseVec operator-(const SparseVec& y) const { return axpy(Scalar(-1), y); }
  SparseVec operator-() const { return scaled(Scalar(-1)); }

  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.e_ == b.e_; }

private:
  std::vector<Entry> e_;
};

// Dense scratch buffer for summing many sparse vectors of a fixed dimension.
class Accumulator {
public:
  explicit Accumulator(std::size_t dim) : buf_(dim), used_(dim, false) {}

  void add(Index i, const Scalar& v);
  void add_mul(Index i, const Scalar& a, const Scalar& b);
  void add_scaled(const SparseVec& v, const Scalar& a);
  /// Returns the accumulated vector and resets the buffer.
  SparseVec take();

private:
  std::vector<Scalar> buf_;
  std::vector<bool> used_;
  std::vector<Index> touched_;
};

// Subspace of k^n held as its reduced row echelon basis. Pivots are the
// leftmost nonzero column of each row and are normalized to 1, so two
// subspaces are equal iff their row lists are equal.
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : n_(ambient) {}

  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, const std::vector<SparseVec>& vectors);

  std::size_t ambient() const noexcept { return n_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool is_zero() const noexcept { return rows_.empty(); }
  bool is_full() const noexcept { return rows_.size() == n_; }

  /// Residue of v modulo the subspace (zero iff v is contained).
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).is_zero(); }
  bool contains(const Subspace& other) const;
  /// Adds v; returns true if the rank grew.
  bool insert(const SparseVec& v);
  void insert_all(const Subspace& other);

  /// Basis rows ordered by pivot column.
  std::vector<SparseVec> basis() const;
  std::vector<Index> pivots() const;

  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

private:
  std::size_t n_ = 0;
  std::map<Index, SparseVec> rows_;  // pivot column -> row
};

// Incremental elimination on (key, payload) rows. Keys are reduced against
// earlier pivot keys, and payloads follow the same row operations. When a key
// reduces to zero, the accompanying payload is a combination whose key part
// vanished: for key = T(e_i), payload = e_i this enumerates ker T, and for
// payload = S(e_i) it enumerates S(ker T).
class Eliminator {
public:
  /// Returns the reduced payload if the key vanished, nullopt if it became a new pivot.
  std::optional<SparseVec> insert(SparseVec key, SparseVec payload);
  std::size_t rank() const noexcept { return pivots_.size(); }

private:
  std::map<Index, std::pair<SparseVec, SparseVec>> pivots_;
};

/// Kernel of the map whose columns (images of e_0..e_{n-1}) are given.
Subspace kernel_of_columns(std::size_t domain_dim, const std::vector<SparseVec>& columns);

}  // namespace pertinax
