#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "pertinax/galgebra.hpp"

namespace pertinax {

/// Row i holds the image of generator i: g(x_i) = sum_j m[i][j] x_j.
using Matrix = std::vector<std::vector<Scalar>>;

Matrix identity_matrix(std::size_t n);
Matrix mat_mul(const Matrix& a, const Matrix& b);
std::string render_matrix(const Matrix& m);

// A finite group of graded automorphisms given by matrices on the degree-one
// generators. Element 0 is the identity; the rest follow breadth-first from
// the generators. compose(a, b) is "apply b, then a".
class FiniteGroup {
public:
  static std::shared_ptr<const FiniteGroup> generate(const GradedAlgebra& R,
                                                     const std::vector<Matrix>& gens,
                                                     std::size_t max_order = 64);

  /// The same matrices acting on another algebra with the same generators,
  /// e.g. a G-stable quotient. Automorphism checks are repeated there.
  std::shared_ptr<const FiniteGroup> induced_on(const GradedAlgebra& S) const;

  const GradedAlgebra& algebra() const noexcept { return *R_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const Matrix& matrix(std::size_t g) const { return elements_.at(g); }
  const std::vector<Matrix>& generator_matrices() const noexcept { return gens_; }
  std::size_t compose(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t element_order(std::size_t a) const;
  /// Index of a matrix in the group, or order() if absent.
  std::size_t find(const Matrix& m) const;

  /// Images of the basis words of R_d under g, as coordinate vectors.
  const std::vector<SparseVec>& degree_action(std::size_t g, int d) const;
  SparseVec act(std::size_t g, int d, const SparseVec& v) const;
  AlgElement act(std::size_t g, const AlgElement& f) const;
  AlgElement reynolds(const AlgElement& f) const;
  /// Image of a generator, g(x_i), as an element of R_1.
  AlgElement letter_image(std::size_t g, std::size_t i) const;

private:
  FiniteGroup() = default;
  void check_automorphism(const Matrix& m) const;

  const GradedAlgebra* R_ = nullptr;
  std::vector<Matrix> gens_;
  std::vector<Matrix> elements_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::size_t max_order_ = 64;
  std::vector<std::vector<SparseVec>> letters_;  // [g][i] = g(x_i) in R_1
  mutable std::mutex mu_;
  mutable std::vector<std::vector<std::vector<SparseVec>>> cache_;  // [g][d]
  mutable std::vector<std::vector<char>> ready_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

}  // namespace pertinax
