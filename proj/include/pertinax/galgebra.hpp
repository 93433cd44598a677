#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pertinax/gbasis.hpp"
#include "pertinax/linalg.hpp"

namespace pertinax {

class AlgElement;

// A connected graded algebra k<x_1..x_g>/I with I homogeneous, known through
// degree D. Component R_d has the normal words of degree d as basis, indexed
// in ascending deglex order.
class GradedAlgebra {
public:
  GradedAlgebra(Alphabet alphabet, std::vector<FreePoly> relations, int D,
                std::optional<int> known_gkdim, std::string kind, bool allow_linear = false);
  GradedAlgebra(const GradedAlgebra&) = delete;
  GradedAlgebra& operator=(const GradedAlgebra&) = delete;

  const Alphabet& alphabet() const noexcept { return gb_.alphabet(); }
  const std::vector<FreePoly>& presentation() const noexcept { return relations_; }
  const TruncatedGB& gb() const noexcept { return gb_; }
  int truncation() const noexcept { return D_; }
  std::optional<int> known_gkdim() const noexcept { return known_gkdim_; }
  const std::string& kind() const noexcept { return kind_; }

  std::size_t dim(int d) const { return gb_.normal_words(d).size(); }
  const std::vector<Word>& basis(int d) const { return gb_.normal_words(d); }
  std::optional<Index> index_of(const Word& w) const;
  std::vector<long> hilbert() const;

  /// Coordinates of a normal-form polynomial that is homogeneous of degree d.
  SparseVec coords(int d, const FreePoly& normal) const;
  FreePoly poly(int d, const SparseVec& v) const;
  std::string render(int d, const SparseVec& v) const { return poly(d, v).render(alphabet()); }

  /// Products of basis words: entry p * dim(j) + q is basis(i)[p] * basis(j)[q] in R_{i+j}.
  const std::vector<SparseVec>& product_block(int i, int j) const;
  SparseVec multiply(int i, const SparseVec& a, int j, const SparseVec& b) const;

private:
  std::vector<FreePoly> relations_;
  TruncatedGB gb_;
  int D_;
  std::optional<int> known_gkdim_;
  std::string kind_;
  std::vector<std::unordered_map<std::string, Index>> index_;
  mutable std::mutex block_mu_;
  mutable std::map<std::pair<int, int>, std::vector<SparseVec>> blocks_;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

// Element of a GradedAlgebra stored as one coordinate vector per degree.
class AlgElement {
public:
  AlgElement() = default;
  explicit AlgElement(const GradedAlgebra* R) : R_(R) {}

  static AlgElement from_poly(const GradedAlgebra& R, const FreePoly& f);
  static AlgElement homogeneous(const GradedAlgebra& R, int d, SparseVec v);
  static AlgElement constant(const GradedAlgebra& R, const Scalar& c);
  static AlgElement generator(const GradedAlgebra& R, std::size_t i);

  const GradedAlgebra* algebra() const noexcept { return R_; }
  bool is_zero() const noexcept { return comps_.empty(); }
  bool is_homogeneous() const;
  /// Highest degree with a nonzero component; -1 for zero.
  int degree() const noexcept { return static_cast<int>(comps_.size()) - 1; }
  int min_degree() const;
  const SparseVec& component(int d) const;
  AlgElement homogeneous_part(int d) const;

  FreePoly to_poly() const;
  std::string render() const;

  AlgElement scaled(const Scalar& c) const;
  AlgElement operator-() const { return scaled(Scalar(-1)); }
  AlgElement& operator+=(const AlgElement& b);
  AlgElement& operator-=(const AlgElement& b);
  friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
  friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
  friend AlgElement operator*(const AlgElement& a, const AlgElement& b);
  AlgElement pow(int e) const;

  friend bool operator==(const AlgElement& a, const AlgElement& b) { return a.comps_ == b.comps_; }

private:
  void set_component(int d, SparseVec v);
  void trim();
  static const GradedAlgebra* join(const AlgElement& a, const AlgElement& b);

  const GradedAlgebra* R_ = nullptr;
  std::vector<SparseVec> comps_;
};

AlgebraPtr make_commutative(int n, int D);
/// q[i][j] for i < j gives x_j x_i = q_ij x_i x_j.
AlgebraPtr make_quantum_affine(const std::vector<std::vector<Scalar>>& q, int D);
AlgebraPtr make_downup(const Scalar& alpha, const Scalar& beta, int D);
AlgebraPtr make_presentation(const Alphabet& alphabet, const std::vector<FreePoly>& relations, int D);
AlgebraPtr quotient_by_ideal(const GradedAlgebra& R, const std::vector<AlgElement>& gens, int D);

}  // namespace pertinax
