#pragma once

#include <map>
#include <string>
#include <vector>

#include "pertinax/action.hpp"

namespace pertinax {

// sum_g r_g (x) g in the skew group algebra R*G.
class SkewElement {
public:
  SkewElement() = default;
  SkewElement(const FiniteGroup* G) : G_(G) {}

  static SkewElement pure(const FiniteGroup& G, const AlgElement& r, std::size_t g);
  /// e = (1/|G|) sum_g 1 (x) g
  static SkewElement integral(const FiniteGroup& G);

  const std::map<std::size_t, AlgElement>& components() const noexcept { return c_; }
  AlgElement component(std::size_t g) const;
  bool is_zero() const noexcept { return c_.empty(); }

  SkewElement& operator+=(const SkewElement& b);
  friend SkewElement operator+(SkewElement a, const SkewElement& b) { return a += b; }
  friend bool operator==(const SkewElement& a, const SkewElement& b) { return a.c_ == b.c_; }

private:
  friend SkewElement skew_mul(const SkewElement& u, const SkewElement& v);
  void add(std::size_t g, const AlgElement& r);

  const FiniteGroup* G_ = nullptr;
  std::map<std::size_t, AlgElement> c_;
};

/// (r (x) g)(s (x) h) = r g(s) (x) gh
SkewElement skew_mul(const SkewElement& u, const SkewElement& v);

enum class Provenance { Oracle, Constructive, User, Derived };
const char* provenance_name(Provenance p);

// Degree-wise subspaces I_d of R_d for d = 0..D, each in reduced echelon form.
class IdealTable {
public:
  IdealTable() = default;
  IdealTable(const GradedAlgebra& R, int D, Provenance tag = Provenance::Derived);

  const GradedAlgebra& algebra() const { return *R_; }
  int truncation() const noexcept { return static_cast<int>(comps_.size()) - 1; }
  Provenance provenance() const noexcept { return tag_; }
  void set_provenance(Provenance p) { tag_ = p; }

  const Subspace& operator[](int d) const { return comps_.at(d); }
  Subspace& operator[](int d) { return comps_.at(d); }

  std::vector<long> dims() const;
  bool is_zero() const;
  /// Every homogeneous component of f within the truncation lies in the table.
  bool contains(const AlgElement& f) const;
  bool contains(const IdealTable& other) const;
  IdealTable intersect(const IdealTable& other) const;
  IdealTable sum(const IdealTable& other) const;

  /// Per degree, the basis rows rendered as polynomials.
  std::vector<std::vector<std::string>> dump() const;

  friend bool operator==(const IdealTable& a, const IdealTable& b) { return a.comps_ == b.comps_; }

private:
  const GradedAlgebra* R_ = nullptr;
  std::vector<Subspace> comps_;
  Provenance tag_ = Provenance::Derived;
};

/// Smallest two-sided ideal containing the given subspaces, degree by degree.
IdealTable two_sided_closure(const IdealTable& seeds);
IdealTable right_closure(const IdealTable& seeds);
IdealTable left_closure(const IdealTable& seeds);
IdealTable ideal_generated_by(const GradedAlgebra& R, const std::vector<AlgElement>& gens, int D);

/// Homogeneous generators of a two-sided ideal table, minimal through its
/// truncation degree: each one is independent of R_+ I + I R_+ and earlier picks.
std::vector<AlgElement> minimal_generators(const IdealTable& ideal);

/// Span of all products a*b with a in I, b in J.
IdealTable span_product(const IdealTable& I, const IdealTable& J);

/// The G-radical through degree D as R cap ReR: for each degree, the kernel of
/// sum c_(a,b) a (x) b -> (sum c a g(b))_{g != 1}, pushed through multiplication.
IdealTable oracle_radical(const FiniteGroup& G, int D, int threads = 1);

/// Degree-wise intersection with the fixed spaces A_d.
IdealTable intersect_with_invariants(const IdealTable& table, const std::vector<Subspace>& invariants);

}  // namespace pertinax
