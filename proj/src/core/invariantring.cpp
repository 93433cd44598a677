#include "pertinax/invariantring.hpp"

#include "pertinax/error.hpp"

namespace pertinax {

std::vector<long> InvariantRing::dims() const {
  std::vector<long> out;
  for (const auto& s : components) out.push_back(static_cast<long>(s.rank()));
  return out;
}

InvariantRing invariants_basis(const FiniteGroup& G, int D) {
  const GradedAlgebra& R = G.algebra();
  std::vector<std::size_t> gens;
  for (const Matrix& m : G.generator_matrices()) {
    const std::size_t g = G.find(m);
    if (g != 0) gens.push_back(g);
  }
  InvariantRing A;
  A.truncation = D;
  for (int d = 0; d <= D; ++d) {
    const std::size_t n = R.dim(d);
    std::vector<SparseVec> columns;
    for (std::size_t p = 0; p < n; ++p) {
      std::vector<SparseVec::Entry> stacked;
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const SparseVec moved = G.degree_action(gens[k], d)[p] - SparseVec::unit(static_cast<Index>(p));
        for (const auto& [i, c] : moved) stacked.emplace_back(static_cast<Index>(k * n) + i, c);
      }
      columns.push_back(SparseVec::from_entries(std::move(stacked)));
    }
    A.components.push_back(kernel_of_columns(n, columns));
  }
  for (int d = 1; d <= D; ++d) {
    Subspace decomposable(R.dim(d));
    for (const auto& gamma : A.generators) {
      const int e = gamma.degree();
      if (e >= d) continue;
      for (const auto& row : A.components[d - e].basis())
        decomposable.insert(R.multiply(e, gamma.component(e), d - e, row));
    }
    for (const auto& row : A.components[d].basis())
      if (decomposable.insert(row)) A.generators.push_back(AlgElement::homogeneous(R, d, row));
  }
  return A;
}

Scalar molien_dimension(const FiniteGroup& G, int d) {
  Scalar total;
  for (std::size_t g = 0; g < G.order(); ++g) {
    const auto& images = G.degree_action(g, d);
    for (std::size_t p = 0; p < images.size(); ++p) total += images[p].get(static_cast<Index>(p));
  }
  return total / Scalar(static_cast<long long>(G.order()));
}

std::vector<IdealTable> radical_powers(const IdealTable& radical, int n_max) {
  const GradedAlgebra& R = radical.algebra();
  const int D = radical.truncation();
  const auto gens = minimal_generators(radical);
  std::vector<IdealTable> out{radical};
  for (int n = 2; n <= n_max; ++n) {
    const IdealTable& prev = out.back();
    IdealTable seeds(R, D);
    for (int i = 0; i <= D; ++i)
      for (const auto& row : prev[i].basis())
        for (const auto& gamma : gens) {
          const int e = gamma.degree();
          if (i + e <= D) seeds[i + e].insert(R.multiply(i, row, e, gamma.component(e)));
        }
    out.push_back(right_closure(seeds));
  }
  return out;
}

CofinalityCertificate cofinality_check(const IdealTable& radical, const InvariantRing& A, int s_max, int n_cap) {
  const IdealTable a = intersect_with_invariants(radical, A.components);
  CofinalityCertificate cert{right_closure(a) == left_closure(a), {}};
  if (radical.is_zero()) {
    for (int s = 1; s <= s_max; ++s) cert.table.push_back({s, 1, "trivial"});
    return cert;
  }
  const auto powers = radical_powers(radical, n_cap);
  IdealTable as = a;
  for (int s = 1; s <= s_max; ++s) {
    if (s > 1) as = span_product(as, a);
    const IdealTable asR = right_closure(as);
    CofinalityEntry entry{s, std::nullopt, "not_found"};
    for (int n = 1; n <= n_cap; ++n) {
      const IdealTable& rn = powers[n - 1];
      if (rn.is_zero()) {
        entry.status = "inconclusive";
        break;
      }
      if (asR.contains(rn)) {
        entry.n = n;
        entry.status = "found";
        break;
      }
    }
    cert.table.push_back(entry);
  }
  return cert;
}

std::vector<AlgElement> ideal_generators_in(const IdealTable& a, const InvariantRing& A) {
  const GradedAlgebra& R = a.algebra();
  const int D = std::min(a.truncation(), A.truncation);
  std::vector<AlgElement> out;
  for (int d = 1; d <= D; ++d) {
    if (a[d].is_zero()) continue;
    Subspace decomposable(R.dim(d));
    for (int i = 1; i < d; ++i)
      for (const auto& u : A.components[i].basis())
        for (const auto& v : a[d - i].basis()) {
          decomposable.insert(R.multiply(i, u, d - i, v));
          decomposable.insert(R.multiply(d - i, v, i, u));
        }
    for (const auto& row : a[d].basis())
      if (decomposable.insert(row)) out.push_back(AlgElement::homogeneous(R, d, row));
  }
  return out;
}

namespace {

bool same_products(const GradedAlgebra& R, int e, const SparseVec& a, int d, const std::vector<SparseVec>& basis) {
  Subspace left(R.dim(e + d)), right(R.dim(e + d));
  for (const auto& b : basis) {
    left.insert(R.multiply(e, a, d, b));
    right.insert(R.multiply(d, b, e, a));
  }
  return left == right;
}

}  // namespace

NormalityVerdict normality_check(const AlgElement& a, const InvariantRing* A, int D) {
  const GradedAlgebra* R = a.algebra();
  if (!R || a.is_zero()) return {true, A ? std::optional<bool>(true) : std::nullopt};
  if (!a.is_homogeneous()) raise(ErrorCode::BadInput, "normality needs a homogeneous element");
  const int e = a.degree();
  const int top = std::min(D, R->truncation()) - e;
  NormalityVerdict out{true, std::nullopt};
  for (int d = 0; d <= top && out.in_R; ++d) {
    std::vector<SparseVec> basis;
    for (std::size_t p = 0; p < R->dim(d); ++p) basis.push_back(SparseVec::unit(static_cast<Index>(p)));
    out.in_R = same_products(*R, e, a.component(e), d, basis);
  }
  if (A && e <= A->truncation && A->components[e].contains(a.component(e))) {
    bool normal = true;
    for (int d = 0; d <= std::min(top, A->truncation) && normal; ++d)
      normal = same_products(*R, e, a.component(e), d, A->components[d].basis());
    out.in_A = normal;
  }
  return out;
}

}  // namespace pertinax
