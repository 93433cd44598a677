#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pertinax/skewgroup.hpp"

namespace pertinax {

// Two equal-length sequences with sum_i a_i g(b_i) = 0 for every g != 1.
struct PertinentPair {
  std::vector<AlgElement> left;
  std::vector<AlgElement> right;
  bool verified = false;
  std::string origin;

  std::size_t size() const noexcept { return left.size(); }
  /// sum_i a_i b_i
  AlgElement value() const;
};

struct PairViolation {
  std::size_t element;  // group index of the first failing g
  AlgElement residue;   // sum_i a_i g(b_i)
};

/// Returns the first violation, or nullopt when the pair is pertinent.
std::optional<PairViolation> find_violation(const FiniteGroup& G, const std::vector<AlgElement>& left,
                                            const std::vector<AlgElement>& right);
/// Throws NotPertinent (naming g and the residue) when the check fails.
PertinentPair verify_pertinent(const FiniteGroup& G, std::vector<AlgElement> left,
                               std::vector<AlgElement> right, std::string origin = "user");

PertinentPair pair_concat(const PertinentPair& p, const PertinentPair& q);
/// (h a_1, ..., h a_n) ~ (h b_1, ..., h b_n)
PertinentPair pair_translate(const FiniteGroup& G, std::size_t h, const PertinentPair& p);
/// (a a_1, ..., a a_n) ~ (b_1 b, ..., b_n b)
PertinentPair pair_scale(const AlgElement& a, const AlgElement& b, const PertinentPair& p);
/// Merges entries with equal right parts (adding the lefts), then entries
/// with equal left parts (adding the rights), and drops zero entries.
PertinentPair pair_simplify(const PertinentPair& p);
/// From (a_i) ~ (c_i b_i) with invariant c_i, the pair (a_i c_i) ~ (b_i).
PertinentPair pair_transfer(const FiniteGroup& G, const PertinentPair& p, const std::vector<AlgElement>& c,
                            const std::vector<AlgElement>& b);

/// The scalar lambda with g(a) = lambda a, if a is a nonzero eigenvector.
std::optional<Scalar> eigenvalue(const FiniteGroup& G, std::size_t g, const AlgElement& a);
bool is_central(const AlgElement& a);
/// Basis of the degree-d part of the center (needs d < truncation).
std::vector<AlgElement> center_basis(const GradedAlgebra& R, int d);

/// Pair ((1, a_1, a_1 a_2, ...), (a_1...a_n, a_2...a_n, ..., a_n)) for
/// sigma a_i = xi a_i with xi a primitive n-th root of unity.
PertinentPair gen_eigen_product(const FiniteGroup& G, std::size_t sigma, const std::vector<AlgElement>& a);

/// Inclusion-exclusion pair for central a_1..a_{n-1}, n = |G|, with g_i the
/// i-th non-identity element; its value is prod (g_i(a_i) - a_i).
PertinentPair gen_translate_product(const FiniteGroup& G, const std::vector<AlgElement>& a);

/// The q-weighted variant for a_i a_j = q_ij a_j a_i (i < j) with every g
/// acting diagonally on the a_i. When q is empty the factors are read off
/// from the elements.
PertinentPair gen_qcommuting_product(const FiniteGroup& G, const std::vector<AlgElement>& a,
                                     const std::vector<std::vector<Scalar>>& q = {});

struct DeterminantResult {
  AlgElement value;
  PertinentPair pair;  // (a_1..a_n) ~ (A_1..A_n), cofactors along the first row
};
/// det[g_i(a_j)] with g_0 = 1, for |G| central elements.
DeterminantResult gen_determinant(const FiniteGroup& G, const std::vector<AlgElement>& a);

struct ConstructiveResult {
  IdealTable table;
  std::vector<PertinentPair> pairs;
  std::vector<std::string> skipped;  // strategies that produced nothing, with the reason
};

const std::set<std::string>& known_strategies();

/// Two-sided closure of the values of the selected strategies plus the given
/// pairs. Empty `inputs` means default candidates: eigenvectors in R_1,
/// central elements of degree <= 2. Eigenvalues are looked for in Q(zeta_m).
ConstructiveResult radical_constructive(const FiniteGroup& G, int D, const std::set<std::string>& strategies,
                                        const std::vector<PertinentPair>& user_pairs = {},
                                        const std::vector<AlgElement>& inputs = {}, int conductor = 1);

struct SemisimpleResult {
  bool semisimple;
  int checked_upto;
  std::optional<AlgElement> witness;
};
SemisimpleResult is_semisimple_upto(const FiniteGroup& G, int D, int threads = 1);
SemisimpleResult semisimple_from_table(const IdealTable& radical);

}  // namespace pertinax
