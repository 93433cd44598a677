#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pertinax/skewgroup.hpp"

namespace pertinax {

// A = R^G through degree D.
struct InvariantRing {
  std::vector<Subspace> components;  // A_d inside R_d
  std::vector<AlgElement> generators;  // minimal up to degree D
  int truncation = 0;

  std::vector<long> dims() const;
};

InvariantRing invariants_basis(const FiniteGroup& G, int D);

/// (1/|G|) sum_g trace(g on R_d)
Scalar molien_dimension(const FiniteGroup& G, int d);

struct CofinalityEntry {
  int s;
  std::optional<int> n;  // smallest n with r^n inside a^s R through degree D
  std::string status;    // found | trivial | inconclusive | not_found
};

struct CofinalityCertificate {
  bool aR_eq_Ra;
  std::vector<CofinalityEntry> table;
};

/// r^n_d inside (a^s R)_d for all d <= D, with a = r cap A. A power of r that
/// vanishes through degree D gives no evidence and is reported inconclusive.
CofinalityCertificate cofinality_check(const IdealTable& radical, const InvariantRing& A, int s_max, int n_cap);

/// r^n as a table: right closure of r^(n-1) times the generators of r.
std::vector<IdealTable> radical_powers(const IdealTable& radical, int n_max);

/// Generators of a = r cap A as an ideal of A: rows of a_d outside
/// A_+ a + a A_+, minimal up to the truncation degree.
std::vector<AlgElement> ideal_generators_in(const IdealTable& a, const InvariantRing& A);

struct NormalityVerdict {
  bool in_R;
  std::optional<bool> in_A;  // empty when the element is not invariant
};

/// a R_d = R_d a for every d <= D - deg a, and likewise against A_d.
NormalityVerdict normality_check(const AlgElement& a, const InvariantRing* A, int D);

}  // namespace pertinax
