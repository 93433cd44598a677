#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pertinax/skewgroup.hpp"

namespace pertinax {

struct HilbertData {
  std::vector<long> dims;
  std::string source;
};

/// h(d) = dim R_d - dim J_d
HilbertData hilbert(const GradedAlgebra& R, const IdealTable* J = nullptr);

struct GKEstimate {
  int value = 0;
  bool exact = false;
  bool lower_bound = false;  // no difference order vanished; value only bounds GK from below
  int order = 0;             // finite-difference order that vanished
  int lag = 1;               // step of the differences (period of a quasi-polynomial)
  int window_start = 0;      // degrees on which the differences vanished
  int window_end = 0;
  std::string evidence;
};

/// Smallest k with the k-th difference of h zero on the last `window` degrees.
/// Trailing zeros at least `max_gen_degree` long certify GK 0.
GKEstimate gk_estimate(const HilbertData& h, std::optional<int> known = std::nullopt, int window = 4,
                       int max_gen_degree = 1);

struct Pertinency {
  int value = 0;
  std::string kind;  // exact | estimate | lower_bound
  GKEstimate quotient;
};

/// GKdim R - GKdim R/J. A constructive J gives a lower bound unless R/J is
/// certified finite-dimensional.
Pertinency pertinency(const GradedAlgebra& R, const IdealTable& radical, int window = 4,
                      std::optional<int> asserted_gkdim = std::nullopt);

}  // namespace pertinax
