#include "pertinax/dimension.hpp"

#include <algorithm>

#include "pertinax/error.hpp"

namespace pertinax {

HilbertData hilbert(const GradedAlgebra& R, const IdealTable* J) {
  HilbertData h{R.hilbert(), J ? "quotient" : "algebra"};
  if (J) {
    h.dims.resize(std::min(h.dims.size(), static_cast<std::size_t>(J->truncation() + 1)));
    for (std::size_t d = 0; d < h.dims.size(); ++d) h.dims[d] -= static_cast<long>((*J)[static_cast<int>(d)].rank());
  }
  return h;
}

namespace {

std::vector<long> lag_difference(const std::vector<long>& v, int lag) {
  std::vector<long> out;
  for (std::size_t i = static_cast<std::size_t>(lag); i < v.size(); ++i) out.push_back(v[i] - v[i - lag]);
  return out;
}

bool tail_zero(const std::vector<long>& v, int window) {
  if (static_cast<int>(v.size()) < window) return false;
  return std::all_of(v.end() - window, v.end(), [](long x) { return x == 0; });
}

}  // namespace

GKEstimate gk_estimate(const HilbertData& h, std::optional<int> known, int window, int max_gen_degree) {
  GKEstimate out;
  const int D = static_cast<int>(h.dims.size()) - 1;
  if (known) {
    out.value = *known;
    out.exact = true;
    out.evidence = "known";
    return out;
  }
  if (window < 1) raise(ErrorCode::BadInput, "window must be positive");
  if (D + 1 < window)
    raise(ErrorCode::InsufficientDegrees, "window " + std::to_string(window) + " needs " + std::to_string(window) +
                                              " degrees, have " + std::to_string(D + 1));
  int zeros = 0;
  for (int d = D; d >= 0 && h.dims[d] == 0; --d) ++zeros;
  if (zeros >= std::max(1, max_gen_degree)) {
    out.exact = true;
    out.window_start = D - zeros + 1;
    out.window_end = D;
    out.evidence = "h vanishes from degree " + std::to_string(out.window_start);
    return out;
  }
  // plain differences first, then lags for periodic growth
  const int max_lag = std::max(1, (D + 1 - window) / 2);
  for (int k = 0;; ++k) {
    bool room = false;
    for (int lag = 1; lag <= max_lag; ++lag) {
      if (D + 1 - k * lag < window) continue;
      room = true;
      std::vector<long> v = h.dims;
      for (int i = 0; i < k; ++i) v = lag_difference(v, lag);
      if (tail_zero(v, window)) {
        out.value = k;
        out.order = k;
        out.lag = lag;
        out.window_start = D - window + 1;
        out.window_end = D;
        out.evidence = "difference of order " + std::to_string(k) + (lag > 1 ? " with lag " + std::to_string(lag) : "") +
                       " vanishes on degrees " + std::to_string(out.window_start) + ".." + std::to_string(D);
        return out;
      }
      if (k == 0) break;
    }
    if (!room) {
      out.value = k;
      out.lower_bound = true;
      out.evidence = "no difference of order below " + std::to_string(k) + " vanishes within degree " +
                     std::to_string(D);
      return out;
    }
  }
}

Pertinency pertinency(const GradedAlgebra& R, const IdealTable& radical, int window,
                      std::optional<int> asserted_gkdim) {
  const std::optional<int> gk = asserted_gkdim ? asserted_gkdim : R.known_gkdim();
  if (!gk) raise(ErrorCode::NeedsGKdim, "pertinency needs the exact GK-dimension of the algebra");
  int max_gen = 1;
  for (std::size_t i = 0; i < R.alphabet().size(); ++i) max_gen = std::max(max_gen, R.alphabet().degree(i));
  Pertinency p;
  p.quotient = gk_estimate(hilbert(R, &radical), std::nullopt, window, max_gen);
  p.value = *gk - p.quotient.value;
  if (p.quotient.exact)
    p.kind = "exact";
  else if (radical.provenance() == Provenance::Constructive)
    p.kind = "lower_bound";
  else
    p.kind = "estimate";
  return p;
}

}  // namespace pertinax
