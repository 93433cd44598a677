#include "pertinax/galgebra.hpp"

#include "pertinax/error.hpp"

namespace pertinax {

GradedAlgebra::GradedAlgebra(Alphabet alphabet, std::vector<FreePoly> relations, int D,
                             std::optional<int> known_gkdim, std::string kind, bool allow_linear)
    : relations_(std::move(relations)),
      gb_(TruncatedGB::complete(alphabet, relations_, D, allow_linear)),
      D_(D),
      known_gkdim_(known_gkdim),
      kind_(std::move(kind)) {
  index_.resize(D + 1);
  for (int d = 0; d <= D; ++d) {
    const auto& words = gb_.normal_words(d);
    for (Index i = 0; i < words.size(); ++i) index_[d].emplace(words[i].letters(), i);
  }
}

std::optional<Index> GradedAlgebra::index_of(const Word& w) const {
  if (w.degree() > D_) return std::nullopt;
  auto it = index_[w.degree()].find(w.letters());
  if (it == index_[w.degree()].end()) return std::nullopt;
  return it->second;
}

std::vector<long> GradedAlgebra::hilbert() const {
  std::vector<long> h;
  for (int d = 0; d <= D_; ++d) h.push_back(static_cast<long>(dim(d)));
  return h;
}

SparseVec GradedAlgebra::coords(int d, const FreePoly& normal) const {
  std::vector<SparseVec::Entry> entries;
  entries.reserve(normal.size());
  for (const auto& [w, c] : normal.terms()) {
    if (w.degree() != d) raise(ErrorCode::BadInput, "expected a homogeneous polynomial of degree " + std::to_string(d));
    auto idx = index_of(w);
    if (!idx) raise(ErrorCode::BadInput, "word " + render_word(alphabet(), w) + " is not a normal word");
    entries.emplace_back(*idx, c);
  }
  return SparseVec::from_entries(std::move(entries));
}

FreePoly GradedAlgebra::poly(int d, const SparseVec& v) const {
  FreePoly f;
  const auto& words = basis(d);
  for (const auto& [i, c] : v) f.add_term(words[i], c);
  return f;
}

const std::vector<SparseVec>& GradedAlgebra::product_block(int i, int j) const {
  if (i + j > D_)
    raise(ErrorCode::TruncationExceeded, "product of degrees " + std::to_string(i) + " and " +
                                             std::to_string(j) + " exceeds the truncation degree " +
                                             std::to_string(D_));
  const auto key = std::make_pair(i, j);
  {
    std::lock_guard<std::mutex> lock(block_mu_);
    auto it = blocks_.find(key);
    if (it != blocks_.end()) return it->second;
  }
  const auto& left = basis(i);
  const auto& right = basis(j);
  std::vector<SparseVec> block;
  block.reserve(left.size() * right.size());
  for (const Word& u : left)
    for (const Word& v : right) block.push_back(coords(i + j, gb_.normal_form(u * v)));
  std::lock_guard<std::mutex> lock(block_mu_);
  return blocks_.emplace(key, std::move(block)).first->second;
}

SparseVec GradedAlgebra::multiply(int i, const SparseVec& a, int j, const SparseVec& b) const {
  if (a.is_zero() || b.is_zero()) return SparseVec();
  const auto& block = product_block(i, j);
  const std::size_t dj = dim(j);
  Accumulator acc(dim(i + j));
  for (const auto& [p, s] : a)
    for (const auto& [q, t] : b) acc.add_scaled(block[p * dj + q], s * t);
  return acc.take();
}

AlgElement AlgElement::from_poly(const GradedAlgebra& R, const FreePoly& f) {
  AlgElement e(&R);
  const FreePoly nf = R.gb().normal_form(f);
  for (int d = nf.min_degree(); d >= 0 && d <= nf.max_degree(); ++d)
    e.set_component(d, R.coords(d, nf.component(d)));
  return e;
}

AlgElement AlgElement::homogeneous(const GradedAlgebra& R, int d, SparseVec v) {
  AlgElement e(&R);
  e.set_component(d, std::move(v));
  return e;
}

AlgElement AlgElement::constant(const GradedAlgebra& R, const Scalar& c) {
  return homogeneous(R, 0, SparseVec::unit(0, c));
}

AlgElement AlgElement::generator(const GradedAlgebra& R, std::size_t i) {
  return from_poly(R, FreePoly::generator(R.alphabet(), i));
}

void AlgElement::set_component(int d, SparseVec v) {
  if (static_cast<int>(comps_.size()) <= d) {
    if (v.is_zero()) return;
    comps_.resize(d + 1);
  }
  comps_[d] = std::move(v);
  trim();
}

void AlgElement::trim() {
  while (!comps_.empty() && comps_.back().is_zero()) comps_.pop_back();
}

const SparseVec& AlgElement::component(int d) const {
  static const SparseVec empty;
  if (d < 0 || d >= static_cast<int>(comps_.size())) return empty;
  return comps_[d];
}

AlgElement AlgElement::homogeneous_part(int d) const {
  AlgElement e(R_);
  e.set_component(d, component(d));
  return e;
}

bool AlgElement::is_homogeneous() const {
  return comps_.empty() || min_degree() == degree();
}

int AlgElement::min_degree() const {
  for (std::size_t d = 0; d < comps_.size(); ++d)
    if (!comps_[d].is_zero()) return static_cast<int>(d);
  return -1;
}

FreePoly AlgElement::to_poly() const {
  FreePoly f;
  for (std::size_t d = 0; d < comps_.size(); ++d)
    if (!comps_[d].is_zero()) f += R_->poly(static_cast<int>(d), comps_[d]);
  return f;
}

std::string AlgElement::render() const {
  if (!R_) return "0";
  return to_poly().render(R_->alphabet());
}

const GradedAlgebra* AlgElement::join(const AlgElement& a, const AlgElement& b) {
  if (!a.R_) return b.R_;
  if (!b.R_ || a.R_ == b.R_) return a.R_;
  raise(ErrorCode::BadInput, "elements belong to different algebras");
}

AlgElement AlgElement::scaled(const Scalar& c) const {
  AlgElement e(R_);
  if (c.is_zero()) return e;
  e.comps_.reserve(comps_.size());
  for (const auto& v : comps_) e.comps_.push_back(v.scaled(c));
  return e;
}

AlgElement& AlgElement::operator+=(const AlgElement& b) {
  R_ = join(*this, b);
  if (comps_.size() < b.comps_.size()) comps_.resize(b.comps_.size());
  for (std::size_t d = 0; d < b.comps_.size(); ++d) comps_[d] = comps_[d] + b.comps_[d];
  trim();
  return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& b) {
  R_ = join(*this, b);
  if (comps_.size() < b.comps_.size()) comps_.resize(b.comps_.size());
  for (std::size_t d = 0; d < b.comps_.size(); ++d) comps_[d] = comps_[d] - b.comps_[d];
  trim();
  return *this;
}

AlgElement operator*(const AlgElement& a, const AlgElement& b) {
  const GradedAlgebra* R = AlgElement::join(a, b);
  AlgElement out(R);
  if (a.is_zero() || b.is_zero()) return out;
  out.comps_.resize(a.comps_.size() + b.comps_.size() - 1);
  for (std::size_t i = 0; i < a.comps_.size(); ++i) {
    if (a.comps_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.comps_.size(); ++j) {
      if (b.comps_[j].is_zero()) continue;
      out.comps_[i + j] = out.comps_[i + j] + R->multiply(static_cast<int>(i), a.comps_[i],
                                                          static_cast<int>(j), b.comps_[j]);
    }
  }
  out.trim();
  return out;
}

AlgElement AlgElement::pow(int e) const {
  if (e < 0) raise(ErrorCode::BadInput, "negative power of an algebra element");
  if (!R_) return *this;
  AlgElement out = constant(*R_, Scalar(1));
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

AlgebraPtr make_commutative(int n, int D) {
  Alphabet a = Alphabet::standard(n);
  std::vector<FreePoly> rels;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      FreePoly xi = FreePoly::generator(a, i);
      FreePoly xj = FreePoly::generator(a, j);
      rels.push_back(xj * xi - xi * xj);
    }
  return std::make_shared<GradedAlgebra>(a, rels, D, n, "commutative");
}

AlgebraPtr make_quantum_affine(const std::vector<std::vector<Scalar>>& q, int D) {
  const std::size_t n = q.size();
  if (n == 0) raise(ErrorCode::BadQMatrix, "empty q matrix");
  for (const auto& row : q)
    if (row.size() != n) raise(ErrorCode::BadQMatrix, "q matrix must be square");
  for (std::size_t i = 0; i < n; ++i) {
    if (!q[i][i].is_one()) raise(ErrorCode::BadQMatrix, "q_ii must be 1");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (q[i][j].is_zero()) raise(ErrorCode::BadQMatrix, "q entries must be nonzero");
      if (!(q[i][j] * q[j][i]).is_one())
        raise(ErrorCode::BadQMatrix, "q_ji must be the inverse of q_ij");
    }
  }
  Alphabet a = Alphabet::standard(static_cast<int>(n));
  std::vector<FreePoly> rels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      FreePoly xi = FreePoly::generator(a, i);
      FreePoly xj = FreePoly::generator(a, j);
      rels.push_back(xj * xi - (xi * xj).scaled(q[i][j]));
    }
  return std::make_shared<GradedAlgebra>(a, rels, D, static_cast<int>(n), "quantum_affine");
}

AlgebraPtr make_downup(const Scalar& alpha, const Scalar& beta, int D) {
  Alphabet a = Alphabet::standard(2);
  FreePoly x = FreePoly::generator(a, 0);
  FreePoly y = FreePoly::generator(a, 1);
  FreePoly r1 = x * x * y - (x * y * x).scaled(alpha) - (y * x * x).scaled(beta);
  FreePoly r2 = x * y * y - (y * x * y).scaled(alpha) - (y * y * x).scaled(beta);
  return std::make_shared<GradedAlgebra>(a, std::vector<FreePoly>{r1, r2}, D, 3, "downup");
}

AlgebraPtr make_presentation(const Alphabet& alphabet, const std::vector<FreePoly>& relations, int D) {
  return std::make_shared<GradedAlgebra>(alphabet, relations, D, std::nullopt, "presentation");
}

AlgebraPtr quotient_by_ideal(const GradedAlgebra& R, const std::vector<AlgElement>& gens, int D) {
  std::vector<FreePoly> rels = R.presentation();
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.component(0).is_zero())
      raise(ErrorCode::DegenerateQuotient, "quotient by a generator with a nonzero constant term");
    for (int d = g.min_degree(); d <= g.degree(); ++d)
      if (!g.component(d).is_zero()) rels.push_back(R.poly(d, g.component(d)));
  }
  return std::make_shared<GradedAlgebra>(R.alphabet(), rels, D, std::nullopt, "quotient", true);
}

}  // namespace pertinax
