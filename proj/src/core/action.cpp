#include "pertinax/action.hpp"

#include "pertinax/error.hpp"

namespace pertinax {

Matrix identity_matrix(std::size_t n) {
  Matrix m(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<Scalar>(b.empty() ? 0 : b[0].size()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < a[i].size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[k].size(); ++j) c[i][j].add_mul(a[i][k], b[k][j]);
    }
  return c;
}

std::string render_matrix(const Matrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) out += (j ? ", " : "") + m[i][j].str();
    out += "]";
  }
  return out + "]";
}

namespace {

bool invertible(const Matrix& m) {
  Subspace rows(m.size());
  for (const auto& row : m) {
    std::vector<SparseVec::Entry> e;
    for (Index j = 0; j < row.size(); ++j) e.emplace_back(j, row[j]);
    rows.insert(SparseVec::from_entries(std::move(e)));
  }
  return rows.is_full();
}

}  // namespace

void FiniteGroup::check_automorphism(const Matrix& m) const {
  const Alphabet& a = R_->alphabet();
  const std::size_t n = a.size();
  if (m.size() != n)
    raise(ErrorCode::BadInput, "group matrix has " + std::to_string(m.size()) + " rows, the algebra has " +
                                   std::to_string(n) + " generators");
  for (const auto& row : m)
    if (row.size() != n) raise(ErrorCode::BadInput, "group matrix must be square");
  if (!invertible(m)) raise(ErrorCode::NotAnAutomorphism, "matrix " + render_matrix(m) + " is singular");
  std::vector<AlgElement> images;
  for (std::size_t i = 0; i < n; ++i) {
    FreePoly f;
    for (std::size_t j = 0; j < n; ++j) f.add_term(Word::letter(a, j), m[i][j]);
    images.push_back(AlgElement::from_poly(*R_, f));
  }
  for (const FreePoly& rel : R_->presentation()) {
    if (rel.max_degree() > R_->truncation()) continue;
    AlgElement total(R_);
    for (const auto& [w, c] : rel.terms()) {
      AlgElement term = AlgElement::constant(*R_, c);
      for (std::size_t k = 0; k < w.length(); ++k) term = term * images[w.at(k)];
      total += term;
    }
    if (!total.is_zero())
      raise(ErrorCode::NotAnAutomorphism, "matrix " + render_matrix(m) + " sends relation " +
                                              rel.render(a) + " to " + total.render());
  }
}

std::shared_ptr<const FiniteGroup> FiniteGroup::generate(const GradedAlgebra& R,
                                                         const std::vector<Matrix>& gens,
                                                         std::size_t max_order) {
  if (!R.alphabet().all_degree_one())
    raise(ErrorCode::BadInput, "group actions need every generator in degree one");
  std::shared_ptr<FiniteGroup> G(new FiniteGroup());
  G->R_ = &R;
  G->gens_ = gens;
  G->max_order_ = max_order;
  for (const auto& m : gens) G->check_automorphism(m);

  const std::size_t n = R.alphabet().size();
  G->elements_.push_back(identity_matrix(n));
  for (std::size_t i = 0; i < G->elements_.size(); ++i) {
    for (const auto& s : gens) {
      // s after elements_[i]
      Matrix next = mat_mul(G->elements_[i], s);
      if (G->find(next) < G->order()) continue;
      if (G->order() >= max_order)
        raise(ErrorCode::NotFiniteWithinBound,
              "group closure exceeds " + std::to_string(max_order) + " elements");
      G->elements_.push_back(std::move(next));
    }
  }
  if (G->order() == 1) raise(ErrorCode::TrivialGroupRejected, "the generated group is trivial");

  const std::size_t k = G->order();
  G->table_.assign(k, std::vector<std::size_t>(k));
  G->inverse_.assign(k, 0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      std::size_t c = G->find(mat_mul(G->elements_[b], G->elements_[a]));
      if (c == k) raise(ErrorCode::BadInput, "group closure is inconsistent");
      G->table_[a][b] = c;
      if (c == 0) G->inverse_[a] = b;
    }
  G->letters_.resize(k);
  for (std::size_t g = 0; g < k; ++g)
    for (std::size_t i = 0; i < n; ++i) G->letters_[g].push_back(G->letter_image(g, i).component(1));
  const auto levels = static_cast<std::size_t>(R.truncation()) + 1;
  G->cache_.assign(k, std::vector<std::vector<SparseVec>>(levels));
  G->ready_.assign(k, std::vector<char>(levels, 0));
  return G;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::induced_on(const GradedAlgebra& S) const {
  if (!(S.alphabet() == R_->alphabet()))
    raise(ErrorCode::BadInput, "induced action needs the same generators");
  return generate(S, gens_, max_order_);
}

std::size_t FiniteGroup::find(const Matrix& m) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == m) return i;
  return elements_.size();
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t cur = a; cur != 0; cur = compose(a, cur)) ++k;
  return k;
}

const std::vector<SparseVec>& FiniteGroup::degree_action(std::size_t g, int d) const {
  if (d > R_->truncation()) raise(ErrorCode::TruncationExceeded, "action above the truncation degree");
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (ready_[g][d]) return cache_[g][d];
  }
  std::vector<SparseVec> images;
  const auto& words = R_->basis(d);
  images.reserve(words.size());
  if (d == 0) {
    images.push_back(SparseVec::unit(0));
  } else {
    const auto& lower = degree_action(g, d - 1);
    for (const Word& w : words) {
      const Word head = w.sub(R_->alphabet(), 0, 1);
      const Word rest = w.sub(R_->alphabet(), 1, w.length() - 1);
      const SparseVec& x = letters_[g][w.at(0)];
      images.push_back(R_->multiply(head.degree(), x, rest.degree(), lower[*R_->index_of(rest)]));
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  if (!ready_[g][d]) {
    cache_[g][d] = std::move(images);
    ready_[g][d] = 1;
  }
  return cache_[g][d];
}

AlgElement FiniteGroup::letter_image(std::size_t g, std::size_t i) const {
  const Alphabet& a = R_->alphabet();
  FreePoly f;
  for (std::size_t j = 0; j < a.size(); ++j) f.add_term(Word::letter(a, j), elements_[g][i][j]);
  return AlgElement::from_poly(*R_, f);
}

SparseVec FiniteGroup::act(std::size_t g, int d, const SparseVec& v) const {
  if (g == 0 || v.is_zero()) return v;
  const auto& images = degree_action(g, d);
  Accumulator acc(R_->dim(d));
  for (const auto& [i, c] : v) acc.add_scaled(images[i], c);
  return acc.take();
}

AlgElement FiniteGroup::act(std::size_t g, const AlgElement& f) const {
  AlgElement out(R_);
  for (int d = 0; d <= f.degree(); ++d)
    if (!f.component(d).is_zero()) out += AlgElement::homogeneous(*R_, d, act(g, d, f.component(d)));
  return out;
}

AlgElement FiniteGroup::reynolds(const AlgElement& f) const {
  AlgElement out(R_);
  for (std::size_t g = 0; g < order(); ++g) out += act(g, f);
  return out.scaled(Scalar(Rational(1, static_cast<long long>(order()))));
}

}  // namespace pertinax
