#include "pertinax/radical.hpp"

#include <algorithm>
#include <numeric>

#include "pertinax/error.hpp"

namespace pertinax {

AlgElement PertinentPair::value() const {
  AlgElement out(left.empty() ? nullptr : left.front().algebra());
  for (std::size_t i = 0; i < left.size(); ++i) out += left[i] * right[i];
  return out;
}

std::optional<PairViolation> find_violation(const FiniteGroup& G, const std::vector<AlgElement>& left,
                                            const std::vector<AlgElement>& right) {
  for (std::size_t g = 1; g < G.order(); ++g) {
    AlgElement residue(&G.algebra());
    for (std::size_t i = 0; i < left.size(); ++i) residue += left[i] * G.act(g, right[i]);
    if (!residue.is_zero()) return PairViolation{g, residue};
  }
  return std::nullopt;
}

PertinentPair verify_pertinent(const FiniteGroup& G, std::vector<AlgElement> left, std::vector<AlgElement> right,
                               std::string origin) {
  if (left.size() != right.size())
    raise(ErrorCode::BadPair, "pair sides have lengths " + std::to_string(left.size()) + " and " +
                                  std::to_string(right.size()));
  if (left.empty()) raise(ErrorCode::BadPair, "a pair needs at least one entry");
  for (auto* side : {&left, &right})
    for (auto& a : *side)
      if (!a.algebra()) a = AlgElement(&G.algebra());
  if (auto v = find_violation(G, left, right))
    raise(ErrorCode::NotPertinent, "g = " + render_matrix(G.matrix(v->element)) +
                                       " leaves residue " + v->residue.render());
  return PertinentPair{std::move(left), std::move(right), true, std::move(origin)};
}

PertinentPair pair_concat(const PertinentPair& p, const PertinentPair& q) {
  PertinentPair out = p;
  out.left.insert(out.left.end(), q.left.begin(), q.left.end());
  out.right.insert(out.right.end(), q.right.begin(), q.right.end());
  out.verified = p.verified && q.verified;
  return out;
}

PertinentPair pair_translate(const FiniteGroup& G, std::size_t h, const PertinentPair& p) {
  PertinentPair out = p;
  for (auto& a : out.left) a = G.act(h, a);
  for (auto& b : out.right) b = G.act(h, b);
  return out;
}

PertinentPair pair_scale(const AlgElement& a, const AlgElement& b, const PertinentPair& p) {
  PertinentPair out = p;
  for (auto& x : out.left) x = a * x;
  for (auto& y : out.right) y = y * b;
  return out;
}

PertinentPair pair_simplify(const PertinentPair& p) {
  std::vector<AlgElement> left = p.left;
  std::vector<AlgElement> right = p.right;
  auto merge = [&](std::vector<AlgElement>& key, std::vector<AlgElement>& other) {
    for (std::size_t i = 0; i < key.size(); ++i)
      for (std::size_t j = key.size(); j-- > i + 1;)
        if (key[j] == key[i]) {
          other[i] += other[j];
          key.erase(key.begin() + static_cast<long>(j));
          other.erase(other.begin() + static_cast<long>(j));
        }
  };
  merge(right, left);
  merge(left, right);
  PertinentPair out{{}, {}, p.verified, p.origin};
  for (std::size_t i = 0; i < left.size(); ++i)
    if (!left[i].is_zero() && !right[i].is_zero()) {
      out.left.push_back(left[i]);
      out.right.push_back(right[i]);
    }
  if (out.left.empty() && !p.left.empty()) {
    const GradedAlgebra* R = p.left.front().algebra();
    out.left.push_back(AlgElement(R));
    out.right.push_back(AlgElement(R));
  }
  return out;
}

PertinentPair pair_transfer(const FiniteGroup& G, const PertinentPair& p, const std::vector<AlgElement>& c,
                            const std::vector<AlgElement>& b) {
  if (c.size() != p.size() || b.size() != p.size())
    raise(ErrorCode::BadPair, "transfer needs one invariant and one factor per entry");
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t g = 1; g < G.order(); ++g)
      if (!(G.act(g, c[i]) == c[i]))
        raise(ErrorCode::BadInput, "transfer coefficient " + c[i].render() + " is not invariant");
    if (!(c[i] * b[i] == p.right[i]))
      raise(ErrorCode::BadInput, "right entry " + p.right[i].render() + " is not " + c[i].render() + " times " +
                                     b[i].render());
  }
  PertinentPair out{{}, b, p.verified, p.origin};
  for (std::size_t i = 0; i < c.size(); ++i) out.left.push_back(p.left[i] * c[i]);
  return out;
}

std::optional<Scalar> eigenvalue(const FiniteGroup& G, std::size_t g, const AlgElement& a) {
  if (a.is_zero()) return std::nullopt;
  const AlgElement image = G.act(g, a);
  const int d = a.degree();
  const auto& lead = *a.component(d).begin();
  const Scalar lambda = image.component(d).get(lead.first) / lead.second;
  if (!(image == a.scaled(lambda))) return std::nullopt;
  return lambda;
}

bool is_central(const AlgElement& a) {
  const GradedAlgebra* R = a.algebra();
  if (!R || a.is_zero()) return true;
  for (std::size_t i = 0; i < R->alphabet().size(); ++i) {
    const AlgElement x = AlgElement::generator(*R, i);
    if (!(a * x == x * a)) return false;
  }
  return true;
}

std::vector<AlgElement> center_basis(const GradedAlgebra& R, int d) {
  const std::size_t n = R.dim(d);
  const std::size_t g = R.alphabet().size();
  std::vector<SparseVec> columns;
  for (std::size_t p = 0; p < n; ++p) {
    const SparseVec e = SparseVec::unit(static_cast<Index>(p));
    std::vector<SparseVec::Entry> stacked;
    for (std::size_t i = 0; i < g; ++i) {
      const int dx = R.alphabet().degree(i);
      const SparseVec x = SparseVec::unit(*R.index_of(Word::letter(R.alphabet(), i)));
      const SparseVec c = R.multiply(d, e, dx, x) - R.multiply(dx, x, d, e);
      const Index offset = static_cast<Index>(i * R.dim(d + dx));
      for (const auto& [k, s] : c) stacked.emplace_back(offset + k, s);
    }
    columns.push_back(SparseVec::from_entries(std::move(stacked)));
  }
  std::vector<AlgElement> out;
  const Subspace kernel = kernel_of_columns(n, columns);
  for (const auto& row : kernel.basis()) out.push_back(AlgElement::homogeneous(R, d, row));
  return out;
}

namespace {

AlgElement one(const FiniteGroup& G) { return AlgElement::constant(G.algebra(), Scalar(1)); }

AlgElement product(const FiniteGroup& G, const std::vector<AlgElement>& a, std::size_t from, std::size_t to) {
  AlgElement out = one(G);
  for (std::size_t i = from; i < to; ++i) out = out * a[i];
  return out;
}

void require_central(const std::vector<AlgElement>& a) {
  for (const auto& x : a)
    if (!is_central(x)) raise(ErrorCode::NotCentral, x.render() + " is not central");
}

// Subsets of {0..k-1} by size, each size in lexicographic order.
std::vector<std::vector<std::size_t>> ordered_subsets(std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s <= k; ++s) {
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      out.push_back(idx);
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == k - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

void check_family_size(const FiniteGroup& G, const std::vector<AlgElement>& a) {
  const std::size_t n = G.order();
  if (a.size() + 1 != n)
    raise(ErrorCode::BadInput, "needs |G| - 1 = " + std::to_string(n - 1) + " elements, got " +
                                   std::to_string(a.size()));
  if (a.size() > 12) raise(ErrorCode::BadInput, "inclusion-exclusion is capped at 12 factors");
}

}  // namespace

PertinentPair gen_eigen_product(const FiniteGroup& G, std::size_t sigma, const std::vector<AlgElement>& a) {
  if (a.empty()) raise(ErrorCode::BadInput, "eigenvector product needs at least one element");
  if (sigma == 0 || sigma >= G.order()) raise(ErrorCode::BadInput, "sigma must be a non-identity element");
  const std::size_t n = a.size();
  std::optional<Scalar> xi;
  for (const auto& x : a) {
    auto lambda = eigenvalue(G, sigma, x);
    if (!lambda) raise(ErrorCode::NotEigen, x.render() + " is not an eigenvector of sigma");
    if (xi && !(*xi == *lambda)) raise(ErrorCode::NotEigen, "the elements have different eigenvalues");
    xi = lambda;
  }
  Scalar power(1);
  for (std::size_t k = 1; k <= n; ++k) {
    power *= *xi;
    if ((k < n) == power.is_one())
      raise(ErrorCode::NotEigen, "eigenvalue " + xi->str() + " is not a primitive " + std::to_string(n) +
                                     "-th root of unity");
  }
  std::vector<AlgElement> left, right;
  for (std::size_t i = 0; i < n; ++i) {
    left.push_back(product(G, a, 0, i));
    right.push_back(product(G, a, i, n));
  }
  return verify_pertinent(G, std::move(left), std::move(right), "eigen_product");
}

PertinentPair gen_translate_product(const FiniteGroup& G, const std::vector<AlgElement>& a) {
  check_family_size(G, a);
  require_central(a);
  std::vector<AlgElement> moved;
  for (std::size_t i = 0; i < a.size(); ++i) moved.push_back(G.act(i + 1, a[i]));
  std::vector<AlgElement> left, right;
  for (const auto& S : ordered_subsets(a.size())) {
    AlgElement l = one(G), r = one(G);
    std::size_t k = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (k < S.size() && S[k] == i) {
        r = r * a[i];
        ++k;
      } else {
        l = l * moved[i];
      }
    }
    left.push_back(l);
    right.push_back(S.size() % 2 ? -r : r);
  }
  return verify_pertinent(G, std::move(left), std::move(right), "translate_product");
}

PertinentPair gen_qcommuting_product(const FiniteGroup& G, const std::vector<AlgElement>& a,
                                     const std::vector<std::vector<Scalar>>& q) {
  check_family_size(G, a);
  const std::size_t k = a.size();
  for (const auto& x : a)
    for (std::size_t g = 1; g < G.order(); ++g)
      if (!eigenvalue(G, g, x))
        raise(ErrorCode::NotEigen, "g = " + render_matrix(G.matrix(g)) + " does not act diagonally on " + x.render());
  std::vector<std::vector<Scalar>> factor(k, std::vector<Scalar>(k, Scalar(1)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const AlgElement ij = a[i] * a[j];
      const AlgElement ji = a[j] * a[i];
      if (!q.empty()) {
        if (q.size() < k || q[i].size() < k) raise(ErrorCode::BadInput, "q matrix is too small");
        factor[i][j] = q[i][j];
      } else if (!ji.is_zero()) {
        const int d = ji.degree();
        const auto& lead = *ji.component(d).begin();
        factor[i][j] = ij.component(d).get(lead.first) / lead.second;
      } else if (!ij.is_zero()) {
        raise(ErrorCode::NotQCommuting, a[i].render() + " and " + a[j].render() + " do not q-commute");
      }
      if (!(ij == ji.scaled(factor[i][j])))
        raise(ErrorCode::NotQCommuting, a[i].render() + " * " + a[j].render() + " is not " + factor[i][j].str() +
                                            " * " + a[j].render() + " * " + a[i].render());
    }
  std::vector<AlgElement> left, right;
  for (const auto& S : ordered_subsets(k)) {
    std::vector<char> in(k, 0);
    for (std::size_t i : S) in[i] = 1;
    AlgElement l = one(G), r = one(G);
    Scalar weight(1);
    for (std::size_t i = 0; i < k; ++i) {
      if (in[i]) {
        r = r * a[i];
        for (std::size_t j = i + 1; j < k; ++j)
          if (!in[j]) weight *= factor[i][j];
      } else {
        l = l * G.act(i + 1, a[i]);
      }
    }
    if (S.size() % 2) weight = -weight;
    left.push_back(l);
    right.push_back(r.scaled(weight));
  }
  return verify_pertinent(G, std::move(left), std::move(right), "qcommuting");
}

namespace {

AlgElement determinant(const GradedAlgebra& R, const std::vector<std::vector<AlgElement>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  AlgElement out(&R);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    AlgElement term = AlgElement::constant(R, Scalar(inversions % 2 ? -1 : 1));
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * m[i][perm[i]];
    out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

DeterminantResult gen_determinant(const FiniteGroup& G, const std::vector<AlgElement>& a) {
  const std::size_t n = G.order();
  if (a.size() != n)
    raise(ErrorCode::BadInput, "determinant needs |G| = " + std::to_string(n) + " elements, got " +
                                   std::to_string(a.size()));
  if (n > 8) raise(ErrorCode::BadInput, "determinant is capped at groups of order 8");
  require_central(a);
  const GradedAlgebra& R = G.algebra();
  std::vector<std::vector<AlgElement>> m(n);
  for (std::size_t g = 0; g < n; ++g)
    for (const auto& x : a) m[g].push_back(G.act(g, x));
  std::vector<AlgElement> cofactors;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<AlgElement>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<AlgElement> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(std::move(row));
    }
    AlgElement c = determinant(R, minor);
    cofactors.push_back(j % 2 ? -c : c);
  }
  PertinentPair pair = verify_pertinent(G, a, std::move(cofactors), "determinant");
  AlgElement value = determinant(R, m);
  return {std::move(value), std::move(pair)};
}

const std::set<std::string>& known_strategies() {
  static const std::set<std::string> names{"eigen_product", "translate_product", "qcommuting", "determinant"};
  return names;
}

namespace {

struct Candidates {
  std::vector<AlgElement> all;
  bool defaulted;
};

int degree_of(const AlgElement& a) { return a.is_zero() ? 0 : a.degree(); }

// Odometer over options[i], at most `cap` tuples.
template <class F>
void for_tuples(const std::vector<std::vector<AlgElement>>& options, std::size_t cap, F&& f) {
  for (const auto& o : options)
    if (o.empty()) return;
  std::vector<std::size_t> pos(options.size(), 0);
  for (std::size_t count = 0; count < cap; ++count) {
    std::vector<AlgElement> t;
    for (std::size_t i = 0; i < options.size(); ++i) t.push_back(options[i][pos[i]]);
    f(t);
    std::size_t i = options.size();
    while (i > 0) {
      --i;
      if (++pos[i] < options[i].size()) break;
      pos[i] = 0;
      if (i == 0) return;
    }
    if (options.empty()) return;
  }
}

std::vector<AlgElement> central_candidates(const GradedAlgebra& R, int D, const Candidates& c) {
  std::vector<AlgElement> out;
  if (!c.defaulted) {
    for (const auto& x : c.all)
      if (degree_of(x) < D && is_central(x)) out.push_back(x);
    return out;
  }
  for (int d = 1; d <= 2 && d < D; ++d)
    for (auto& x : center_basis(R, d)) out.push_back(std::move(x));
  return out;
}

}  // namespace

ConstructiveResult radical_constructive(const FiniteGroup& G, int D, const std::set<std::string>& strategies,
                                        const std::vector<PertinentPair>& user_pairs,
                                        const std::vector<AlgElement>& inputs, int conductor) {
  const GradedAlgebra& R = G.algebra();
  for (const auto& s : strategies)
    if (!known_strategies().count(s)) raise(ErrorCode::BadInput, "unknown strategy " + s);
  ConstructiveResult result{IdealTable(R, D, Provenance::Constructive), {}, {}};
  const std::size_t n = G.order();
  const Candidates cands{inputs, inputs.empty()};

  auto accept = [&](PertinentPair p) {
    const AlgElement v = p.value();
    for (const auto& q : result.pairs)
      if (q.value() == v) return;
    for (int d = 0; d <= std::min(D, v.degree()); ++d) result.table[d].insert(v.component(d));
    result.pairs.push_back(std::move(p));
  };
  auto fits = [&](const std::vector<AlgElement>& t, int extra = 0) {
    int deg = extra;
    for (const auto& x : t) deg += degree_of(x);
    return deg <= D;
  };

  if (strategies.count("eigen_product")) {
    std::size_t made = 0;
    std::string reason = "no element of order |G|";
    for (std::size_t sigma = 1; sigma < n; ++sigma) {
      if (G.element_order(sigma) != n) continue;
      if (n > 2 && conductor % static_cast<int>(n) != 0) {
        reason = "eigenvalues need conductor divisible by " + std::to_string(n);
        break;
      }
      if (static_cast<int>(n) > D) {
        reason = "products of " + std::to_string(n) + " factors exceed the truncation";
        break;
      }
      const Scalar root = n > 2 ? CyclotomicField::get(conductor).primitive_root(static_cast<int>(n)) : Scalar(-1);
      for (std::size_t k = 1; k < n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        const Scalar xi = root.pow(static_cast<long long>(k));
        std::vector<AlgElement> space;
        if (cands.defaulted) {
          std::vector<SparseVec> columns;
          const auto& images = G.degree_action(sigma, 1);
          for (std::size_t p = 0; p < R.dim(1); ++p)
            columns.push_back(images[p] - SparseVec::unit(static_cast<Index>(p), xi));
          for (const auto& row : kernel_of_columns(R.dim(1), columns).basis())
            space.push_back(AlgElement::homogeneous(R, 1, row));
        } else {
          for (const auto& x : cands.all) {
            auto lambda = eigenvalue(G, sigma, x);
            if (lambda && *lambda == xi) space.push_back(x);
          }
        }
        if (space.empty()) continue;
        std::vector<std::vector<AlgElement>> options(n, space);
        std::size_t total = 1;
        for (std::size_t i = 0; i < n && total <= 256; ++i) total *= space.size();
        if (total <= 256) {
          for_tuples(options, 256, [&](const std::vector<AlgElement>& t) {
            if (!fits(t)) return;
            try {
              accept(gen_eigen_product(G, sigma, t));
              ++made;
            } catch (const Error&) {
            }
          });
        } else {
          for (const auto& v : space) {
            std::vector<AlgElement> t(n, v);
            if (!fits(t)) continue;
            try {
              accept(gen_eigen_product(G, sigma, t));
              ++made;
            } catch (const Error&) {
            }
          }
        }
      }
    }
    if (!made) result.skipped.push_back("eigen_product: " + reason);
  }

  std::vector<AlgElement> central;
  if (strategies.count("translate_product") || strategies.count("determinant"))
    central = central_candidates(R, D, cands);

  if (strategies.count("translate_product")) {
    std::size_t made = 0;
    if (n - 1 > 12) {
      result.skipped.push_back("translate_product: more than 12 factors");
    } else {
      std::vector<std::vector<AlgElement>> options(n - 1);
      for (std::size_t i = 0; i + 1 < n; ++i)
        for (const auto& c : central)
          if (!(G.act(i + 1, c) == c)) options[i].push_back(c);
      for_tuples(options, 64, [&](const std::vector<AlgElement>& t) {
        if (!fits(t)) return;
        accept(gen_translate_product(G, t));
        ++made;
      });
      if (!made) result.skipped.push_back("translate_product: no central elements moved by every g within degree " +
                                          std::to_string(D));
    }
  }

  if (strategies.count("qcommuting")) {
    std::size_t made = 0;
    std::vector<AlgElement> diagonal;
    auto is_diagonal = [&](const AlgElement& x) {
      for (std::size_t g = 1; g < n; ++g)
        if (!eigenvalue(G, g, x)) return false;
      return true;
    };
    if (cands.defaulted) {
      for (std::size_t i = 0; i < R.alphabet().size(); ++i) {
        AlgElement x = AlgElement::generator(R, i);
        if (is_diagonal(x)) diagonal.push_back(std::move(x));
      }
    } else {
      for (const auto& x : cands.all)
        if (!x.is_zero() && is_diagonal(x)) diagonal.push_back(x);
    }
    if (n - 1 <= 12) {
      std::vector<std::vector<AlgElement>> options(n - 1);
      for (std::size_t i = 0; i + 1 < n; ++i)
        for (const auto& c : diagonal)
          if (!(G.act(i + 1, c) == c)) options[i].push_back(c);
      for_tuples(options, 64, [&](const std::vector<AlgElement>& t) {
        if (!fits(t)) return;
        try {
          accept(gen_qcommuting_product(G, t));
          ++made;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NotQCommuting) throw;
        }
      });
    }
    if (!made) result.skipped.push_back("qcommuting: no q-commuting diagonal family moved by every g");
  }

  if (strategies.count("determinant")) {
    std::size_t made = 0;
    if (n > 8) {
      result.skipped.push_back("determinant: group order above 8");
    } else {
      for (const auto& c : central) {
        const int deg = degree_of(c) * static_cast<int>(n * (n - 1) / 2);
        if (deg > D) continue;
        std::vector<AlgElement> a;
        for (std::size_t j = 0; j < n; ++j) a.push_back(c.pow(static_cast<int>(j)));
        DeterminantResult det = gen_determinant(G, a);
        if (det.value.is_zero()) continue;
        accept(std::move(det.pair));
        ++made;
      }
      if (!made) result.skipped.push_back("determinant: no Vandermonde family with nonzero value within degree " +
                                          std::to_string(D));
    }
  }

  for (const auto& p : user_pairs) {
    if (!p.verified) raise(ErrorCode::BadPair, "user pair was not verified");
    accept(p);
  }
  result.table = two_sided_closure(result.table);
  result.table.set_provenance(Provenance::Constructive);
  return result;
}

SemisimpleResult semisimple_from_table(const IdealTable& radical) {
  for (int d = 0; d <= radical.truncation(); ++d)
    if (!radical[d].is_zero())
      return {false, radical.truncation(), AlgElement::homogeneous(radical.algebra(), d, radical[d].basis().front())};
  return {true, radical.truncation(), std::nullopt};
}

SemisimpleResult is_semisimple_upto(const FiniteGroup& G, int D, int threads) {
  return semisimple_from_table(oracle_radical(G, D, threads));
}

}  // namespace pertinax
