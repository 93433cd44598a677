#include "oracles.hpp"

#include <gmpxx.h>

#include <functional>
#include <random>

#include "pertinax/error.hpp"
#include "pertinax/radical.hpp"

namespace pertinax::testing {

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

// rank of a dense rational matrix
long dense_rank(std::vector<std::vector<mpq_class>> rows, std::size_t cols) {
  long rank = 0;
  std::size_t r0 = 0;
  for (std::size_t c = 0; c < cols && r0 < rows.size(); ++c) {
    std::size_t p = r0;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r0]);
    for (std::size_t r = r0 + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const mpq_class f = rows[r][c] / rows[r0][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[r0][k];
    }
    ++r0;
    ++rank;
  }
  return rank;
}

std::size_t word_index(const std::vector<std::size_t>& letters, std::size_t n) {
  std::size_t idx = 0;
  for (auto l : letters) idx = idx * n + l;
  return idx;
}

std::vector<std::vector<std::size_t>> all_words(std::size_t n, int len) {
  std::vector<std::vector<std::size_t>> out{{}};
  for (int i = 0; i < len; ++i) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& w : out)
      for (std::size_t l = 0; l < n; ++l) {
        next.push_back(w);
        next.back().push_back(l);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<long> free_quotient_dims(const Alphabet& alphabet, const std::vector<FreePoly>& relations, int D) {
  const std::size_t n = alphabet.size();
  std::vector<long> out;
  for (int d = 0; d <= D; ++d) {
    std::size_t cols = 1;
    for (int i = 0; i < d; ++i) cols *= n;
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& r : relations) {
      const int k = r.max_degree();
      if (k > d) continue;
      for (int a = 0; a <= d - k; ++a)
        for (const auto& u : all_words(n, a))
          for (const auto& v : all_words(n, d - k - a)) {
            std::vector<mpq_class> row(cols);
            for (const auto& [w, c] : r.terms()) {
              std::vector<std::size_t> letters = u;
              for (std::size_t p = 0; p < w.length(); ++p) letters.push_back(w.at(p));
              letters.insert(letters.end(), v.begin(), v.end());
              row[word_index(letters, n)] += c.rational().to_mpq();
            }
            rows.push_back(std::move(row));
          }
    }
    out.push_back(static_cast<long>(cols) - dense_rank(std::move(rows), cols));
  }
  return out;
}

FreePoly q_straighten(const Alphabet& alphabet, const Word& w, const std::vector<std::vector<Scalar>>& q) {
  std::vector<std::size_t> letters;
  for (std::size_t p = 0; p < w.length(); ++p) letters.push_back(w.at(p));
  Scalar c(1);
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (std::size_t p = 0; p + 1 < letters.size(); ++p)
      if (letters[p] > letters[p + 1]) {
        c = c * q[letters[p + 1]][letters[p]];
        std::swap(letters[p], letters[p + 1]);
        swapped = true;
      }
  }
  FreePoly out = FreePoly::constant(c);
  for (auto l : letters) out = out * FreePoly::generator(alphabet, l);
  return out;
}

IdealTable skew_radical(const FiniteGroup& G, int D) {
  const GradedAlgebra& R = G.algebra();
  const std::size_t N = G.order();
  const SkewElement e = SkewElement::integral(G);
  IdealTable out(R, D, Provenance::Derived);
  for (int d = 0; d <= D; ++d) {
    const std::size_t nd = R.dim(d);
    // identity block last, so echelon rows leading there live in R
    auto block = [&](std::size_t k) { return static_cast<Index>((k == 0 ? N - 1 : k - 1) * nd); };
    Subspace span(N * nd);
    for (int i = 0; i <= d; ++i)
      for (std::size_t p = 0; p < R.dim(i); ++p)
        for (std::size_t q = 0; q < R.dim(d - i); ++q)
          for (std::size_t h = 0; h < N; ++h) {
            const SkewElement a = SkewElement::pure(G, AlgElement::homogeneous(R, i, SparseVec::unit(p)), 0);
            const SkewElement b = SkewElement::pure(G, AlgElement::homogeneous(R, d - i, SparseVec::unit(q)), h);
            const SkewElement w = skew_mul(skew_mul(a, e), b);
            std::vector<SparseVec::Entry> entries;
            for (const auto& [k, r] : w.components())
              for (const auto& [idx, c] : r.component(d)) entries.emplace_back(block(k) + idx, c);
            span.insert(SparseVec::from_entries(std::move(entries)));
          }
    const Index start = block(0);
    for (const auto& row : span.basis()) {
      if (row.lead() < start) continue;
      std::vector<SparseVec::Entry> entries;
      for (const auto& [idx, c] : row) entries.emplace_back(idx - start, c);
      out[d].insert(SparseVec::from_entries(std::move(entries)));
    }
  }
  return out;
}

Scalar trace_average(const FiniteGroup& G, int d) {
  Scalar sum;
  for (std::size_t g = 0; g < G.order(); ++g) {
    const auto& images = G.degree_action(g, d);
    for (std::size_t p = 0; p < images.size(); ++p) sum += images[p].get(static_cast<Index>(p));
  }
  return sum * Scalar(Rational(1, static_cast<long long>(G.order())));
}

bool is_two_sided_closed(const IdealTable& t) {
  const GradedAlgebra& R = t.algebra();
  for (int d = 0; d < t.truncation(); ++d)
    for (const auto& row : t[d].basis())
      for (std::size_t i = 0; i < R.alphabet().size(); ++i) {
        const SparseVec x = AlgElement::generator(R, i).component(1);
        if (!t[d + 1].contains(R.multiply(1, x, d, row)) || !t[d + 1].contains(R.multiply(d, row, 1, x)))
          return false;
      }
  return true;
}

bool is_group_stable(const FiniteGroup& G, const IdealTable& t) {
  for (std::size_t g = 0; g < G.order(); ++g)
    for (int d = 0; d <= t.truncation(); ++d)
      for (const auto& row : t[d].basis())
        if (!t[d].contains(G.act(g, d, row))) return false;
  return true;
}

namespace {

struct Instance {
  AlgebraPtr R;
  GroupPtr G;
  int D;
  std::string label;
};

Scalar z3() { return CyclotomicField::get(3).primitive_root(3); }

Matrix diagonal(const std::vector<Scalar>& d) {
  Matrix m = identity_matrix(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
  return m;
}

Matrix permutation(const std::vector<std::size_t>& images) {
  Matrix m(images.size(), std::vector<Scalar>(images.size()));
  for (std::size_t i = 0; i < images.size(); ++i) m[i][images[i]] = Scalar(1);
  return m;
}

Instance random_instance(std::mt19937_64& rng) {
  for (;;) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const int family = static_cast<int>(rng() % 3);  // commutative, q = -1, q = z3
    const int D = 4 + static_cast<int>(rng() % 3);
    AlgebraPtr R;
    std::string label;
    if (family == 0) {
      R = make_commutative(n, D);
      label = "k[x" + std::to_string(n) + "]";
    } else {
      const Scalar q = family == 1 ? Scalar(-1) : z3();
      std::vector<std::vector<Scalar>> Q(n, std::vector<Scalar>(n, Scalar(1)));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          Q[i][j] = q;
          Q[j][i] = q.inv();
        }
      R = make_quantum_affine(Q, D);
      label = family == 1 ? "k_-1" : "k_z3";
    }
    std::vector<Matrix> gens;
    const bool permutations = family != 2 && rng() % 2 == 0;
    if (permutations) {
      std::vector<std::size_t> swap01(n), cycle(n);
      for (int i = 0; i < n; ++i) swap01[i] = cycle[i] = i;
      std::swap(swap01[0], swap01[1]);
      for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
      switch (rng() % 3) {
        case 0: gens.push_back(permutation(swap01)); break;
        case 1: gens.push_back(permutation(cycle)); break;
        default:
          gens.push_back(permutation(cycle));
          gens.push_back(permutation(swap01));
      }
      if (rng() % 4 == 0) {
        Matrix m = gens.front();
        for (auto& row : m)
          for (auto& c : row) c = -c;
        gens.front() = m;
      }
      label += " perm";
    } else {
      const std::vector<Scalar> roots = rng() % 2 ? std::vector<Scalar>{Scalar(1), Scalar(-1)}
                                                  : std::vector<Scalar>{Scalar(1), z3(), z3() * z3()};
      const int count = 1 + static_cast<int>(rng() % 2);
      for (int k = 0; k < count; ++k) {
        std::vector<Scalar> d;
        for (int i = 0; i < n; ++i) d.push_back(roots[rng() % roots.size()]);
        gens.push_back(diagonal(d));
      }
      label += " diag";
    }
    try {
      GroupPtr G = FiniteGroup::generate(*R, gens, 6);
      return {R, G, D, label + " |G|=" + std::to_string(G->order()) + " D=" + std::to_string(D)};
    } catch (const Error&) {
      // trivial or too large: draw again
    }
  }
}

AlgElement random_element(const GradedAlgebra& R, int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (;;) {
    AlgElement out(&R);
    for (std::size_t p = 0; p < R.dim(d); ++p)
      out += AlgElement::homogeneous(R, d, SparseVec::unit(static_cast<Index>(p))).scaled(Scalar(coeff(rng)));
    if (!out.is_zero()) return out;
  }
}

AlgElement random_combination(const std::vector<AlgElement>& basis, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (;;) {
    AlgElement out;
    for (const auto& b : basis) out += b.scaled(Scalar(coeff(rng)));
    if (!out.is_zero()) return out;
  }
}

}  // namespace

SoundnessReport run_soundness(int instances, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SoundnessReport report;
  for (int t = 0; t < instances; ++t) {
    const Instance in = random_instance(rng);
    const FiniteGroup& G = *in.G;
    const GradedAlgebra& R = *in.R;
    const std::size_t N = G.order();
    const IdealTable oracle = oracle_radical(G, in.D);
    ++report.instances;

    std::vector<PertinentPair> produced;
    auto check_value = [&](const std::string& what, const AlgElement& v) {
      ++report.values_checked;
      if (!oracle.contains(v)) report.failures.push_back(in.label + ": " + what + " value " + v.render());
    };
    auto check_pair = [&](const std::string& what, const PertinentPair& p) {
      ++report.pairs_checked;
      if (find_violation(G, p.left, p.right)) {
        report.failures.push_back(in.label + ": " + what + " pair is not pertinent");
        return;
      }
      check_value(what, p.value());
      produced.push_back(p);
    };
    auto attempt = [&](const std::string& what, const std::function<void()>& f) {
      try {
        f();
      } catch (const Error& e) {
        const auto c = e.code();
        if (c != ErrorCode::TruncationExceeded && c != ErrorCode::NotCentral && c != ErrorCode::NotEigen &&
            c != ErrorCode::NotQCommuting && c != ErrorCode::BadInput && c != ErrorCode::BadPair)
          report.failures.push_back(in.label + ": " + what + " threw " + e.what());
      }
    };

    attempt("constructive", [&] {
      const ConstructiveResult c = radical_constructive(G, in.D, known_strategies(), {}, {}, 3);
      if (!oracle.contains(c.table)) report.failures.push_back(in.label + ": constructive table exceeds the oracle");
      for (const auto& p : c.pairs) check_pair(p.origin, p);
    });

    std::vector<AlgElement> central;
    for (int d = 1; d <= 2 && d < in.D; ++d)
      for (auto& c : center_basis(R, d)) central.push_back(std::move(c));
    if (!central.empty() && static_cast<int>(N - 1) <= in.D)
      attempt("translate_product", [&] {
        std::vector<AlgElement> a;
        int deg = 0;
        for (std::size_t k = 0; k + 1 < N; ++k) {
          a.push_back(random_combination(central, rng));
          deg += a.back().degree();
        }
        if (deg <= in.D) check_pair("translate_product", gen_translate_product(G, a));
      });
    if (!central.empty() && static_cast<int>(N) <= in.D && N <= 4)
      attempt("determinant", [&] {
        std::vector<AlgElement> a;
        int deg = 0;
        for (std::size_t k = 0; k < N; ++k) {
          a.push_back(random_combination(central, rng));
          deg += a.back().degree();
        }
        if (deg > in.D) return;
        const DeterminantResult r = gen_determinant(G, a);
        check_value("determinant", r.value);
        check_pair("determinant cofactors", r.pair);
      });
    if ((N == 2 || N == 3) && static_cast<int>(N) <= in.D)
      attempt("eigen_product", [&] {
        const Scalar root = N == 2 ? Scalar(-1) : z3();
        for (std::size_t sigma = 1; sigma < N; ++sigma) {
          if (G.element_order(sigma) != N) continue;
          std::vector<SparseVec> cols;
          const auto& images = G.degree_action(sigma, 1);
          for (std::size_t p = 0; p < R.dim(1); ++p)
            cols.push_back(images[p] - SparseVec::unit(static_cast<Index>(p), root));
          const Subspace kernel = kernel_of_columns(R.dim(1), cols);
          std::vector<AlgElement> space;
          for (const auto& row : kernel.basis()) space.push_back(AlgElement::homogeneous(R, 1, row));
          if (space.empty()) continue;
          std::vector<AlgElement> a;
          for (std::size_t k = 0; k < N; ++k) a.push_back(random_combination(space, rng));
          check_pair("eigen_product", gen_eigen_product(G, sigma, a));
          return;
        }
      });
    attempt("qcommuting", [&] {
      std::vector<AlgElement> a;
      for (std::size_t i = 0; i < R.alphabet().size() && a.size() + 1 < N; ++i)
        a.push_back(AlgElement::generator(R, i));
      if (!a.empty() && a.size() + 1 == N) check_pair("qcommuting", gen_qcommuting_product(G, a));
    });

    // closure moves on whatever was produced
    if (!produced.empty()) {
      const PertinentPair base = produced[rng() % produced.size()];
      attempt("translate move", [&] { check_pair("translate move", pair_translate(G, rng() % N, base)); });
      attempt("scale move", [&] {
        const AlgElement a = random_element(R, static_cast<int>(rng() % 2), rng);
        const AlgElement b = random_element(R, static_cast<int>(rng() % 2), rng);
        if (base.value().degree() + a.degree() + b.degree() <= in.D)
          check_pair("scale move", pair_simplify(pair_scale(a, b, base)));
      });
      attempt("concat move", [&] {
        const PertinentPair other = produced[rng() % produced.size()];
        check_pair("concat move", pair_concat(base, other));
      });
    }
    // random short pairs: any that happen to be pertinent must land in the oracle
    for (int k = 0; k < 4; ++k)
      attempt("random pair", [&] {
        std::vector<AlgElement> left, right;
        const std::size_t len = 1 + rng() % 2;
        for (std::size_t i = 0; i < len; ++i) {
          left.push_back(random_element(R, static_cast<int>(rng() % 2), rng));
          right.push_back(random_element(R, 1, rng));
        }
        if (!find_violation(G, left, right)) check_value("random pair", verify_pertinent(G, left, right).value());
      });
  }
  return report;
}

}  // namespace pertinax::testing
