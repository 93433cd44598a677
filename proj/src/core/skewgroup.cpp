#include "pertinax/skewgroup.hpp"

#include <atomic>
#include <exception>
#include <thread>

#include "pertinax/error.hpp"

namespace pertinax {

SkewElement SkewElement::pure(const FiniteGroup& G, const AlgElement& r, std::size_t g) {
  SkewElement s(&G);
  s.add(g, r);
  return s;
}

SkewElement SkewElement::integral(const FiniteGroup& G) {
  SkewElement s(&G);
  const Scalar w(Rational(1, static_cast<long long>(G.order())));
  for (std::size_t g = 0; g < G.order(); ++g) s.add(g, AlgElement::constant(G.algebra(), w));
  return s;
}

AlgElement SkewElement::component(std::size_t g) const {
  auto it = c_.find(g);
  return it == c_.end() ? AlgElement(G_ ? &G_->algebra() : nullptr) : it->second;
}

void SkewElement::add(std::size_t g, const AlgElement& r) {
  if (r.is_zero()) return;
  auto [it, inserted] = c_.emplace(g, r);
  if (inserted) return;
  it->second += r;
  if (it->second.is_zero()) c_.erase(it);
}

SkewElement& SkewElement::operator+=(const SkewElement& b) {
  if (!G_) G_ = b.G_;
  for (const auto& [g, r] : b.c_) add(g, r);
  return *this;
}

SkewElement skew_mul(const SkewElement& u, const SkewElement& v) {
  const FiniteGroup* G = u.G_ ? u.G_ : v.G_;
  SkewElement out(G);
  for (const auto& [g, r] : u.c_)
    for (const auto& [h, s] : v.c_) out.add(G->compose(g, h), r * G->act(g, s));
  return out;
}

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Oracle: return "oracle";
    case Provenance::Constructive: return "constructive";
    case Provenance::User: return "user";
    case Provenance::Derived: return "derived";
  }
  return "derived";
}

IdealTable::IdealTable(const GradedAlgebra& R, int D, Provenance tag) : R_(&R), tag_(tag) {
  if (D > R.truncation())
    raise(ErrorCode::TruncationExceeded, "table degree " + std::to_string(D) + " exceeds the algebra truncation " +
                                             std::to_string(R.truncation()));
  for (int d = 0; d <= D; ++d) comps_.emplace_back(R.dim(d));
}

std::vector<long> IdealTable::dims() const {
  std::vector<long> out;
  for (const auto& s : comps_) out.push_back(static_cast<long>(s.rank()));
  return out;
}

bool IdealTable::is_zero() const {
  for (const auto& s : comps_)
    if (!s.is_zero()) return false;
  return true;
}

bool IdealTable::contains(const AlgElement& f) const {
  for (int d = 0; d <= std::min(f.degree(), truncation()); ++d)
    if (!comps_[d].contains(f.component(d))) return false;
  return true;
}

bool IdealTable::contains(const IdealTable& other) const {
  const int D = std::min(truncation(), other.truncation());
  for (int d = 0; d <= D; ++d)
    if (!comps_[d].contains(other.comps_[d])) return false;
  return true;
}

IdealTable IdealTable::intersect(const IdealTable& other) const {
  const int D = std::min(truncation(), other.truncation());
  IdealTable out(*R_, D, Provenance::Derived);
  for (int d = 0; d <= D; ++d) out.comps_[d] = comps_[d].intersect(other.comps_[d]);
  return out;
}

IdealTable IdealTable::sum(const IdealTable& other) const {
  const int D = std::min(truncation(), other.truncation());
  IdealTable out(*R_, D, tag_);
  for (int d = 0; d <= D; ++d) {
    out.comps_[d] = comps_[d];
    out.comps_[d].insert_all(other.comps_[d]);
  }
  return out;
}

std::vector<std::vector<std::string>> IdealTable::dump() const {
  std::vector<std::vector<std::string>> out;
  for (int d = 0; d <= truncation(); ++d) {
    std::vector<std::string> rows;
    for (const auto& row : comps_[d].basis()) rows.push_back(R_->render(d, row));
    out.push_back(std::move(rows));
  }
  return out;
}

namespace {

struct Letter {
  int degree;
  SparseVec coords;
};

std::vector<Letter> letters_of(const GradedAlgebra& R) {
  std::vector<Letter> out;
  const Alphabet& a = R.alphabet();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.degree(i) > R.truncation()) continue;
    AlgElement x = AlgElement::generator(R, i);
    out.push_back({a.degree(i), x.component(a.degree(i))});
  }
  return out;
}

enum class Side { Left, Right, Both };

IdealTable closure(const IdealTable& seeds, Side side) {
  const GradedAlgebra& R = seeds.algebra();
  const auto letters = letters_of(R);
  IdealTable out = seeds;
  for (int d = 1; d <= out.truncation(); ++d) {
    Subspace& target = out[d];
    for (const Letter& x : letters) {
      if (x.degree > d || x.coords.is_zero()) continue;
      const int j = d - x.degree;
      for (const auto& row : out[j].basis()) {
        if (target.is_full()) break;
        if (side != Side::Right) target.insert(R.multiply(x.degree, x.coords, j, row));
        if (side != Side::Left) target.insert(R.multiply(j, row, x.degree, x.coords));
      }
    }
  }
  return out;
}

}  // namespace

IdealTable two_sided_closure(const IdealTable& seeds) { return closure(seeds, Side::Both); }
IdealTable right_closure(const IdealTable& seeds) { return closure(seeds, Side::Right); }
IdealTable left_closure(const IdealTable& seeds) { return closure(seeds, Side::Left); }

IdealTable ideal_generated_by(const GradedAlgebra& R, const std::vector<AlgElement>& gens, int D) {
  IdealTable seeds(R, D);
  for (const auto& g : gens)
    for (int d = 0; d <= std::min(D, g.degree()); ++d) seeds[d].insert(g.component(d));
  return two_sided_closure(seeds);
}

std::vector<AlgElement> minimal_generators(const IdealTable& ideal) {
  const GradedAlgebra& R = ideal.algebra();
  const auto letters = letters_of(R);
  std::vector<AlgElement> gens;
  for (int d = 0; d <= ideal.truncation(); ++d) {
    if (ideal[d].is_zero()) continue;
    Subspace decomposable(R.dim(d));
    for (const Letter& x : letters) {
      if (x.degree > d || x.coords.is_zero()) continue;
      const int j = d - x.degree;
      for (const auto& row : ideal[j].basis()) {
        decomposable.insert(R.multiply(x.degree, x.coords, j, row));
        decomposable.insert(R.multiply(j, row, x.degree, x.coords));
      }
    }
    for (const auto& row : ideal[d].basis())
      if (decomposable.insert(row)) gens.push_back(AlgElement::homogeneous(R, d, row));
  }
  return gens;
}

IdealTable span_product(const IdealTable& I, const IdealTable& J) {
  const GradedAlgebra& R = I.algebra();
  const int D = std::min(I.truncation(), J.truncation());
  IdealTable out(R, D);
  for (int d = 0; d <= D; ++d) {
    Subspace& target = out[d];
    for (int i = 0; i <= d && !target.is_full(); ++i) {
      const auto left = I[i].basis();
      const auto right = J[d - i].basis();
      for (const auto& a : left) {
        for (const auto& b : right) {
          target.insert(R.multiply(i, a, d - i, b));
          if (target.is_full()) break;
        }
        if (target.is_full()) break;
      }
    }
  }
  return out;
}

namespace {

Subspace oracle_degree(const FiniteGroup& G, int d, const Subspace* seed) {
  const GradedAlgebra& R = G.algebra();
  const std::size_t n = R.dim(d);
  Subspace out = seed ? *seed : Subspace(n);
  if (n == 0 || out.is_full()) return out;
  Eliminator elim;
  for (int i = 0; i <= d; ++i) {
    const int j = d - i;
    const std::size_t di = R.dim(i);
    const std::size_t dj = R.dim(j);
    if (di == 0 || dj == 0) continue;
    const auto& block = R.product_block(i, j);
    std::vector<const std::vector<SparseVec>*> actions;
    for (std::size_t g = 1; g < G.order(); ++g) actions.push_back(&G.degree_action(g, j));
    for (std::size_t p = 0; p < di; ++p) {
      for (std::size_t q = 0; q < dj; ++q) {
        std::vector<SparseVec::Entry> key;
        for (std::size_t g = 1; g < G.order(); ++g) {
          Accumulator acc(n);
          for (const auto& [r, c] : (*actions[g - 1])[q]) acc.add_scaled(block[p * dj + r], c);
          const Index offset = static_cast<Index>((g - 1) * n);
          for (const auto& [k, c] : acc.take()) key.emplace_back(offset + k, c);
        }
        auto payload = elim.insert(SparseVec::from_entries(std::move(key)), block[p * dj + q]);
        if (payload && !payload->is_zero()) {
          out.insert(*payload);
          if (out.is_full()) return out;
        }
      }
    }
  }
  return out;
}

}  // namespace

IdealTable oracle_radical(const FiniteGroup& G, int D, int threads) {
  const GradedAlgebra& R = G.algebra();
  IdealTable table(R, D, Provenance::Oracle);
  if (threads <= 1 || D < 2) {
    const auto letters = letters_of(R);
    for (int d = 0; d <= D; ++d) {
      // R_1 r_{d-1} + r_{d-1} R_1 is already known to lie in r_d
      Subspace seed(R.dim(d));
      for (const Letter& x : letters) {
        if (x.degree > d || x.coords.is_zero()) continue;
        const int j = d - x.degree;
        for (const auto& row : table[j].basis()) {
          if (seed.is_full()) break;
          seed.insert(R.multiply(x.degree, x.coords, j, row));
          seed.insert(R.multiply(j, row, x.degree, x.coords));
        }
      }
      table[d] = oracle_degree(G, d, &seed);
    }
    return table;
  }
  std::atomic<int> next{D};
  std::exception_ptr failure;
  std::mutex mu;
  auto worker = [&] {
    for (;;) {
      const int d = next.fetch_sub(1);
      if (d < 0) return;
      try {
        Subspace s = oracle_degree(G, d, nullptr);
        std::lock_guard<std::mutex> lock(mu);
        table[d] = std::move(s);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return table;
}

IdealTable intersect_with_invariants(const IdealTable& table, const std::vector<Subspace>& invariants) {
  const int D = std::min(table.truncation(), static_cast<int>(invariants.size()) - 1);
  IdealTable out(table.algebra(), D, Provenance::Derived);
  for (int d = 0; d <= D; ++d) out[d] = table[d].intersect(invariants[d]);
  return out;
}

}  // namespace pertinax
