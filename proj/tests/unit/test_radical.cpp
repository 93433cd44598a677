#include <doctest.h>

#include <numeric>

#include "pertinax/error.hpp"
#include "pertinax/galgebra.hpp"
#include "pertinax/radical.hpp"

using namespace pertinax;

namespace {

Scalar w() { return CyclotomicField::get(3).primitive_root(3); }

AlgebraPtr skew(int n, int D) {
  std::vector<std::vector<Scalar>> Q(n, std::vector<Scalar>(n, Scalar(-1)));
  for (int i = 0; i < n; ++i) Q[i][i] = Scalar(1);
  return make_quantum_affine(Q, D);
}

Matrix swap2() { return {{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}}; }
Matrix diag(std::vector<Scalar> d) {
  Matrix m = identity_matrix(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
  return m;
}
Matrix cycle3() {
  return {{Scalar(0), Scalar(1), Scalar(0)}, {Scalar(0), Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0), Scalar(0)}};
}

struct Fixture {
  AlgebraPtr R;
  GroupPtr G;
  AlgElement x, y, z;
  AlgElement one() const { return AlgElement::constant(*R, Scalar(1)); }
};

Fixture make(AlgebraPtr R, const Matrix& m) {
  Fixture f{R, FiniteGroup::generate(*R, {m}), AlgElement::generator(*R, 0), AlgElement::generator(*R, 1), {}};
  if (R->alphabet().size() > 2) f.z = AlgElement::generator(*R, 2);
  return f;
}

}  // namespace

TEST_SUITE("radical") {

TEST_CASE("known pairs verify") {
  const Fixture P = make(make_commutative(2, 6), swap2());
  const PertinentPair p = verify_pertinent(*P.G, {P.x, P.y}, {P.x, -P.y});
  CHECK(p.verified);
  CHECK(p.value() == P.x * P.x - P.y * P.y);
  const Fixture S = make(skew(2, 6), swap2());
  CHECK(verify_pertinent(*S.G, {S.x, S.y}, {S.x, S.y}).value() == S.x * S.x + S.y * S.y);
  const Fixture N = make(make_commutative(2, 6), diag({Scalar(-1), Scalar(-1)}));
  CHECK(verify_pertinent(*N.G, {N.one(), N.x}, {N.x, N.one()}).value() == N.x.scaled(Scalar(2)));
  const Fixture O = make(skew(3, 6), diag({Scalar(1), w(), w() * w()}));
  CHECK_NOTHROW(verify_pertinent(*O.G, {O.y * O.y, O.y, O.one()}, {O.one(), O.y, O.y * O.y}));
  CHECK_NOTHROW(verify_pertinent(*O.G, {O.y * O.z, -O.z, O.y}, {O.one(), O.y, O.z}));
  const Fixture D = make(make_downup(Scalar(1), Scalar(-1), 6), swap2());
  CHECK(verify_pertinent(*D.G, {D.one(), -D.x}, {D.y, D.one()}).value() == D.y - D.x);
}

TEST_CASE("violations name g and the residue") {
  const Fixture P = make(make_commutative(2, 4), swap2());
  const auto v = find_violation(*P.G, {P.x}, {P.y});
  REQUIRE(v.has_value());
  CHECK(v->element == 1);
  CHECK(v->residue == P.x * P.x);
  try {
    verify_pertinent(*P.G, {P.x}, {P.y});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPertinent);
    CHECK(std::string(e.what()).find("x^2") != std::string::npos);
  }
  CHECK_THROWS_AS(verify_pertinent(*P.G, {P.x}, {}), Error);
}

TEST_CASE("moves on pairs") {
  const Fixture P = make(make_commutative(2, 6), swap2());
  const PertinentPair p = verify_pertinent(*P.G, {P.x, P.y}, {P.x, -P.y});
  const PertinentPair q = verify_pertinent(*P.G, {P.x, P.one()}, {P.one(), -P.y});
  const PertinentPair pq = pair_concat(p, q);
  CHECK(pq.size() == 4);
  CHECK(pq.value() == p.value() + q.value());
  CHECK_FALSE(find_violation(*P.G, pq.left, pq.right));
  const PertinentPair zero = verify_pertinent(*P.G, {AlgElement(P.R.get())}, {AlgElement(P.R.get())});
  CHECK(pair_concat(p, zero).value() == p.value());

  const PertinentPair t = pair_translate(*P.G, 1, p);
  CHECK(t.left == std::vector<AlgElement>{P.y, P.x});
  CHECK(t.right == std::vector<AlgElement>{P.y, -P.x});
  CHECK_FALSE(find_violation(*P.G, t.left, t.right));
  CHECK(pair_translate(*P.G, 0, p).left == p.left);
  const PertinentPair tc = pair_concat(pair_translate(*P.G, 1, p), pair_translate(*P.G, 1, q));
  const PertinentPair ct = pair_translate(*P.G, 1, pair_concat(p, q));
  CHECK(tc.left == ct.left);
  CHECK(tc.right == ct.right);

  const PertinentPair s = pair_scale(P.x, P.y, p);
  CHECK(s.left == std::vector<AlgElement>{P.x * P.x, P.x * P.y});
  CHECK(s.right == std::vector<AlgElement>{P.x * P.y, -(P.y * P.y)});
  CHECK_FALSE(find_violation(*P.G, s.left, s.right));
}

TEST_CASE("simplification and transfer") {
  const Fixture P = make(make_commutative(2, 6), swap2());
  const PertinentPair same_right = verify_pertinent(*P.G, {P.x, P.x, P.one()}, {P.x, P.x, -P.y * P.x.scaled(Scalar(2))});
  const PertinentPair a = pair_simplify(same_right);
  CHECK(a.size() == 2);
  CHECK(a.value() == same_right.value());
  const PertinentPair same_left = verify_pertinent(*P.G, {P.x, P.x, P.y}, {P.x.scaled(Scalar(2)), -P.x, -P.y});
  const PertinentPair b = pair_simplify(same_left);
  CHECK(b.size() == 2);
  CHECK(b.value() == same_left.value());
  const PertinentPair p = verify_pertinent(*P.G, {P.x, P.y}, {P.x, -P.y});
  const PertinentPair c = pair_transfer(*P.G, p, {P.one(), P.one()}, p.right);
  CHECK(c.left == p.left);
  CHECK(c.right == p.right);
}

TEST_CASE("translate product") {
  const Fixture N = make(make_commutative(2, 4), diag({Scalar(-1), Scalar(-1)}));
  CHECK(gen_translate_product(*N.G, {N.x}).value() == N.x.scaled(Scalar(-2)));
  const Fixture P = make(make_commutative(2, 4), swap2());
  const PertinentPair t = gen_translate_product(*P.G, {P.x});
  CHECK(t.value() == P.y - P.x);
  CHECK(t.verified);
  CHECK(gen_translate_product(*P.G, {P.x + P.y}).value().is_zero());
  const Fixture S = make(skew(2, 4), swap2());
  CHECK_THROWS_AS(gen_translate_product(*S.G, {S.x}), Error);
}

TEST_CASE("eigenvector products land in the radical") {
  const Fixture P = make(make_commutative(2, 6), swap2());
  const PertinentPair p = gen_eigen_product(*P.G, 1, {P.x - P.y, P.x - P.y});
  const IdealTable r = oracle_radical(*P.G, 6);
  CHECK(r.contains(p.value()));
  CHECK(r.contains((P.x - P.y) * (P.x - P.y)));

  const Fixture C = make(skew(3, 6), cycle3());
  const Scalar z = w();
  const AlgElement y1 = C.x + C.y.scaled(z) + C.z.scaled(z * z);
  const AlgElement y2 = C.x + C.y.scaled(z * z) + C.z.scaled(z);
  const IdealTable rc = oracle_radical(*C.G, 6);
  for (const auto& yj : {y1, y2}) {
    const PertinentPair e = gen_eigen_product(*C.G, 1, {yj, yj, yj});
    CHECK(e.value() == yj.pow(3).scaled(Scalar(3)));
    CHECK(rc.contains(yj.pow(3)));
  }
  CHECK_THROWS_AS(gen_eigen_product(*C.G, 1, {C.x, C.x, C.x}), Error);
}

TEST_CASE("eigen powers for longer cycles") {
  for (int n : {5, 6}) {
    const AlgebraPtr R = skew(n, n);
    Matrix m(n, std::vector<Scalar>(n, Scalar(0)));
    for (int i = 0; i < n; ++i) m[i][(i + 1) % n] = Scalar(1);
    const GroupPtr G = FiniteGroup::generate(*R, {m});
    const Scalar z = CyclotomicField::get(n).primitive_root(n);
    for (int j = 1; j < n; ++j) {
      if (std::gcd(j, n) != 1) continue;
      AlgElement y;
      for (int i = 0; i < n; ++i) y += AlgElement::generator(*R, i).scaled(z.pow(i * j));
      const PertinentPair e = gen_eigen_product(*G, 1, std::vector<AlgElement>(n, y));
      CHECK(e.verified);
      CHECK_FALSE(e.value().is_zero());
      CHECK(e.value() == y.pow(n).scaled(Scalar(n)));
    }
  }
}

TEST_CASE("diagonal degree-one actions put R_n in the radical") {
  const Fixture O = make(skew(3, 6), diag({w(), w(), w()}));
  const IdealTable r = oracle_radical(*O.G, 6);
  CHECK(r.dims()[3] == static_cast<long>(O.R->dim(3)));
  CHECK(gen_eigen_product(*O.G, 1, {O.x, O.y, O.z}).verified);
}

TEST_CASE("q-commuting product") {
  const Fixture S = make(skew(3, 6), diag({Scalar(1), Scalar(-1), Scalar(-1)}));
  const IdealTable r = oracle_radical(*S.G, 6);
  const PertinentPair p = gen_qcommuting_product(*S.G, {S.y});
  CHECK(p.verified);
  CHECK(r.contains(p.value()));
  const Fixture P = make(make_commutative(2, 4), swap2());
  CHECK(gen_qcommuting_product(*P.G, {P.x + P.y}, {{Scalar(1)}}).value().is_zero());

  const Fixture K = make(make_commutative(2, 5), diag({Scalar(-1), Scalar(-1)}));
  CHECK(gen_qcommuting_product(*K.G, {K.x}).value() == gen_translate_product(*K.G, {K.x}).value());
}

TEST_CASE("determinant") {
  const Fixture N = make(make_commutative(2, 4), diag({Scalar(-1), Scalar(-1)}));
  CHECK(gen_determinant(*N.G, {N.x, N.y}).value.is_zero());
  CHECK(gen_determinant(*N.G, {N.x, N.x}).value.is_zero());
  const DeterminantResult d = gen_determinant(*N.G, {N.one(), N.x});
  CHECK(d.value == N.x.scaled(Scalar(-2)));
  CHECK(oracle_radical(*N.G, 4).contains(d.value));
  CHECK_FALSE(find_violation(*N.G, d.pair.left, d.pair.right));
}

TEST_CASE("constructive tables") {
  const Fixture P = make(make_commutative(2, 6), swap2());
  const ConstructiveResult t = radical_constructive(*P.G, 6, {"translate_product"});
  CHECK(t.table[1].contains((P.x - P.y).component(1)));
  CHECK(t.table.provenance() == Provenance::Constructive);
  CHECK(radical_constructive(*P.G, 6, {}).table.is_zero());

  const Fixture C = make(skew(3, 6), cycle3());
  const ConstructiveResult e = radical_constructive(*C.G, 6, {"eigen_product"}, {}, {}, 3);
  const Scalar z = w();
  CHECK(e.table.contains((C.x + C.y.scaled(z) + C.z.scaled(z * z)).pow(3)));
  CHECK(e.table.contains((C.x + C.y.scaled(z * z) + C.z.scaled(z)).pow(3)));
  CHECK(oracle_radical(*C.G, 6).contains(e.table));
  CHECK_THROWS_AS(radical_constructive(*C.G, 6, {"no_such_strategy"}), Error);
}

TEST_CASE("semisimplicity") {
  const AlgebraPtr S = skew(3, 10);
  const GroupPtr G = FiniteGroup::generate(*S, {diag({Scalar(1), w(), w() * w()})});
  const AlgElement y = AlgElement::generator(*S, 1), z = AlgElement::generator(*S, 2);
  const AlgebraPtr Q = quotient_by_ideal(*S, {y * y, z * z, y * z}, 10);
  const SemisimpleResult q = is_semisimple_upto(*G->induced_on(*Q), 10);
  CHECK(q.semisimple);
  CHECK(q.checked_upto == 10);
  CHECK(oracle_radical(*G->induced_on(*Q), 10).is_zero());

  const Fixture P = make(make_commutative(2, 6), swap2());
  const SemisimpleResult p = is_semisimple_upto(*P.G, 6);
  CHECK_FALSE(p.semisimple);
  REQUIRE(p.witness.has_value());
  CHECK((*p.witness == P.x - P.y || *p.witness == P.y - P.x));

  const AlgebraPtr K = make_commutative(1, 5);
  const SemisimpleResult k = is_semisimple_upto(*FiniteGroup::generate(*K, {diag({Scalar(-1)})}), 5);
  CHECK_FALSE(k.semisimple);
  CHECK(*k.witness == AlgElement::generator(*K, 0));
}

}
