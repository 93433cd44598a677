#include <doctest.h>

#include "oracles.hpp"
#include "pertinax/error.hpp"
#include "pertinax/invariantring.hpp"

using namespace pertinax;

namespace {

Scalar w() { return CyclotomicField::get(3).primitive_root(3); }

AlgebraPtr skew3(int D) {
  std::vector<std::vector<Scalar>> Q(3, std::vector<Scalar>(3, Scalar(-1)));
  for (int i = 0; i < 3; ++i) Q[i][i] = Scalar(1);
  return make_quantum_affine(Q, D);
}

Matrix swap2() { return {{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}}; }
Matrix diag(std::vector<Scalar> d) {
  Matrix m = identity_matrix(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
  return m;
}

}  // namespace

TEST_SUITE("action") {

TEST_CASE("group orders of the fixture groups") {
  CHECK(FiniteGroup::generate(*make_commutative(2, 4), {swap2()})->order() == 2);
  CHECK(FiniteGroup::generate(*skew3(4), {diag({Scalar(1), Scalar(-1), Scalar(-1)})})->order() == 2);
  CHECK(FiniteGroup::generate(*skew3(4), {diag({Scalar(1), w(), w() * w()})})->order() == 3);
  const Matrix cycle = {{Scalar(0), Scalar(1), Scalar(0)}, {Scalar(0), Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0), Scalar(0)}};
  const Matrix t = {{Scalar(0), Scalar(1), Scalar(0)}, {Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(0), Scalar(1)}};
  const GroupPtr S3 = FiniteGroup::generate(*make_commutative(3, 3), {cycle, t});
  CHECK(S3->order() == 6);
  CHECK(S3->matrix(0) == identity_matrix(3));
  for (std::size_t g = 0; g < 6; ++g) CHECK(S3->compose(g, S3->inverse(g)) == 0);
}

TEST_CASE("bad groups are rejected") {
  const AlgebraPtr R = make_commutative(2, 4);
  CHECK_THROWS_AS(FiniteGroup::generate(*R, {identity_matrix(2)}), Error);
  CHECK_THROWS_AS(FiniteGroup::generate(*R, {{{Scalar(1), Scalar(1)}, {Scalar(0), Scalar(1)}}}, 16), Error);
  const Scalar q = w();
  const AlgebraPtr S = make_quantum_affine({{Scalar(1), q}, {q.inv(), Scalar(1)}}, 4);
  try {
    FiniteGroup::generate(*S, {swap2()});
    FAIL("swap accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAnAutomorphism);
  }
}

TEST_CASE("acting on elements") {
  const AlgebraPtr R = make_commutative(2, 4);
  const GroupPtr G = FiniteGroup::generate(*R, {swap2()});
  const AlgElement x = AlgElement::generator(*R, 0), y = AlgElement::generator(*R, 1);
  CHECK(G->act(1, x * y) == x * y);
  CHECK(G->act(1, x) == y);
  CHECK(G->reynolds(x) == (x + y).scaled(Scalar(Rational(1, 2))));
  CHECK(G->reynolds(x * y) == x * y);
  const GroupPtr N = FiniteGroup::generate(*R, {diag({Scalar(-1), Scalar(-1)})});
  CHECK(N->act(1, x * x) == x * x);
  CHECK(N->act(1, x) == -x);
  CHECK(N->reynolds(x * y) == x * y);
  const AlgebraPtr K = make_quantum_affine({{Scalar(1), Scalar(-1)}, {Scalar(-1), Scalar(1)}}, 3);
  const GroupPtr H = FiniteGroup::generate(*K, {swap2()});
  CHECK(H->act(1, AlgElement::generator(*K, 0)) == AlgElement::generator(*K, 1));
}

TEST_CASE("action is multiplicative") {
  const AlgebraPtr S = skew3(5);
  const GroupPtr G = FiniteGroup::generate(*S, {diag({Scalar(1), w(), w() * w()})});
  const AlgElement x = AlgElement::generator(*S, 0), y = AlgElement::generator(*S, 1), z = AlgElement::generator(*S, 2);
  const AlgElement a = x + y.scaled(Scalar(2)) - z, b = x * y + z * z;
  for (std::size_t g = 0; g < G->order(); ++g) CHECK(G->act(g, a * b) == G->act(g, a) * G->act(g, b));
}

TEST_CASE("Molien average equals invariant dimension") {
  struct Case {
    AlgebraPtr R;
    Matrix m;
  };
  const std::vector<Case> cases = {
      {make_commutative(2, 10), swap2()},
      {make_quantum_affine({{Scalar(1), Scalar(-1)}, {Scalar(-1), Scalar(1)}}, 10), swap2()},
      {make_commutative(2, 10), diag({Scalar(-1), Scalar(-1)})},
      {skew3(10), diag({Scalar(1), Scalar(-1), Scalar(-1)})},
      {skew3(10), diag({Scalar(1), w(), w() * w()})},
  };
  for (const auto& c : cases) {
    const GroupPtr G = FiniteGroup::generate(*c.R, {c.m});
    const InvariantRing A = invariants_basis(*G, 10);
    for (int d = 0; d <= 10; ++d) {
      const Scalar avg = pertinax::testing::trace_average(*G, d);
      CHECK(avg == Scalar(Rational(static_cast<long long>(A.components[d].rank()))));
      CHECK(molien_dimension(*G, d) == avg);
    }
  }
}

TEST_CASE("induced action on a quotient") {
  const AlgebraPtr S = skew3(6);
  const GroupPtr G = FiniteGroup::generate(*S, {diag({Scalar(1), Scalar(-1), Scalar(-1)})});
  const AlgebraPtr Q = quotient_by_ideal(*S, {AlgElement::generator(*S, 1), AlgElement::generator(*S, 2)}, 6);
  const GroupPtr GQ = G->induced_on(*Q);
  const AlgElement xq = AlgElement::generator(*Q, 0);
  for (std::size_t g = 0; g < GQ->order(); ++g) CHECK(GQ->act(g, xq) == xq);
  const GroupPtr H = FiniteGroup::generate(*S, {diag({Scalar(1), w(), w() * w()})});
  const AlgElement y = AlgElement::generator(*S, 1), z = AlgElement::generator(*S, 2);
  const AlgebraPtr Q2 = quotient_by_ideal(*S, {y * y, z * z, y * z}, 6);
  CHECK(H->induced_on(*Q2)->order() == 3);
}

}
