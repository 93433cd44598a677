#include <doctest.h>

#include "pertinax/error.hpp"
#include "pertinax/linalg.hpp"
#include "pertinax/scalar.hpp"

using namespace pertinax;

TEST_SUITE("scalars") {

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(-4, 6) == Rational(2, -3));
  CHECK((Rational(3, 7) * Rational(7, 3)).is_one());
  CHECK(Rational(5, 10).str() == "1/2");
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational(0).inv(), Error);
}

TEST_CASE("rational promotes past 64 bits") {
  Rational big(1);
  for (int i = 0; i < 40; ++i) big *= Rational(1000003);
  Rational back = big;
  for (int i = 0; i < 40; ++i) back /= Rational(1000003);
  CHECK(back.is_one());
  CHECK(Rational::from_decimal("123456789012345678901234567890").str() == "123456789012345678901234567890");
  CHECK(Rational(std::numeric_limits<long long>::min()) - Rational(1) < Rational(std::numeric_limits<long long>::min()));
}

TEST_CASE("roots of unity") {
  const auto& Q4 = CyclotomicField::get(4);
  const Scalar i = Q4.primitive_root(4);
  CHECK(i * i == Scalar(-1));
  const Scalar w = CyclotomicField::get(3).primitive_root(3);
  CHECK((w * w + w + Scalar(1)).is_zero());
  CHECK(w * w == -w - Scalar(1));
  CHECK(w.str() == "(z3)");
  CHECK(CyclotomicField::get(3).primitive_root(1).is_one());
  CHECK(CyclotomicField::get(6).primitive_root(2) == Scalar(-1));
  CHECK(CyclotomicField::get(12).primitive_root(4).pow(2) == Scalar(-1));
  CHECK_THROWS_AS(CyclotomicField::get(2).primitive_root(3), Error);
}

TEST_CASE("field inverse and powers") {
  const auto& F = CyclotomicField::get(5);
  const Scalar z = F.primitive_root(5);
  const Scalar a = z + Scalar(2) * z.pow(3) - Scalar(Rational(1, 3));
  CHECK((a * a.inv()).is_one());
  CHECK(z.pow(5).is_one());
  CHECK(z.pow(-1) * z == Scalar(1));
  Scalar sum;
  for (int k = 0; k < 5; ++k) sum += z.pow(k);
  CHECK(sum.is_zero());
}

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(3) == 2);
  CHECK(euler_phi(5) == 4);
  CHECK(euler_phi(6) == 2);
  CHECK(euler_phi(12) == 4);
}

TEST_CASE("echelon forms and kernels") {
  Subspace s(3);
  CHECK(s.insert(SparseVec::from_entries({{0, Scalar(2)}, {1, Scalar(4)}})));
  CHECK(s.insert(SparseVec::from_entries({{1, Scalar(1)}, {2, Scalar(1)}})));
  CHECK_FALSE(s.insert(SparseVec::from_entries({{0, Scalar(1)}, {1, Scalar(3)}, {2, Scalar(1)}})));
  CHECK(s.rank() == 2);
  CHECK(s.contains(SparseVec::from_entries({{0, Scalar(1)}, {2, Scalar(-2)}})));
  // columns of [[1,1],[1,1]] have kernel spanned by (1,-1)
  const auto col = SparseVec::from_entries({{0, Scalar(1)}, {1, Scalar(1)}});
  const Subspace k = kernel_of_columns(2, {col, col});
  REQUIRE(k.rank() == 1);
  CHECK(k.contains(SparseVec::from_entries({{0, Scalar(1)}, {1, Scalar(-1)}})));
  const Subspace t = Subspace::span(3, {SparseVec::unit(0), SparseVec::unit(1)})
                         .intersect(Subspace::span(3, {SparseVec::unit(1), SparseVec::unit(2)}));
  CHECK(t.rank() == 1);
  CHECK(t.contains(SparseVec::unit(1)));
}

}
