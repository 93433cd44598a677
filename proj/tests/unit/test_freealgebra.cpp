#include <doctest.h>

#include "pertinax/freealgebra.hpp"

using namespace pertinax;

TEST_SUITE("freealgebra") {

TEST_CASE("deglex order") {
  const Alphabet a = Alphabet::standard(2);
  const Word x = Word::letter(a, 0), y = Word::letter(a, 1);
  CHECK(word_cmp_deglex(x * x, x * y) < 0);
  CHECK(word_cmp_deglex(y, x * x) < 0);
  CHECK(word_cmp_deglex(x * y, x * y) == 0);
  CHECK(word_cmp_deglex(Word(), x) < 0);
}

TEST_CASE("words") {
  const Alphabet a = Alphabet::standard(3);
  CHECK(a.names() == std::vector<std::string>{"x", "y", "z"});
  const Word w = Word::letter(a, 0) * Word::letter(a, 2) * Word::letter(a, 1);
  CHECK(w.length() == 3);
  CHECK(w.degree() == 3);
  CHECK(render_word(a, w.sub(a, 1, 2)) == "z*y");
  const Alphabet weighted({"u", "v"}, {1, 2});
  CHECK(Word::letter(weighted, 1).degree() == 2);
  CHECK(weighted.max_degree() == 2);
  CHECK_FALSE(weighted.all_degree_one());
}

TEST_CASE("noncommutative products") {
  const Alphabet a = Alphabet::standard(2);
  const FreePoly x = FreePoly::generator(a, 0), y = FreePoly::generator(a, 1);
  const FreePoly p = (x + y) * (x - y);
  CHECK(p.render(a) == "x^2 - x*y + y*x - y^2");
  CHECK(p * FreePoly::constant(Scalar(1)) == p);
  CHECK((FreePoly() * p).is_zero());
  CHECK((x * y - y * x).size() == 2);
  CHECK((x + y).pow(2) == x * x + x * y + y * x + y * y);
  CHECK(x.pow(0) == FreePoly::constant(Scalar(1)));
}

TEST_CASE("components and degrees") {
  const Alphabet a = Alphabet::standard(2);
  const FreePoly x = FreePoly::generator(a, 0), y = FreePoly::generator(a, 1);
  const FreePoly f = FreePoly::constant(Scalar(3)) + x * y + y;
  CHECK(f.max_degree() == 2);
  CHECK(f.min_degree() == 0);
  CHECK_FALSE(f.is_homogeneous());
  CHECK(f.component(1) == y);
  CHECK(f.coeff(Word()) == Scalar(3));
  CHECK(f.leading_word() == (x * y).leading_word());
  CHECK(f.scaled(Scalar(0)).is_zero());
}

}
