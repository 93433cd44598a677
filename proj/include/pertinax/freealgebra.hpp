#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pertinax/scalar.hpp"

namespace pertinax {

// Ordered generator names with positive integer degrees.
class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names, std::vector<int> degrees = {});

  /// x, y, z for n <= 3, otherwise x1..xn.
  static Alphabet standard(int n);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  int degree(std::size_t i) const { return degrees_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  std::optional<std::size_t> find(const std::string& name) const;
  bool all_degree_one() const;
  int max_degree() const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_ && a.degrees_ == b.degrees_;
  }

private:
  std::vector<std::string> names_;
  std::vector<int> degrees_;
};

// A monomial in the free algebra: a sequence of generator indices, one byte
// each, together with its weighted degree.
class Word {
public:
  Word() = default;
  Word(const Alphabet& alphabet, std::string letters);
  static Word letter(const Alphabet& alphabet, std::size_t i);

  const std::string& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  int degree() const noexcept { return degree_; }
  bool empty() const noexcept { return letters_.empty(); }
  std::size_t at(std::size_t pos) const { return static_cast<unsigned char>(letters_[pos]); }

  Word operator*(const Word& other) const;
  Word sub(const Alphabet& alphabet, std::size_t pos, std::size_t len) const;

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

private:
  std::string letters_;
  int degree_ = 0;
};

/// Degree first, then left-lexicographic on generator indices.
int word_cmp_deglex(const Word& u, const Word& v);

struct DeglexLess {
  bool operator()(const Word& u, const Word& v) const { return word_cmp_deglex(u, v) < 0; }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept { return std::hash<std::string>{}(w.letters()); }
};

// Noncommutative polynomial: word -> nonzero coefficient, iterated in
// increasing deglex order.
class FreePoly {
public:
  using Terms = std::map<Word, Scalar, DeglexLess>;

  FreePoly() = default;
  static FreePoly constant(const Scalar& c);
  static FreePoly monomial(const Word& w, const Scalar& c = Scalar(1));
  static FreePoly generator(const Alphabet& alphabet, std::size_t i);

  bool is_zero() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  void add_term(const Word& w, const Scalar& c);
  Scalar coeff(const Word& w) const;

  /// Largest word in deglex order; the polynomial must be nonzero.
  const Word& leading_word() const { return terms_.rbegin()->first; }
  const Scalar& leading_coeff() const { return terms_.rbegin()->second; }

  bool is_homogeneous() const;
  int max_degree() const;
  int min_degree() const;
  FreePoly component(int degree) const;

  FreePoly scaled(const Scalar& c) const;
  FreePoly operator-() const { return scaled(Scalar(-1)); }
  FreePoly& operator+=(const FreePoly& g);
  FreePoly& operator-=(const FreePoly& g);
  friend FreePoly operator+(FreePoly f, const FreePoly& g) { return f += g; }
  friend FreePoly operator-(FreePoly f, const FreePoly& g) { return f -= g; }
  friend FreePoly operator*(const FreePoly& f, const FreePoly& g);
  FreePoly pow(int e) const;

  friend bool operator==(const FreePoly& a, const FreePoly& b) { return a.terms_ == b.terms_; }

  /// Text form such as "-2*x*y + (z3)*y*x", terms in increasing deglex order.
  std::string render(const Alphabet& alphabet) const;

private:
  Terms terms_;
};

/// Free-algebra product.
inline FreePoly fp_mul(const FreePoly& f, const FreePoly& g) { return f * g; }

std::string render_word(const Alphabet& alphabet, const Word& w);

}  // namespace pertinax
