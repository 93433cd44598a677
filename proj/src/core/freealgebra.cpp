#include "pertinax/freealgebra.hpp"

#include <algorithm>
#include <set>

#include "pertinax/error.hpp"

namespace pertinax {

Alphabet::Alphabet(std::vector<std::string> names, std::vector<int> degrees)
    : names_(std::move(names)), degrees_(std::move(degrees)) {
  if (degrees_.empty()) degrees_.assign(names_.size(), 1);
  if (degrees_.size() != names_.size())
    raise(ErrorCode::BadInput, "alphabet needs one degree per generator");
  if (names_.size() > 255) raise(ErrorCode::BadInput, "at most 255 generators");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) raise(ErrorCode::BadInput, "empty generator name");
    if (!seen.insert(names_[i]).second)
      raise(ErrorCode::BadInput, "duplicate generator name '" + names_[i] + "'");
    if (degrees_[i] < 1)
      raise(ErrorCode::BadInput, "generator '" + names_[i] + "' must have positive degree");
  }
}

Alphabet Alphabet::standard(int n) {
  if (n < 1) raise(ErrorCode::BadInput, "need at least one generator");
  std::vector<std::string> names;
  if (n <= 3) {
    const char* base[] = {"x", "y", "z"};
    for (int i = 0; i < n; ++i) names.emplace_back(base[i]);
  } else {
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  }
  return Alphabet(std::move(names));
}

std::optional<std::size_t> Alphabet::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool Alphabet::all_degree_one() const {
  return std::all_of(degrees_.begin(), degrees_.end(), [](int d) { return d == 1; });
}

int Alphabet::max_degree() const {
  return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

Word::Word(const Alphabet& alphabet, std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_) {
    auto idx = static_cast<unsigned char>(c);
    if (idx >= alphabet.size()) raise(ErrorCode::BadInput, "letter outside the alphabet");
    degree_ += alphabet.degree(idx);
  }
}

Word Word::letter(const Alphabet& alphabet, std::size_t i) {
  return Word(alphabet, std::string(1, static_cast<char>(i)));
}

Word Word::operator*(const Word& other) const {
  Word w;
  w.letters_ = letters_ + other.letters_;
  w.degree_ = degree_ + other.degree_;
  return w;
}

Word Word::sub(const Alphabet& alphabet, std::size_t pos, std::size_t len) const {
  return Word(alphabet, letters_.substr(pos, len));
}

int word_cmp_deglex(const Word& u, const Word& v) {
  if (u.degree() != v.degree()) return u.degree() < v.degree() ? -1 : 1;
  int c = u.letters().compare(v.letters());
  return (c > 0) - (c < 0);
}

FreePoly FreePoly::constant(const Scalar& c) { return monomial(Word(), c); }

FreePoly FreePoly::monomial(const Word& w, const Scalar& c) {
  FreePoly f;
  if (!c.is_zero()) f.terms_.emplace(w, c);
  return f;
}

FreePoly FreePoly::generator(const Alphabet& alphabet, std::size_t i) {
  return monomial(Word::letter(alphabet, i));
}

void FreePoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Scalar FreePoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

bool FreePoly::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

int FreePoly::max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

int FreePoly::min_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

FreePoly FreePoly::component(int degree) const {
  FreePoly f;
  for (const auto& [w, c] : terms_)
    if (w.degree() == degree) f.terms_.emplace_hint(f.terms_.end(), w, c);
  return f;
}

FreePoly FreePoly::scaled(const Scalar& c) const {
  FreePoly f;
  if (c.is_zero()) return f;
  for (const auto& [w, s] : terms_) f.terms_.emplace_hint(f.terms_.end(), w, s * c);
  return f;
}

FreePoly& FreePoly::operator+=(const FreePoly& g) {
  for (const auto& [w, c] : g.terms_) add_term(w, c);
  return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& g) {
  for (const auto& [w, c] : g.terms_) add_term(w, -c);
  return *this;
}

FreePoly operator*(const FreePoly& f, const FreePoly& g) {
  FreePoly out;
  for (const auto& [u, a] : f.terms_)
    for (const auto& [v, b] : g.terms_) out.add_term(u * v, a * b);
  return out;
}

FreePoly FreePoly::pow(int e) const {
  if (e < 0) raise(ErrorCode::BadInput, "negative power of a polynomial");
  FreePoly out = constant(Scalar(1));
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

std::string render_word(const Alphabet& alphabet, const Word& w) {
  std::string out;
  std::size_t i = 0;
  while (i < w.length()) {
    std::size_t j = i;
    while (j < w.length() && w.at(j) == w.at(i)) ++j;
    if (!out.empty()) out += "*";
    out += alphabet.name(w.at(i));
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string FreePoly::render(const Alphabet& alphabet) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    const std::string word = render_word(alphabet, w);
    std::string coeff;
    bool negative = false;
    if (c.is_rational()) {
      Rational r = c.rational();
      negative = r.sign() < 0;
      Rational mag = r.abs();
      if (word.empty()) coeff = mag.str();
      else if (!mag.is_one()) coeff = mag.str() + "*";
    } else {
      coeff = c.str();
      if (!word.empty()) coeff += "*";
    }
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    out += coeff + word;
  }
  return out;
}

}  // namespace pertinax
