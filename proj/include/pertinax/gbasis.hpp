#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "pertinax/freealgebra.hpp"

namespace pertinax {

// Homogeneous two-sided Groebner basis of an ideal in the free algebra,
// complete through a fixed degree. Built once, then read-only: normal_form is
// safe to call from several threads.
class TruncatedGB {
public:
  struct Rule {
    Word lead;
    FreePoly tail;  // lead == tail modulo the ideal; tail is normal
  };

  TruncatedGB() = default;

  /// Completes the ideal generated by `relations` through degree D.
  /// Degree-one relations are accepted only when allow_linear is set.
  static TruncatedGB complete(const Alphabet& alphabet, const std::vector<FreePoly>& relations,
                              int D, bool allow_linear = false);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  int truncation_degree() const noexcept { return D_; }
  int complete_upto() const noexcept { return D_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  /// Rules as monic polynomials lead - tail.
  std::vector<FreePoly> relations() const;

  bool is_normal(const Word& w) const;
  FreePoly normal_form(const FreePoly& f) const;
  FreePoly normal_form(const Word& w) const;

  /// Irreducible words of degree d, ascending in deglex.
  const std::vector<Word>& normal_words(int d) const;

  /// One relation per line.
  std::string dump() const;

private:
  struct Memo;

  void add_rule(Word lead, FreePoly tail);
  const Rule* prefix_rule(const std::string& letters) const;
  FreePoly nf_word(const Word& w) const;
  void enumerate_normal_words();

  Alphabet alphabet_;
  int D_ = 0;
  std::vector<Rule> rules_;
  std::unordered_map<std::string, std::size_t> lead_index_;
  std::vector<std::size_t> lead_lengths_;
  std::vector<std::vector<Word>> normal_words_;
  std::shared_ptr<Memo> memo_;
};

}  // namespace pertinax
