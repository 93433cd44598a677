#include "pertinax/gbasis.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "pertinax/error.hpp"
#include "pertinax/linalg.hpp"

namespace pertinax {

struct TruncatedGB::Memo {
  std::mutex mu;
  std::vector<std::unordered_map<std::string, FreePoly>> by_degree;
};

namespace {

struct Overlap {
  std::size_t left;
  std::size_t right;
  std::size_t shared;  // letters shared by the suffix of left and the prefix of right
};

}  // namespace

void TruncatedGB::add_rule(Word lead, FreePoly tail) {
  lead_index_.emplace(lead.letters(), rules_.size());
  if (std::find(lead_lengths_.begin(), lead_lengths_.end(), lead.length()) == lead_lengths_.end()) {
    lead_lengths_.push_back(lead.length());
    std::sort(lead_lengths_.begin(), lead_lengths_.end());
  }
  rules_.push_back({std::move(lead), std::move(tail)});
}

const TruncatedGB::Rule* TruncatedGB::prefix_rule(const std::string& letters) const {
  for (std::size_t len : lead_lengths_) {
    if (len > letters.size()) break;
    auto it = lead_index_.find(letters.substr(0, len));
    if (it != lead_index_.end()) return &rules_[it->second];
  }
  return nullptr;
}

bool TruncatedGB::is_normal(const Word& w) const {
  const std::string& s = w.letters();
  for (std::size_t start = 0; start < s.size(); ++start) {
    for (std::size_t len : lead_lengths_) {
      if (start + len > s.size()) break;
      if (lead_index_.count(s.substr(start, len))) return false;
    }
  }
  return true;
}

FreePoly TruncatedGB::nf_word(const Word& w) const {
  if (w.empty()) return FreePoly::monomial(w);
  auto& table = memo_->by_degree;
  {
    std::lock_guard<std::mutex> lock(memo_->mu);
    if (static_cast<std::size_t>(w.degree()) < table.size()) {
      auto it = table[w.degree()].find(w.letters());
      if (it != table[w.degree()].end()) return it->second;
    }
  }
  const Word head = w.sub(alphabet_, 0, 1);
  const Word rest = w.sub(alphabet_, 1, w.length() - 1);
  FreePoly result;
  const FreePoly reduced_rest = nf_word(rest);
  for (const auto& [u, c] : reduced_rest.terms()) {
    Word xu = head * u;
    const Rule* rule = prefix_rule(xu.letters());
    if (!rule) {
      result.add_term(xu, c);
      continue;
    }
    const Word v = xu.sub(alphabet_, rule->lead.length(), xu.length() - rule->lead.length());
    for (const auto& [t, tc] : rule->tail.terms()) result += nf_word(t * v).scaled(c * tc);
  }
  {
    std::lock_guard<std::mutex> lock(memo_->mu);
    if (table.size() <= static_cast<std::size_t>(w.degree())) table.resize(w.degree() + 1);
    table[w.degree()].emplace(w.letters(), result);
  }
  return result;
}

FreePoly TruncatedGB::normal_form(const Word& w) const {
  if (w.degree() > D_)
    raise(ErrorCode::TruncationExceeded, "degree " + std::to_string(w.degree()) +
                                             " is above the truncation degree " + std::to_string(D_));
  return nf_word(w);
}

FreePoly TruncatedGB::normal_form(const FreePoly& f) const {
  if (f.max_degree() > D_)
    raise(ErrorCode::TruncationExceeded, "degree " + std::to_string(f.max_degree()) +
                                             " is above the truncation degree " + std::to_string(D_));
  FreePoly out;
  for (const auto& [w, c] : f.terms()) out += nf_word(w).scaled(c);
  return out;
}

std::vector<FreePoly> TruncatedGB::relations() const {
  std::vector<FreePoly> out;
  out.reserve(rules_.size());
  for (const auto& r : rules_) out.push_back(FreePoly::monomial(r.lead) - r.tail);
  return out;
}

const std::vector<Word>& TruncatedGB::normal_words(int d) const {
  if (d < 0 || d > D_)
    raise(ErrorCode::TruncationExceeded, "no basis stored for degree " + std::to_string(d));
  return normal_words_[d];
}

void TruncatedGB::enumerate_normal_words() {
  normal_words_.assign(D_ + 1, {});
  normal_words_[0].push_back(Word());
  for (int d = 1; d <= D_; ++d) {
    auto& out = normal_words_[d];
    for (std::size_t x = 0; x < alphabet_.size(); ++x) {
      const int dx = alphabet_.degree(x);
      if (dx > d) continue;
      const Word letter = Word::letter(alphabet_, x);
      for (const Word& w : normal_words_[d - dx]) {
        Word cand = w * letter;
        const std::string& s = cand.letters();
        bool ok = true;
        for (std::size_t len : lead_lengths_) {
          if (len > s.size()) break;
          if (lead_index_.count(s.substr(s.size() - len))) {
            ok = false;
            break;
          }
        }
        if (ok) out.push_back(std::move(cand));
      }
    }
    std::sort(out.begin(), out.end(), DeglexLess());
  }
}

TruncatedGB TruncatedGB::complete(const Alphabet& alphabet, const std::vector<FreePoly>& relations,
                                  int D, bool allow_linear) {
  if (D < 0) raise(ErrorCode::BadInput, "truncation degree must be nonnegative");
  TruncatedGB gb;
  gb.alphabet_ = alphabet;
  gb.D_ = D;
  gb.memo_ = std::make_shared<Memo>();
  gb.memo_->by_degree.resize(D + 1);

  std::map<int, std::vector<const FreePoly*>> inputs;
  for (const auto& r : relations) {
    if (r.is_zero()) continue;
    if (!r.is_homogeneous())
      raise(ErrorCode::NotGraded, "relation " + r.render(alphabet) + " is not homogeneous");
    const int d = r.max_degree();
    if (d == 0)
      raise(ErrorCode::DegenerateQuotient, "a nonzero constant relation collapses the algebra to zero");
    if (d == 1 && !allow_linear)
      raise(ErrorCode::RedundantGenerator,
            "degree-one relation " + r.render(alphabet) + "; eliminate the generator first");
    if (d <= D) inputs[d].push_back(&r);
  }

  std::map<int, std::vector<Overlap>> pending;
  auto queue_overlaps = [&](std::size_t fresh) {
    auto push = [&](std::size_t i, std::size_t j) {
      const Word& a = gb.rules_[i].lead;
      const Word& b = gb.rules_[j].lead;
      const std::size_t maxk = std::min(a.length(), b.length()) - 1;
      for (std::size_t k = 1; k <= maxk; ++k) {
        if (a.letters().compare(a.length() - k, k, b.letters(), 0, k) != 0) continue;
        const int deg = a.degree() + b.degree() - b.sub(alphabet, 0, k).degree();
        if (deg <= D) pending[deg].push_back({i, j, k});
      }
    };
    for (std::size_t i = 0; i <= fresh; ++i) {
      push(i, fresh);
      if (i != fresh) push(fresh, i);
    }
  };

  for (int d = 0; d <= D; ++d) {
    std::vector<FreePoly> cands;
    if (auto it = inputs.find(d); it != inputs.end())
      for (const FreePoly* r : it->second) cands.push_back(gb.normal_form(*r));
    if (auto it = pending.find(d); it != pending.end()) {
      for (const Overlap& o : it->second) {
        const Rule& l = gb.rules_[o.left];
        const Rule& r = gb.rules_[o.right];
        const Word v = r.lead.sub(alphabet, o.shared, r.lead.length() - o.shared);
        const Word u = l.lead.sub(alphabet, 0, l.lead.length() - o.shared);
        FreePoly s = l.tail * FreePoly::monomial(v) - FreePoly::monomial(u) * r.tail;
        cands.push_back(gb.normal_form(s));
      }
      pending.erase(it);
    }
    std::vector<Word> words;
    for (const auto& c : cands)
      for (const auto& [w, s] : c.terms()) words.push_back(w);
    if (words.empty()) continue;
    std::sort(words.begin(), words.end(), [](const Word& a, const Word& b) { return DeglexLess()(b, a); });
    words.erase(std::unique(words.begin(), words.end()), words.end());
    std::unordered_map<std::string, Index> column;
    for (Index i = 0; i < words.size(); ++i) column.emplace(words[i].letters(), i);
    Subspace span(words.size());
    for (const auto& c : cands) {
      if (c.is_zero()) continue;
      std::vector<SparseVec::Entry> entries;
      for (const auto& [w, s] : c.terms()) entries.emplace_back(column.at(w.letters()), s);
      span.insert(SparseVec::from_entries(std::move(entries)));
    }
    if (span.is_zero()) continue;
    if (d == 0) raise(ErrorCode::DegenerateQuotient, "the ideal contains a nonzero constant");
    if (d == 1 && !allow_linear)
      raise(ErrorCode::RedundantGenerator, "the relations force a degree-one relation");
    for (const auto& row : span.basis()) {
      FreePoly tail;
      for (const auto& [col, s] : row) {
        if (col == row.lead()) continue;
        tail.add_term(words[col], -s);
      }
      gb.add_rule(words[row.lead()], std::move(tail));
      queue_overlaps(gb.rules_.size() - 1);
    }
    // normal forms cached for this degree were taken before its rules existed
    gb.memo_->by_degree[d].clear();
  }
  gb.enumerate_normal_words();
  return gb;
}

std::string TruncatedGB::dump() const {
  std::ostringstream out;
  for (const auto& r : rules_) out << (FreePoly::monomial(r.lead) - r.tail).render(alphabet_) << "\n";
  return out.str();
}

}  // namespace pertinax
