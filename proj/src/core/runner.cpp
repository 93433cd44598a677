#include "pertinax/runner.hpp"

#include <chrono>
#include <filesystem>
#include <map>
#include <random>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "pertinax/dimension.hpp"
#include "pertinax/error.hpp"
#include "pertinax/invariantring.hpp"
#include "pertinax/radical.hpp"
#include "pertinax/version.hpp"

namespace pertinax {

using json = nlohmann::ordered_json;

namespace {

constexpr int kDefaultDegree = 12;

std::optional<int> root_order_of(const std::string& ident) {
  if (ident.size() < 2 || ident[0] != 'z' || ident[1] == '0' || ident.size() > 7) return std::nullopt;
  for (std::size_t i = 1; i < ident.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(ident[i]))) return std::nullopt;
  return std::stoi(ident.substr(1));
}

json poly_list(const std::vector<AlgElement>& elems) {
  json out = json::array();
  for (const auto& e : elems) out.push_back({{"poly", e.render()}, {"degree", e.degree()}});
  return out;
}

json table_rows(const IdealTable& t) {
  json out = json::array();
  for (const auto& rows : t.dump()) out.push_back(rows);
  return out;
}

json scalar_json(const Scalar& s) {
  if (s.is_rational() && s.rational().is_integer()) return s.rational().str().size() < 18 ? json(std::stoll(s.rational().str())) : json(s.str());
  return s.str();
}

}  // namespace

struct Session::Impl {
  Script script;
  std::string source = "<script>";
  int conductor = 1;
  bool loaded = false;
  long maxdeg = 0;
  int threads = 1;
  std::uint64_t seed = 0;
  bool timing = true;
  json report = json::object();
  RunStatus status = RunStatus::Ok;

  std::map<std::pair<std::string, int>, AlgebraPtr> algebras;
  std::map<std::tuple<std::string, std::string, int>, GroupPtr> groups;

  FreePoly poly(const Expr& e, const Alphabet& a, int depth = 0) const;
  Scalar scalar(const Expr& e) const;
  AlgElement element(const Expr& e, const GradedAlgebra& R) const {
    return AlgElement::from_poly(R, poly(e, R.alphabet()));
  }
  AlgebraPtr algebra(const std::string& name, int D);
  GroupPtr group(const std::string& name, const std::string& alg, int D);
  int degree_for(const TaskDecl& t) const;
  void run_task(const TaskDecl& t, json& out);
};

FreePoly Session::Impl::poly(const Expr& e, const Alphabet& a, int depth) const {
  if (depth > 256) raise(ErrorCode::UsageError, e.pos.str() + ": element definitions nest too deeply");
  switch (e.kind) {
    case Expr::Kind::Number: return FreePoly::constant(Scalar(Rational(mpq_class(e.text))));
    case Expr::Kind::Ident: {
      if (auto i = a.find(e.text)) return FreePoly::generator(a, *i);
      if (const auto* d = script.find<ElementDecl>(e.text)) return poly(d->value, a, depth + 1);
      if (auto k = root_order_of(e.text)) {
        if (conductor % *k != 0)
          raise(ErrorCode::ConductorTooSmall, e.pos.str() + ": " + e.text + " needs a conductor divisible by " +
                                                  std::to_string(*k));
        return FreePoly::constant(CyclotomicField::get(conductor).primitive_root(*k));
      }
      raise(ErrorCode::UndeclaredIdentifier, e.pos.str() + ": '" + e.text + "' is not a generator of this algebra");
    }
    case Expr::Kind::Add: return poly(e.args[0], a, depth) + poly(e.args[1], a, depth);
    case Expr::Kind::Sub: return poly(e.args[0], a, depth) - poly(e.args[1], a, depth);
    case Expr::Kind::Mul: return poly(e.args[0], a, depth) * poly(e.args[1], a, depth);
    case Expr::Kind::Neg: return -poly(e.args[0], a, depth);
    case Expr::Kind::Pow: return poly(e.args[0], a, depth).pow(e.exponent);
    case Expr::Kind::Div: {
      const FreePoly den = poly(e.args[1], a, depth);
      if (den.is_zero()) raise(ErrorCode::DivisionByZero, e.pos.str() + ": division by zero");
      if (den.max_degree() > 0) raise(ErrorCode::UsageError, e.pos.str() + ": can only divide by a scalar");
      return poly(e.args[0], a, depth).scaled(den.coeff(Word()).inv());
    }
  }
  return {};
}

Scalar Session::Impl::scalar(const Expr& e) const {
  const FreePoly f = poly(e, Alphabet());
  if (f.max_degree() > 0) raise(ErrorCode::UsageError, e.pos.str() + ": expected a scalar");
  return f.coeff(Word());
}

AlgebraPtr Session::Impl::algebra(const std::string& name, int D) {
  auto key = std::make_pair(name, D);
  if (auto it = algebras.find(key); it != algebras.end()) return it->second;
  const AlgebraDecl* d = script.find<AlgebraDecl>(name);
  if (!d) raise(ErrorCode::UndeclaredIdentifier, "no algebra named '" + name + "'");
  AlgebraPtr R;
  if (d->kind == "commutative") {
    R = make_commutative(d->n, D);
  } else if (d->kind == "quantum_affine") {
    std::vector<std::vector<Scalar>> q;
    for (const auto& row : d->q) {
      q.emplace_back();
      for (const auto& e : row) q.back().push_back(scalar(e));
    }
    R = make_quantum_affine(q, D);
  } else if (d->kind == "downup") {
    R = make_downup(scalar(d->args[0]), scalar(d->args[1]), D);
  } else if (d->kind == "presentation") {
    Alphabet a(d->gens, d->degrees);
    std::vector<FreePoly> rels;
    for (const auto& e : d->rels) rels.push_back(poly(e, a));
    R = make_presentation(a, rels, D);
  } else {
    AlgebraPtr base = algebra(d->base, D);
    std::vector<AlgElement> gens;
    for (const auto& e : d->rels) gens.push_back(element(e, *base));
    R = quotient_by_ideal(*base, gens, D);
  }
  algebras.emplace(key, R);
  return R;
}

GroupPtr Session::Impl::group(const std::string& name, const std::string& alg, int D) {
  auto key = std::make_tuple(name, alg, D);
  if (auto it = groups.find(key); it != groups.end()) return it->second;
  const GroupDecl* d = script.find<GroupDecl>(name);
  if (!d) raise(ErrorCode::UndeclaredIdentifier, "no group named '" + name + "'");
  std::vector<Matrix> mats;
  for (const auto& [label, m] : d->gens) {
    Matrix mat;
    for (const auto& row : m) {
      mat.emplace_back();
      for (const auto& e : row) mat.back().push_back(scalar(e));
    }
    mats.push_back(std::move(mat));
  }
  GroupPtr G = FiniteGroup::generate(*algebra(alg, D), mats, static_cast<std::size_t>(d->max_order.value_or(64)));
  groups.emplace(key, G);
  return G;
}

namespace {

int int_option(const TaskDecl& t, const std::string& key, int fallback) {
  const OptionValue* v = t.option(key);
  return v ? std::stoi(v->items.front().text) : fallback;
}

std::string ident_option(const TaskDecl& t, const std::string& key, const std::string& fallback) {
  const OptionValue* v = t.option(key);
  return v ? v->items.front().text : fallback;
}

json gk_json(const GKEstimate& g) {
  return {{"value", g.value},
          {"exact", g.exact},
          {"lower_bound", g.lower_bound},
          {"window", {g.window_start, g.window_end}},
          {"order", g.order},
          {"lag", g.lag},
          {"evidence", g.evidence}};
}

// Random nonzero combination with small integer coefficients.
AlgElement random_combination(const std::vector<AlgElement>& basis, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (;;) {
    AlgElement out;
    for (const auto& b : basis) out += b.scaled(Scalar(coeff(rng)));
    if (!out.is_zero()) return out;
  }
}

}  // namespace

int Session::Impl::degree_for(const TaskDecl& t) const {
  if (maxdeg > 0) return static_cast<int>(maxdeg);
  const int D = int_option(t, "maxdeg", kDefaultDegree);
  if (D < 1) raise(ErrorCode::UsageError, t.pos.str() + ": maxdeg must be positive");
  return D;
}

void Session::Impl::run_task(const TaskDecl& t, json& out) {
  const int D = degree_for(t);
  const AlgebraPtr R = algebra(t.args[0], D);
  const GroupPtr G = group(t.args[1], t.args[0], D);
  json caveats = json::array();
  const std::string trunc = "computed through degree " + std::to_string(D);

  auto user_pairs = [&]() {
    std::vector<PertinentPair> pairs;
    if (const OptionValue* v = t.option("pairs"))
      for (const auto& name : v->items) {
        const PairDecl* p = script.find<PairDecl>(name.text);
        std::vector<AlgElement> left, right;
        for (const auto& e : p->left) left.push_back(element(e, *R));
        for (const auto& e : p->right) right.push_back(element(e, *R));
        pairs.push_back(verify_pertinent(*G, left, right, "user:" + p->name));
      }
    return pairs;
  };
  auto pairs_json = [](const std::vector<PertinentPair>& pairs) {
    json arr = json::array();
    for (const auto& p : pairs) {
      json left = json::array(), right = json::array();
      for (const auto& a : p.left) left.push_back(a.render());
      for (const auto& b : p.right) right.push_back(b.render());
      arr.push_back({{"origin", p.origin}, {"left", left}, {"right", right}, {"value", p.value().render()}});
    }
    return arr;
  };
  // oracle or constructive radical, with its report fields
  auto radical = [&](json& o) {
    const std::string method = ident_option(t, "method", "oracle");
    o["method"] = method;
    if (method == "oracle") return oracle_radical(*G, D, threads);
    std::set<std::string> strategies = known_strategies();
    if (const OptionValue* v = t.option("strategies")) {
      strategies.clear();
      for (const auto& s : v->items) strategies.insert(s.text);
    }
    std::vector<AlgElement> inputs;
    if (const OptionValue* v = t.option("inputs"))
      for (const auto& e : v->items) inputs.push_back(element(e, *R));
    ConstructiveResult c = radical_constructive(*G, D, strategies, user_pairs(), inputs, conductor);
    const IdealTable oracle = oracle_radical(*G, D, threads);
    json gap = json::array();
    const auto od = oracle.dims(), cd = c.table.dims();
    for (std::size_t d = 0; d < od.size(); ++d) gap.push_back(od[d] - cd[d]);
    o["strategies"] = strategies;
    o["pairs"] = pairs_json(c.pairs);
    o["skipped"] = c.skipped;
    o["oracle_dims"] = od;
    o["gap"] = gap;
    o["contained_in_oracle"] = oracle.contains(c.table);
    return c.table;
  };

  if (t.kind == "radical") {
    IdealTable r = radical(out);
    out["hilbert_R"] = R->hilbert();
    out["radical_dims"] = r.dims();
    out["radical_generators"] = poly_list(minimal_generators(r));
    out["hilbert_quotient"] = hilbert(*R, &r).dims;
    if (int_option(t, "dump", 0)) out["radical_table"] = table_rows(r);
    caveats.push_back(trunc);
    caveats.push_back("generators are minimal up to degree " + std::to_string(D));
  } else if (t.kind == "pertinency") {
    IdealTable r = radical(out);
    std::optional<int> asserted;
    if (const auto* d = script.find<AlgebraDecl>(t.args[0]); d && d->gkdim) asserted = d->gkdim;
    if (t.option("gkdim")) asserted = int_option(t, "gkdim", 0);
    const Pertinency p = pertinency(*R, r, int_option(t, "window", 4), asserted);
    out["hilbert_R"] = R->hilbert();
    out["hilbert_quotient"] = hilbert(*R, &r).dims;
    out["gkdim_R"] = {{"value", asserted ? *asserted : *R->known_gkdim()},
                      {"source", asserted ? "asserted" : "known"}};
    out["gk_quotient"] = gk_json(p.quotient);
    out["pertinency"] = {{"value", p.value}, {"kind", p.kind}};
    caveats.push_back(trunc);
    if (p.kind == "estimate") caveats.push_back("pertinency is estimated from a finite window of the Hilbert function");
    if (p.kind == "lower_bound") caveats.push_back("a sub-ideal of the radical was used: the value bounds p from below");
  } else if (t.kind == "invariants" || t.kind == "cofinality") {
    const InvariantRing A = invariants_basis(*G, D);
    const IdealTable r = oracle_radical(*G, D, threads);
    const IdealTable a = intersect_with_invariants(r, A.components);
    const auto a_gens = ideal_generators_in(a, A);
    if (t.kind == "invariants") {
      json molien = json::array();
      for (int d = 0; d <= D; ++d) molien.push_back(scalar_json(molien_dimension(*G, d)));
      out["invariant_dims"] = A.dims();
      out["molien_dims"] = molien;
      out["invariant_generators"] = poly_list(A.generators);
      out["radical_dims"] = r.dims();
      out["a_dims"] = a.dims();
      out["a_generators"] = poly_list(a_gens);
      if (int_option(t, "dump", 0)) out["a_table"] = table_rows(a);
      caveats.push_back("generators are minimal up to degree " + std::to_string(D));
    } else {
      const CofinalityCertificate c = cofinality_check(r, A, int_option(t, "smax", 3), int_option(t, "ncap", 8));
      json table = json::array();
      for (const auto& e : c.table)
        table.push_back({{"s", e.s}, {"n", e.n ? json(*e.n) : json(nullptr)}, {"status", e.status}});
      out["radical_dims"] = r.dims();
      out["a_dims"] = a.dims();
      out["a_generators"] = poly_list(a_gens);
      out["cofinality"] = {{"aR_eq_Ra", c.aR_eq_Ra}, {"table", table}};
      caveats.push_back("containments checked through degree " + std::to_string(D) + " only");
    }
    std::vector<AlgElement> targets = a_gens;
    if (const OptionValue* v = t.option("normal")) {
      targets.clear();
      for (const auto& e : v->items) targets.push_back(element(e, *R));
    }
    json normality = json::array();
    for (const auto& x : targets) {
      const NormalityVerdict v = normality_check(x, &A, D);
      normality.push_back({{"poly", x.render()}, {"in_R", v.in_R}, {"in_A", v.in_A ? json(*v.in_A) : json(nullptr)}});
    }
    out["normality"] = normality;
  } else if (t.kind == "verify") {
    const PairDecl* p = script.find<PairDecl>(t.args[2]);
    std::vector<AlgElement> left, right;
    for (const auto& e : p->left) left.push_back(element(e, *R));
    for (const auto& e : p->right) right.push_back(element(e, *R));
    if (auto v = find_violation(*G, left, right)) {
      out["pertinent"] = false;
      out["violation"] = {{"g", render_matrix(G->matrix(v->element))}, {"residue", v->residue.render()}};
      out["caveats"] = caveats;
      raise(ErrorCode::NotPertinent, "g = " + render_matrix(G->matrix(v->element)) + " leaves residue " +
                                         v->residue.render());
    }
    const PertinentPair pair = verify_pertinent(*G, left, right, "user:" + p->name);
    const AlgElement value = pair.value();
    out["pertinent"] = true;
    out["value"] = value.render();
    if (value.degree() <= D) {
      out["in_radical"] = oracle_radical(*G, std::max(0, value.degree()), threads).contains(value);
    } else {
      out["in_radical"] = nullptr;
      caveats.push_back("value lies above the truncation degree; membership not checked");
    }
  } else if (t.kind == "semisimple") {
    SemisimpleResult s;
    if (ident_option(t, "quotient", "none") == "radical") {
      const IdealTable r = oracle_radical(*G, D, threads);
      const AlgebraPtr S = quotient_by_ideal(*R, minimal_generators(r), D);
      const GroupPtr GS = G->induced_on(*S);
      s = is_semisimple_upto(*GS, D, threads);
      out["algebra"] = "quotient by the radical";
      out["hilbert"] = S->hilbert();
    } else {
      s = is_semisimple_upto(*G, D, threads);
      out["hilbert"] = R->hilbert();
    }
    out["semisimple"] = s.semisimple;
    out["checked_upto"] = s.checked_upto;
    out["witness"] = s.witness ? json(s.witness->render()) : json(nullptr);
  } else if (t.kind == "soundness") {
    std::mt19937_64 rng(seed);
    const IdealTable oracle = oracle_radical(*G, D, threads);
    const std::size_t n = G->order();
    std::vector<AlgElement> central;
    for (int d = 1; d <= 2 && d < D; ++d)
      for (auto& c : center_basis(*R, d)) central.push_back(std::move(c));
    std::vector<std::string> available;
    if (!central.empty() && n - 1 <= 12) available.push_back("translate_product");
    if (!central.empty() && n <= 4) available.push_back("determinant");
    std::vector<std::pair<std::size_t, std::vector<AlgElement>>> eigenspaces;
    if (static_cast<int>(n) <= D && (n <= 2 || conductor % static_cast<int>(n) == 0)) {
      const Scalar root = n > 2 ? CyclotomicField::get(conductor).primitive_root(static_cast<int>(n)) : Scalar(-1);
      for (std::size_t sigma = 1; sigma < n; ++sigma) {
        if (G->element_order(sigma) != n) continue;
        std::vector<SparseVec> cols;
        for (std::size_t p = 0; p < R->dim(1); ++p)
          cols.push_back(G->degree_action(sigma, 1)[p] - SparseVec::unit(static_cast<Index>(p), root));
        std::vector<AlgElement> space;
        const Subspace kernel = kernel_of_columns(R->dim(1), cols);
        for (const auto& row : kernel.basis())
          space.push_back(AlgElement::homogeneous(*R, 1, row));
        if (!space.empty()) eigenspaces.emplace_back(sigma, std::move(space));
      }
    }
    if (!eigenspaces.empty()) available.push_back("eigen_product");
    const int samples = int_option(t, "samples", 20);
    int checked = 0, failures = 0, skipped = 0;
    json failed = json::array();
    for (int i = 0; i < samples && !available.empty(); ++i) {
      const std::string strategy = available[rng() % available.size()];
      std::optional<AlgElement> value;
      try {
        if (strategy == "translate_product" || strategy == "determinant") {
          const std::size_t count = strategy == "determinant" ? n : n - 1;
          std::vector<AlgElement> a;
          int deg = 0;
          for (std::size_t k = 0; k < count; ++k) {
            std::vector<AlgElement> pool;
            const int want = central.front().degree() + static_cast<int>(rng() % 2);
            for (const auto& c : central)
              if (c.degree() == want) pool.push_back(c);
            if (pool.empty()) pool = central;
            a.push_back(random_combination(pool, rng));
            deg += a.back().degree();
          }
          if (deg > D) {
            ++skipped;
            continue;
          }
          value = strategy == "determinant" ? gen_determinant(*G, a).value : gen_translate_product(*G, a).value();
        } else {
          const auto& [sigma, space] = eigenspaces[rng() % eigenspaces.size()];
          std::vector<AlgElement> a;
          for (std::size_t k = 0; k < n; ++k) a.push_back(random_combination(space, rng));
          value = gen_eigen_product(*G, sigma, a).value();
        }
      } catch (const Error& e) {
        ++failures;
        failed.push_back({{"strategy", strategy}, {"error", e.what()}});
        continue;
      }
      ++checked;
      if (!oracle.contains(*value)) {
        ++failures;
        failed.push_back({{"strategy", strategy}, {"value", value->render()}});
      }
    }
    out["seed"] = seed;
    out["strategies"] = available;
    out["samples"] = samples;
    out["checked"] = checked;
    out["skipped"] = skipped;
    out["failures"] = failures;
    out["failed"] = failed;
    if (failures) raise(ErrorCode::BadInput, std::to_string(failures) + " constructive values fell outside the radical");
  }
  out["caveats"] = caveats;
}

Session::Session() : impl_(std::make_unique<Impl>()) {}
Session::~Session() = default;

void Session::load(const std::string& text, const std::string& source) {
  Script s = parse_script(text);
  const int m = validate_script(s);
  impl_->script = std::move(s);
  impl_->conductor = m;
  impl_->source = std::filesystem::path(source).filename().string();
  impl_->loaded = true;
  impl_->algebras.clear();
  impl_->groups.clear();
}

void Session::set_option(const std::string& key, long value) {
  if (key == "maxdeg") {
    if (value < 0) raise(ErrorCode::UsageError, "maxdeg must be nonnegative");
    impl_->maxdeg = value;
  } else if (key == "threads") {
    if (value < 1) raise(ErrorCode::UsageError, "threads must be positive");
    impl_->threads = static_cast<int>(value);
  } else if (key == "seed") {
    impl_->seed = static_cast<std::uint64_t>(value);
  } else if (key == "timing") {
    impl_->timing = value != 0;
  } else {
    raise(ErrorCode::UsageError, "unknown option '" + key + "'");
  }
}

const Script& Session::script() const noexcept { return impl_->script; }
int Session::conductor() const noexcept { return impl_->conductor; }

RunStatus Session::run() {
  if (!impl_->loaded) raise(ErrorCode::UsageError, "no script loaded");
  Impl& s = *impl_;
  s.algebras.clear();
  s.groups.clear();
  s.status = RunStatus::Ok;
  json tasks = json::array();
  const auto decls = s.script.tasks();
  for (std::size_t i = 0; i < decls.size(); ++i) {
    const TaskDecl& t = *decls[i];
    json entry;
    entry["index"] = i + 1;
    entry["task"] = render_script(Script{{t}}).substr(0, render_script(Script{{t}}).size() - 1);
    entry["kind"] = t.kind;
    entry["algebra"] = t.args[0];
    entry["group"] = t.args[1];
    const auto start = std::chrono::steady_clock::now();
    json body = json::object();
    try {
      entry["maxdeg"] = s.degree_for(t);
      s.run_task(t, body);
      entry["status"] = "ok";
      entry.update(body);
    } catch (const Error& e) {
      const bool usage = is_usage_error(e.code());
      entry["status"] = "error";
      entry.update(body);
      entry["error"] = {{"code", std::string(error_code_name(e.code()))},
                        {"message", e.what()},
                        {"task", i + 1},
                        {"line", t.pos.line}};
      if (usage) s.status = RunStatus::UsageError;
      else if (s.status == RunStatus::Ok) s.status = RunStatus::MathError;
    }
    if (s.timing)
      entry["elapsed_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    tasks.push_back(std::move(entry));
  }
  s.report = json::object();
  s.report["schema"] = 1;
  s.report["generator"] = "pertinax";
  s.report["version"] = kPertinaxVersion;
  s.report["source"] = s.source;
  s.report["conductor"] = s.conductor;
  s.report["status"] = s.status == RunStatus::Ok ? "ok" : s.status == RunStatus::MathError ? "math_error" : "usage_error";
  s.report["tasks"] = std::move(tasks);
  return s.status;
}

std::string Session::report_json() const { return impl_->report.dump(2) + "\n"; }

std::string Session::report_text() const {
  const json& r = impl_->report;
  std::ostringstream out;
  out << "pertinax " << kPertinaxVersion << ", conductor " << r.value("conductor", 1) << "\n";
  if (!r.contains("tasks")) return out.str();
  for (const auto& t : r["tasks"]) {
    out << "[" << t["index"].get<int>() << "] " << t["task"].get<std::string>() << "  -> " << t["status"].get<std::string>()
        << "\n";
    for (const auto& [key, value] : t.items()) {
      if (key == "index" || key == "task" || key == "status" || key == "kind" || key == "algebra" || key == "group")
        continue;
      if (key == "error") {
        out << "  error: " << value["message"].get<std::string>() << "\n";
        continue;
      }
      out << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
  return out.str();
}

}  // namespace pertinax
