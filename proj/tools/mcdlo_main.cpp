// mcdlo command-line tool: JSON reports on stdout, logs on stderr.
//
// Exit status: 0 true / success, 1 false, 2 usage or parse error,
// 3 verdict not stabilised.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "mcdlo/error.hpp"
#include "mcdlo/eval.hpp"
#include "mcdlo/fefvau.hpp"
#include "mcdlo/json_io.hpp"
#include "mcdlo/parser.hpp"
#include "mcdlo/rewriting.hpp"
#include "mcdlo/selftest.hpp"
#include "mcdlo/transform.hpp"

namespace {

using namespace mcdlo;
using nlohmann::json;
using syntax::Formula;
using syntax::SigTag;
using syntax::Signature;

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kUnstable = 3;

struct Options {
  std::string sig = "mo";
  std::optional<std::size_t> n;
  std::optional<int> budget;
  int kmax = 4;
  std::string formula;
  std::string formula_file;
  std::string params;
  std::string from;
  std::string to;
  std::string suite;
  std::string translate_params;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string formula_text(const Options& o) {
  if (!o.formula.empty() && !o.formula_file.empty()) throw UsageError("give --formula or --formula-file, not both");
  if (!o.formula_file.empty()) return read_file(o.formula_file);
  if (o.formula.empty()) throw UsageError("missing --formula or --formula-file");
  return o.formula;
}

json params_json(const Options& o) {
  if (o.params.empty()) return json::object();
  try {
    return json::parse(read_file(o.params));
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("parameter file: ") + e.what(), e.byte);
  }
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int verdict_code(bool verdict, bool stabilized) {
  if (!stabilized) return kUnstable;
  return verdict ? kTrue : kFalse;
}

// ---------------------------------------------------------------- commands

int cmd_parse(const Options& o) {
  const Signature sig = syntax::parse_signature(o.sig);
  const Formula f = syntax::parse_formula(formula_text(o), sig);
  json vars = json::array();
  for (const auto& v : syntax::free_vars(f)) vars.push_back(v);
  emit({{"formula", syntax::print(f)},
        {"free_vars", vars},
        {"quantifier_depth", syntax::quantifier_depth(f)},
        {"unnested", syntax::print(syntax::unnest(f))}});
  return kTrue;
}

int eval_exact(const Formula& f, const json& params, std::size_t n) {
  models::Assignment<models::Mask> a;
  for (const auto& [name, value] : params.items()) {
    models::Mask m = 0;
    for (const auto& idx : value) {
      const auto i = idx.get<std::size_t>();
      if (i >= n) throw DomainError("index " + std::to_string(i) + " outside MSO(" + std::to_string(n) + ")");
      m |= models::Mask{1} << i;
    }
    a[name] = m;
  }
  const bool v = eval::bruteforce_eval(n, f, a);
  emit({{"verdict", v}, {"stabilized", true}, {"n", n}});
  return v ? kTrue : kFalse;
}

template <class Value>
int eval_grid(const Formula& f, const models::Assignment<Value>& a, const Options& o) {
  const eval::EvalReport r = o.budget ? eval::grid_eval(f, a, *o.budget) : eval::stabilize(f, a, o.kmax);
  if (!r.stabilized) std::clog << "verdict did not stabilise up to budget " << r.budget_used << '\n';
  emit(eval::to_json(r));
  return verdict_code(r.verdict, r.stabilized);
}

int cmd_eval(const Options& o) {
  const Signature sig = syntax::parse_signature(o.sig);
  const Formula f = syntax::parse_formula(formula_text(o), sig);
  const json params = params_json(o);
  if (o.budget && *o.budget < 1) throw UsageError("--budget must be at least 1");
  if (sig.tag == SigTag::msofin && !o.n) throw UsageError("--n is required for msofin");
  if (o.n && (sig.tag == SigTag::msofin || sig.tag == SigTag::mo)) return eval_exact(f, params, *o.n);
  if (sig.tag == SigTag::lci) return eval_grid(f, interval_bindings_from_json(params), o);
  return eval_grid(f, finset_bindings_from_json(params), o);
}

int cmd_translate(const Options& o) {
  if (o.from.empty() || o.to.empty()) throw UsageError("translate needs --from and --to");
  const Signature from = syntax::parse_signature(o.from);
  const Signature to = syntax::parse_signature(o.to);
  const Formula f = syntax::parse_formula(formula_text(o), from);
  Formula out = f;
  if (from.tag == SigTag::wso && to.tag == SigTag::lci) {
    out = rewriting::w_in_l_translate(syntax::is_quantifier_free(f) ? rewriting::qf_positive_rewrite(f) : f);
  } else if (from.tag == SigTag::lci && to.tag == SigTag::wso) {
    out = rewriting::l_in_w_translate(f);
  } else if (from.tag == SigTag::lci && to.tag == SigTag::lci) {
    out = rewriting::lci_existential_rewrite(f);
  } else {
    out = rewriting::defeq_translate(f, from, to);
  }
  emit({{"formula", syntax::print(out)},
        {"existential", syntax::is_existential(out)},
        {"positive_existential", syntax::is_positive_existential(out)}});
  return kTrue;
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_fv_reduce(const Options& o) {
  const Signature sig = Signature::mo().with_extensions();
  const Formula f = syntax::parse_formula(formula_text(o), sig);
  if (o.translate_params.empty()) {
    emit(fefvau::to_json(fefvau::fv_reduce(fefvau::to_power(f))));
    return kTrue;
  }
  const auto names = split_names(o.translate_params);
  const auto t = fefvau::translate_with_parameters(f, names, fefvau::grid_oracle());
  json report = fefvau::to_json(t);
  if (o.params.empty()) {
    emit(report);
    return t.stabilized ? kTrue : kUnstable;
  }
  const auto bindings = finset_bindings_from_json(params_json(o));
  std::vector<FinSet> values;
  for (const auto& name : names) {
    auto it = bindings.find(name);
    if (it == bindings.end()) throw UsageError("no value for parameter '" + name + "'");
    values.push_back(it->second);
  }
  const bool v = fefvau::eval_translation(t, values);
  report["verdict"] = v;
  emit(report);
  return verdict_code(v, t.stabilized);
}

int cmd_positive_rewrite(const Options& o) {
  const Formula f = syntax::parse_formula(formula_text(o), Signature::wso().with_extensions());
  const Formula r = rewriting::qf_positive_rewrite(f);
  emit({{"formula", syntax::print(r)}, {"positive_existential", syntax::is_positive_existential(r)}});
  return kTrue;
}

int cmd_code_check(const Options& o) {
  const json j = params_json(o);
  if (j.contains("l") && j.contains("r")) {
    const auto code = rewriting::code_pair_from_json(j);
    const bool empty = code.l.empty() && code.r.empty();
    const bool ok = empty || rewriting::code_domain(code.l, code.r);
    json report{{"code", rewriting::to_json(code)}, {"valid", ok}};
    if (ok) report["element"] = interval_union_to_json(empty ? IntervalUnion{} : rewriting::decode(code));
    emit(report);
    return ok ? kTrue : kFalse;
  }
  json codes = json::object();
  for (const auto& [name, u] : interval_bindings_from_json(j)) codes[name] = rewriting::to_json(rewriting::code_of(u));
  emit({{"codes", codes}});
  return kTrue;
}

int cmd_selftest(const Options& o) {
  std::vector<selftest::SuiteResult> results;
  if (o.suite.empty()) {
    for (const auto& name : selftest::suite_names()) {
      results.push_back(selftest::run_suite(name));
      const auto& r = results.back();
      std::clog << (r.passed() ? "pass " : "FAIL ") << r.name << " (" << r.cases << " cases, " << r.failures
                << " failures)\n";
    }
  } else {
    results.push_back(selftest::run_suite(o.suite));
  }
  bool all = true;
  json suites = json::array();
  for (const auto& r : results) {
    all = all && r.passed();
    suites.push_back(selftest::to_json(r));
  }
  emit({{"passed", all}, {"suites", suites}});
  return all ? kTrue : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Set-based orders: parsing, evaluation and translations"};
  app.require_subcommand(1);
  Options o;

  auto add_formula = [&](CLI::App* c) {
    c->add_option("--formula", o.formula, "Formula as an s-expression");
    c->add_option("--formula-file", o.formula_file, "File holding the formula");
  };
  auto add_sig = [&](CLI::App* c) {
    c->add_option("--sig", o.sig, "mo | msofin | wso | lci, optionally with +ext")->capture_default_str();
  };

  auto* parse = app.add_subcommand("parse", "Parse and print a formula");
  add_sig(parse);
  add_formula(parse);

  auto* eval = app.add_subcommand("eval", "Evaluate a formula");
  add_sig(eval);
  add_formula(eval);
  eval->add_option("--n", o.n, "Size of MSO(n) for exact evaluation");
  eval->add_option("--budget", o.budget, "Grid budget k");
  eval->add_option("--kmax", o.kmax, "Largest budget tried when stabilising")->capture_default_str();
  eval->add_option("--params", o.params, "JSON file of variable bindings");

  auto* translate = app.add_subcommand("translate", "Translate between signatures");
  add_formula(translate);
  translate->add_option("--from", o.from, "Source signature");
  translate->add_option("--to", o.to, "Target signature");

  auto* fv = app.add_subcommand("fv-reduce", "Reduce a power formula to an acceptable sequence");
  add_formula(fv);
  fv->add_option("--translate-params", o.translate_params,
                 "Comma-separated parameters: translate into the restriction to <A>");
  fv->add_option("--params", o.params, "JSON file of parameter values");

  auto* pos = app.add_subcommand("positive-rewrite", "Positive existential form of a quantifier-free WSO formula");
  add_formula(pos);

  auto* code = app.add_subcommand("code-check", "Endpoint codes of interval unions");
  code->add_option("--params", o.params, "JSON file: {l, r} pair, or bindings of interval unions")->required();

  auto* self = app.add_subcommand("selftest", "Run the invariant suites");
  self->add_option("--suite", o.suite, "Run one suite only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*parse) return cmd_parse(o);
    if (*eval) return cmd_eval(o);
    if (*translate) return cmd_translate(o);
    if (*fv) return cmd_fv_reduce(o);
    if (*pos) return cmd_positive_rewrite(o);
    if (*code) return cmd_code_check(o);
    if (*self) return cmd_selftest(o);
  } catch (const ParseError& e) {
    emit({{"error", e.what()}, {"position", e.position()}});
    return kUsage;
  } catch (const UsageError& e) {
    emit({{"error", e.what()}});
    return kUsage;
  } catch (const json::exception& e) {
    emit({{"error", e.what()}});
    return kUsage;
  } catch (const Error& e) {
    emit({{"error", e.what()}});
    return kUsage;
  }
  return kUsage;
}
