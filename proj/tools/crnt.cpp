// crnt: structural analysis and split-translation search for reaction networks.
//
// Exit codes: 0 ok, 1 parse or usage error, 2 internal failure,
// 3 negative verdict (not found, check failed), 4 node limit reached.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "crnt/dynamics/expression.hpp"
#include "crnt/dynamics/ode.hpp"
#include "crnt/graph_analysis.hpp"
#include "crnt/milp/lp_format.hpp"
#include "crnt/network_io.hpp"
#include "crnt/translation/encoding.hpp"
#include "crnt/translation/search.hpp"
#include "crnt/translation/split_translation.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace crnt;

enum Exit { kOk = 0, kParse = 1, kInternal = 2, kNegative = 3, kNodeLimit = 4 };

// Thrown for bad flag combinations that CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_json_path(const std::string& path) {
  return std::filesystem::path(path).extension() == ".json";
}

// Unreadable inputs are usage errors, not internal failures.
std::string read_input(const std::string& path) {
  try {
    return read_text_file(path);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

ReactionNetwork load_network(const std::string& path) { return parse_network(read_input(path)); }

// A generalized network from either JSON or the `v: {stoich | kinetic}` text form.
std::optional<GeneralizedNetwork> load_if_generalized(const std::string& path, const std::string& text) {
  if (is_json_path(path)) return generalized_from_json(text);
  if (text.find('{') != std::string::npos) return parse_generalized(text);
  return std::nullopt;
}

SplitTranslation load_translation(const ReactionNetwork& original, const std::string& path) {
  std::string text = read_input(path);
  if (!is_json_path(path)) text = generalized_to_json(parse_generalized(text));
  return translation_from_json(original, text);
}

json rational_json(const Rational& v) {
  if (v.is_small() && v.is_integer()) return v.num();
  return v.str();
}

json parsed(const std::string& text) { return json::parse(text); }

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string polynomial_line(const dyn::Polynomial& p, const dyn::SymbolTable& s) {
  return p.is_zero() ? "0" : p.str(s);
}

// ---- analyze

int cmd_analyze(const std::string& path, bool as_json) {
  std::string text = read_input(path);
  StructuralReport rep;
  if (auto g = load_if_generalized(path, text))
    rep = analyze(*g);
  else
    rep = analyze(parse_network(text));
  if (as_json) {
    std::cout << report_to_json(rep);
    return kOk;
  }
  std::cout << "vertices            " << rep.n << "\n"
            << "reactions           " << rep.r << "\n"
            << "linkage classes     " << rep.l() << "\n"
            << "strong classes      " << rep.strong_linkage.size() << "\n"
            << "dim S               " << rep.dim_stoich << "\n";
  if (rep.dim_kinetic) std::cout << "dim S'              " << *rep.dim_kinetic << "\n";
  std::cout << "deficiency          " << rep.deficiency << "\n";
  if (rep.kinetic_deficiency) std::cout << "kinetic deficiency  " << *rep.kinetic_deficiency << "\n";
  std::cout << "weakly reversible   " << (rep.weakly_reversible ? "yes" : "no") << "\n";
  return kOk;
}

// ---- translate / export-lp

struct TranslateArgs {
  std::string path;
  std::optional<std::size_t> slices;
  std::optional<std::size_t> max_slices;
  std::optional<std::size_t> vertices;
  std::string big_m = "1000";
  std::string epsilon = "1";
  std::string emit_lp;
  std::string output;
  std::size_t node_limit = 20000;
  bool integral = false;
  bool no_symmetry = false;
  bool as_json = false;
};

EncodingParams params_from(const TranslateArgs& a) {
  EncodingParams p;
  p.n_vertices = a.vertices;
  try {
    p.big_m = Rational::parse(a.big_m);
    p.epsilon = Rational::parse(a.epsilon);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad numeric flag: ") + e.what());
  }
  p.integral_complexes = a.integral;
  p.symmetry_breaking = !a.no_symmetry;
  return p;
}

std::string lp_path_for(const std::string& base, std::size_t q, bool several) {
  if (!several) return base;
  std::filesystem::path p(base);
  std::string stem = p.stem().string() + "-q" + std::to_string(q);
  return (p.parent_path() / (stem + p.extension().string())).string();
}

json attempt_json(const SliceAttempt& a) {
  json j;
  j["q"] = a.q;
  j["vertices"] = a.n_vertices;
  j["bigM"] = rational_json(a.big_m);
  j["status"] = milp::to_string(a.status);
  j["nodes"] = a.nodes;
  j["objective"] = a.objective ? rational_json(*a.objective) : json(nullptr);
  if (!a.note.empty()) j["note"] = a.note;
  return j;
}

int cmd_translate(const TranslateArgs& a) {
  if (a.slices && a.max_slices) throw UsageError("--slices and --max-slices are exclusive");
  ReactionNetwork net = load_network(a.path);
  SearchOptions opt;
  opt.params = params_from(a);
  opt.q_min = a.slices ? *a.slices : 1;
  opt.q_max = a.slices ? *a.slices : a.max_slices ? *a.max_slices : 1;
  if (opt.q_min == 0 || opt.q_max == 0) throw UsageError("slice counts start at 1");
  opt.solver.node_limit = a.node_limit;  // 0 means unlimited
  if (const char* ext = std::getenv("CRNT_EXTERNAL_SOLVER")) opt.solver.external_solver = ext;
  if (!a.emit_lp.empty()) {
    bool several = opt.q_min != opt.q_max;
    opt.on_model = [&](const Encoding& enc) { milp::export_lp(enc.model, lp_path_for(a.emit_lp, enc.q, several)); };
  }

  SearchResult res = find_wr_split_translation(net, opt);
  int code = res.translation ? kOk : res.indeterminate ? kNodeLimit : kNegative;

  json out;
  // "feasible": the node limit cut the search short of an optimality proof
  out["status"] = res.translation ? (res.proven_optimal ? "found" : "feasible") : res.indeterminate ? "node-limit" : "not-found";
  json attempts = json::array();
  for (auto& at : res.attempts) attempts.push_back(attempt_json(at));
  std::optional<StructuralReport> rep;
  bool equivalent = false;
  if (res.translation) {
    const SplitTranslation& t = *res.translation;
    rep = analyze(t.network);
    equivalent = dyn::dynamically_equivalent(dyn::mas_rhs(net), dyn::gmas_rhs(t)).equivalent;
    out["q"] = res.q;
    out["objective"] = rational_json(*res.objective);
    out["optimal"] = res.proven_optimal;
    out["structure"] = parsed(report_to_json(*rep));
    out["verified"] = verify_split_translation(t).ok;
    out["dynamicallyEquivalent"] = equivalent;
    out["translation"] = parsed(translation_to_json(t));
  }
  out["attempts"] = attempts;

  std::string rendered = out.dump(2) + "\n";
  if (!a.output.empty()) {
    std::ofstream f(a.output, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + a.output + "'");
    f << rendered;
  }
  if (a.as_json) {
    std::cout << rendered;
    return code;
  }
  for (auto& at : res.attempts) std::cout << attempt_summary(at) << "\n";
  if (!res.translation) {
    std::cout << (res.indeterminate ? "search stopped by the node limit\n" : "no weakly reversible split translation found\n");
    return code;
  }
  std::cout << "\n" << display_text(*res.translation) << "\n"
            << "objective           " << res.objective->str()
            << (res.proven_optimal ? "" : " (node limit reached; not proven optimal)") << "\n"
            << "deficiency          " << rep->deficiency << "\n"
            << "kinetic deficiency  " << rep->kinetic_deficiency.value_or(0) << "\n"
            << "weakly reversible   " << (rep->weakly_reversible ? "yes" : "no") << "\n"
            << "equivalent          " << (equivalent ? "yes" : "no") << "\n";
  return code;
}

int cmd_export_lp(const TranslateArgs& a) {
  ReactionNetwork net = load_network(a.path);
  EncodingParams p = params_from(a);
  p.q = a.slices.value_or(1);
  if (p.q == 0) throw UsageError("slice counts start at 1");
  Encoding enc = encode(net, p);
  if (a.output.empty() || a.output == "-")
    std::cout << milp::to_lp_string(enc.model);
  else
    milp::export_lp(enc.model, a.output);
  return kOk;
}

// ---- verify

int cmd_verify(const std::string& orig, const std::string& trans, bool as_json) {
  ReactionNetwork net = load_network(orig);
  SplitTranslation t = load_translation(net, trans);
  VerifyReport rep = verify_split_translation(t);
  const std::vector<std::string> conds = {"shape", "a", "b", "c", "d"};
  if (as_json) {
    json j;
    j["ok"] = rep.ok;
    j["q"] = t.q();
    json c = json::object();
    for (auto& name : conds) {
      bool pass = true;
      for (auto& v : rep.violations) pass = pass && v.condition != name;
      c[name] = pass;
    }
    j["conditions"] = c;
    json vs = json::array();
    for (auto& v : rep.violations) vs.push_back({{"condition", v.condition}, {"reaction", v.reaction}, {"detail", v.detail}});
    j["violations"] = vs;
    print(j);
  } else {
    for (auto& name : conds) {
      std::size_t bad = 0;
      for (auto& v : rep.violations) bad += v.condition == name;
      std::cout << "(" << name << ") " << (bad ? "FAIL" : "pass") << "\n";
      for (auto& v : rep.violations)
        if (v.condition == name) std::cout << "    " << v.reaction << ": " << v.detail << "\n";
    }
  }
  return rep.ok ? kOk : kNegative;
}

// ---- equiv

int cmd_equiv(const std::string& orig, const std::string& trans, bool as_json) {
  ReactionNetwork net = load_network(orig);
  SplitTranslation t = load_translation(net, trans);
  dyn::OdeSystem a = dyn::mas_rhs(net);
  dyn::OdeSystem b = dyn::gmas_rhs(t);
  dyn::Equivalence eq = dyn::dynamically_equivalent(a, b);
  auto first = eq.first_difference();
  if (as_json) {
    json j;
    j["equivalent"] = eq.equivalent;
    if (first) {
      j["species"] = net.species[*first];
      j["difference"] = polynomial_line(eq.diff[*first], a.symbols);
    }
    json rhs = json::object();
    for (std::size_t i = 0; i < net.m(); ++i) rhs[net.species[i]] = polynomial_line(a.rhs[i], a.symbols);
    j["rhs"] = rhs;
    print(j);
  } else if (eq.equivalent) {
    std::cout << "dynamically equivalent\n";
    for (std::size_t i = 0; i < net.m(); ++i)
      std::cout << "  d" << net.species[i] << "/dt = " << polynomial_line(a.rhs[i], a.symbols) << "\n";
  } else {
    std::cout << "not equivalent; d" << net.species[*first] << "/dt differs by\n  "
              << polynomial_line(eq.diff[*first], a.symbols) << "\n";
  }
  return eq.equivalent ? kOk : kNegative;
}

// ---- check-param

int cmd_check_param(const std::string& path, const std::string& param_path, bool as_json) {
  ReactionNetwork net = load_network(path);
  dyn::Parametrization param = dyn::parse_parametrization(read_input(param_path), net.m(), net.r());
  dyn::ParamCheck chk = dyn::check_parametrization(net, param);
  if (as_json) {
    json j;
    j["ok"] = chk.ok;
    json res = json::object();
    for (std::size_t i = 0; i < net.m(); ++i) res[net.species[i]] = polynomial_line(chk.residuals[i], chk.symbols);
    j["residuals"] = res;
    print(j);
  } else if (chk.ok) {
    std::cout << "every steady-state residual vanishes identically\n";
  } else {
    for (std::size_t i = 0; i < net.m(); ++i)
      if (!chk.residuals[i].is_zero())
        std::cout << "residual for " << net.species[i] << ": " << polynomial_line(chk.residuals[i], chk.symbols) << "\n";
  }
  return chk.ok ? kOk : kNegative;
}

void add_search_flags(CLI::App* c, TranslateArgs& a) {
  c->add_option("--vertices", a.vertices, "vertex budget (default: reactions + distinct targets)");
  c->add_option("--big-m", a.big_m, "big-M constant")->capture_default_str();
  c->add_option("--epsilon", a.epsilon, "strict-positivity epsilon")->capture_default_str();
  c->add_flag("--integral", a.integral, "require integer complexes");
  c->add_flag("--no-symmetry-breaking", a.no_symmetry, "drop ordering constraints");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reaction network analysis and split network translation"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output")->trigger_on_parse();

  std::string path, second;
  auto* analyze_cmd = app.add_subcommand("analyze", "deficiency, linkage classes, weak reversibility");
  analyze_cmd->add_option("network", path, "network file (.crn, .gcrn or .json)")->required();
  analyze_cmd->add_flag("--json", as_json);

  TranslateArgs targs;
  auto* translate_cmd = app.add_subcommand("translate", "search for a weakly reversible split translation");
  translate_cmd->add_option("network", targs.path)->required();
  translate_cmd->add_option("--slices", targs.slices, "exact slice count");
  translate_cmd->add_option("--max-slices", targs.max_slices, "try 1..Q slices");
  translate_cmd->add_option("--emit-lp", targs.emit_lp, "write each model in LP format");
  translate_cmd->add_option("--node-limit", targs.node_limit, "branch-and-bound node budget per model, 0 for none")->capture_default_str();
  translate_cmd->add_option("-o,--output", targs.output, "also write the JSON result here");
  translate_cmd->add_flag("--json", targs.as_json);
  add_search_flags(translate_cmd, targs);

  TranslateArgs eargs;
  auto* export_cmd = app.add_subcommand("export-lp", "write the translation model without solving");
  export_cmd->add_option("network", eargs.path)->required();
  export_cmd->add_option("--slices", eargs.slices, "slice count")->default_val(1);
  export_cmd->add_option("-o,--output", eargs.output, "LP file (default stdout)");
  add_search_flags(export_cmd, eargs);

  auto* verify_cmd = app.add_subcommand("verify", "check a translation against the original network");
  verify_cmd->add_option("original", path)->required();
  verify_cmd->add_option("translation", second)->required();
  verify_cmd->add_flag("--json", as_json);

  auto* equiv_cmd = app.add_subcommand("equiv", "compare mass-action and generalized mass-action dynamics");
  equiv_cmd->add_option("original", path)->required();
  equiv_cmd->add_option("translation", second)->required();
  equiv_cmd->add_flag("--json", as_json);

  auto* param_cmd = app.add_subcommand("check-param", "substitute a steady-state parametrization");
  param_cmd->add_option("network", path)->required();
  param_cmd->add_option("parametrization", second)->required();
  param_cmd->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(path, as_json);
    if (*translate_cmd) {
      targs.as_json = targs.as_json || as_json;
      return cmd_translate(targs);
    }
    if (*export_cmd) return cmd_export_lp(eargs);
    if (*verify_cmd) return cmd_verify(path, second, as_json);
    if (*equiv_cmd) return cmd_equiv(path, second, as_json);
    if (*param_cmd) return cmd_check_param(path, second, as_json);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
