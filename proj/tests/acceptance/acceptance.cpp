// Acceptance run: one PASS/FAIL line per criterion.
//
// Usage: crnt_acceptance --crnt <path to crnt> --work <scratch dir>
//
// Published reference values are compared literally. When such a comparison
// fails but an independent recount in this file confirms the tool's value, the
// line is still FAIL and is tagged "reference conflict"; those do not change
// the exit status. Any other failure does.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "crnt/dynamics/ode.hpp"
#include "crnt/graph_analysis.hpp"
#include "crnt/milp/solver.hpp"
#include "crnt/network_io.hpp"
#include "crnt/translation/search.hpp"
#include "testing.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace crnt;
using namespace crnt::testing;

namespace {

std::string g_crnt;
fs::path g_work;
const fs::path g_nets = CRNT_NETWORKS_DIR;

struct Run {
  int code = -1;
  std::string out;
  double seconds = 0;
};

std::string quote(const std::string& s) { return "'" + std::regex_replace(s, std::regex("'"), "'\\''") + "'"; }

Run crnt(const std::vector<std::string>& args) {
  std::string cmd = quote(g_crnt);
  for (auto& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  Run r;
  auto t0 = std::chrono::steady_clock::now();
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  int st = pclose(p);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string net(const std::string& name) { return (g_nets / name).string(); }

struct Verdict {
  std::vector<std::string> failures;      // genuine failures
  std::vector<std::string> conflicts;     // reference value contradicted by an independent recount
  std::vector<std::string> notes;
  void check(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  bool pass() const { return failures.empty() && conflicts.empty(); }
};

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (auto& x : v) s += (s.empty() ? "" : "; ") + x;
  return s;
}

// Independent recount of n, l, dim S and delta straight from the file.
struct Recount {
  std::size_t n, l, dim;
  long delta;
};
Recount recount(const ReactionNetwork& nw) {
  auto root = component_root(nw.graph);
  std::set<std::size_t> roots(root.begin(), root.end());
  std::vector<std::vector<Rational>> rows;
  for (auto& e : nw.graph.edges) {
    std::vector<Rational> v(nw.m());
    for (std::size_t i = 0; i < nw.m(); ++i) v[i] = nw.complexes[e.target][i] - nw.complexes[e.source][i];
    rows.push_back(v);
  }
  std::size_t dim = rank_oracle(rows);
  return {nw.n(), roots.size(), dim, static_cast<long>(nw.n() - roots.size() - dim)};
}

// Checks a translation JSON (as printed by `translate --json`) from first principles.
void check_found(Verdict& v, const ReactionNetwork& original, const Run& r, const std::string& tag, bool want_zero_deficiency) {
  json j;
  try {
    j = json::parse(r.out);
  } catch (...) {
    v.check(false, tag + ": output is not JSON");
    return;
  }
  // "feasible" is a translation the node limit stopped short of proving optimal
  v.check(r.code == 0 && (j["status"] == "found" || j["status"] == "feasible"),
          tag + ": exit " + std::to_string(r.code) + " status " + j["status"].dump());
  if (!j.contains("translation")) return;
  SplitTranslation t = translation_from_json(original, j["translation"].dump());
  v.check(verify_split_translation(t).ok, tag + ": conditions (a)-(d)");
  v.check(wr_oracle(t.network.graph), tag + ": weak reversibility (reachability oracle)");
  v.check(dyn::dynamically_equivalent(dyn::mas_rhs(original), dyn::gmas_rhs(t)).equivalent, tag + ": symbolic equivalence");
  Rng rng(5);
  for (int s = 0; s < 5; ++s) {
    auto x = random_point(rng, original.m()), k = random_point(rng, original.r());
    if (mas_point(original, x, k) != gmas_point(t, x, k)) {
      v.check(false, tag + ": numeric equivalence");
      break;
    }
  }
  if (want_zero_deficiency) {
    GeneralizedNetwork g = t.network;
    v.check(j["structure"]["delta"] == 0 && j["structure"]["deltaPrime"] == 0, tag + ": deficiencies " +
            j["structure"]["delta"].dump() + "/" + j["structure"]["deltaPrime"].dump());
  }
  v.notes.push_back(tag + ": q=" + j["q"].dump() + " objective " + j["objective"].dump() +
                    (j["optimal"] == true ? " (optimal)" : " (not proven optimal)") + " in " +
                    std::to_string(static_cast<int>(r.seconds * 10) / 10.0).substr(0, 5) + "s");
}

void check_fixture(Verdict& v, const std::string& crn, const std::string& trans) {
  Run a = crnt({"verify", net(crn), net(trans), "--json"});
  v.check(a.code == 0, "verify " + trans + " exit " + std::to_string(a.code));
  Run b = crnt({"equiv", net(crn), net(trans), "--json"});
  v.check(b.code == 0, "equiv " + trans + " exit " + std::to_string(b.code));
}

// ---- criteria

Verdict criterion1() {
  Verdict v;
  struct Want {
    std::string file;
    std::optional<std::size_t> n, l, dim;
    long delta;
    std::optional<long> delta_prime;
    std::optional<bool> wr;
  };
  std::vector<Want> wants = {{"network1.crn", 7, 2, 3, 2, std::nullopt, false},
                             {"lv.crn", std::nullopt, 3, std::nullopt, 2, std::nullopt, std::nullopt},
                             {"network6.gcrn", std::nullopt, std::nullopt, std::nullopt, 0, 1, true}};
  for (auto& w : wants) {
    Run r = crnt({"analyze", net(w.file), "--json"});
    if (r.code != 0) {
      v.check(false, w.file + ": exit " + std::to_string(r.code));
      continue;
    }
    v.check(r.seconds < 1.0, w.file + ": took " + std::to_string(r.seconds) + "s");
    json j = json::parse(r.out);
    std::vector<std::string> bad;
    auto cmp = [&](const char* key, long want) {
      if (j[key].get<long>() != want) bad.push_back(std::string(key) + " " + j[key].dump() + " (reference " + std::to_string(want) + ")");
    };
    if (w.n) cmp("n", static_cast<long>(*w.n));
    if (w.l) cmp("l", static_cast<long>(*w.l));
    if (w.dim) cmp("dimS", static_cast<long>(*w.dim));
    cmp("delta", w.delta);
    if (w.delta_prime) cmp("deltaPrime", *w.delta_prime);
    if (w.wr && j["weaklyReversible"].get<bool>() != *w.wr) bad.push_back("weaklyReversible");
    if (bad.empty()) continue;
    // Only plain networks are recounted; a generalized mismatch is a plain failure.
    if (w.file.ends_with(".crn")) {
      Recount rc = recount(parse_network(read_text_file(net(w.file))));
      bool tool_right = j["n"] == rc.n && j["l"] == rc.l && j["dimS"] == rc.dim && j["delta"] == rc.delta;
      std::string msg = w.file + ": " + join(bad) + "; recount n=" + std::to_string(rc.n) + " l=" + std::to_string(rc.l) +
                        " dimS=" + std::to_string(rc.dim) + " delta=" + std::to_string(rc.delta);
      (tool_right ? v.conflicts : v.failures).push_back(msg);
    } else {
      v.failures.push_back(w.file + ": " + join(bad));
    }
  }
  return v;
}

Verdict criterion2(std::string* artifact) {
  Verdict v;
  ReactionNetwork original = parse_network(read_text_file(net("network1.crn")));
  Run r = crnt({"translate", net("network1.crn"), "--max-slices", "2", "--json"});
  *artifact = r.out;
  v.check(r.seconds < 120, "took " + std::to_string(r.seconds) + "s");
  check_found(v, original, r, "network1", true);
  check_fixture(v, "network1.crn", "network3.gcrn.json");
  return v;
}

Verdict criterion3(std::string* artifact) {
  Verdict v;
  ReactionNetwork original = parse_network(read_text_file(net("network19-n2.crn")));
  std::string n = std::to_string(original.n());
  Run one = crnt({"translate", net("network19-n2.crn"), "--slices", "1", "--vertices", n, "--json"});
  v.check(one.code == 3, "q=1 exit " + std::to_string(one.code) + " (want 3)");
  if (one.code == 3) {
    json j = json::parse(one.out);
    v.check(j["attempts"][0]["status"] == "infeasible", "q=1 status " + j["attempts"][0]["status"].dump());
  }
  Run two = crnt({"translate", net("network19-n2.crn"), "--slices", "2", "--vertices", n, "--json"});
  check_found(v, original, two, "network19 q=2", false);
  *artifact = one.out + two.out;
  return v;
}

Verdict criterion4(std::string* artifact) {
  Verdict v;
  ReactionNetwork original = parse_network(read_text_file(net("pfk.crn")));
  Run r = crnt({"translate", net("pfk.crn"), "--max-slices", "2", "--json"});
  *artifact = r.out;
  v.check(r.seconds < 600, "took " + std::to_string(static_cast<int>(r.seconds)) + "s");
  check_found(v, original, r, "pfk", false);
  check_fixture(v, "pfk.crn", "pfk25.gcrn.json");
  Run a = crnt({"analyze", net("pfk25.gcrn.json"), "--json"});
  if (a.code == 0) {
    json j = json::parse(a.out);
    v.check(j["delta"] == 1 && j["deltaPrime"] == 0, "fixture deficiencies " + j["delta"].dump() + "/" + j["deltaPrime"].dump());
  } else {
    v.check(false, "analyze fixture exit " + std::to_string(a.code));
  }
  return v;
}

Verdict criterion5() {
  Verdict v;
  Run a = crnt({"check-param", net("network1.crn"), net("param2.txt"), "--json"});
  v.check(a.code == 0, "network1 parametrization exit " + std::to_string(a.code));
  Run b = crnt({"check-param", net("pfk.crn"), net("pfk-full-param.txt"), "--json"});
  v.check(b.code == 0, "pfk full parametrization exit " + std::to_string(b.code));
  // Every single-index perturbation must be rejected with a nonzero residual.
  std::size_t tried = 0;
  for (auto [crn, file, r] : {std::tuple{"network1.crn", "param2.txt", 6}, {"pfk.crn", "pfk-full-param.txt", 9}}) {
    std::string text = read_text_file(net(file));
    std::regex kappa(R"(\bk(\d+)\b)");
    for (auto it = std::sregex_iterator(text.begin(), text.end(), kappa); it != std::sregex_iterator(); ++it) {
      std::size_t orig = std::stoul((*it)[1]);
      std::size_t alt = orig % static_cast<std::size_t>(r) + 1;
      std::string t = text;
      t.replace(static_cast<std::size_t>(it->position()), static_cast<std::size_t>(it->length()), "k" + std::to_string(alt));
      fs::path p = g_work / "perturbed.txt";
      std::ofstream(p) << t;
      Run c = crnt({"check-param", net(crn), p.string(), "--json"});
      ++tried;
      bool residual = false;
      if (c.code == 3) {
        json out = json::parse(c.out);
        for (auto& [sp, res] : out["residuals"].items()) residual = residual || res != "0";
      }
      v.check(c.code == 3 && residual, std::string(file) + ": k" + std::to_string(orig) + "->k" + std::to_string(alt) + " accepted");
    }
  }
  v.notes.push_back(std::to_string(tried) + " perturbations tried");
  // The unsquared form of the network1 parametrization is not a steady state;
  // the shipped file squares x2, x3 and swaps the x3/x4 right-hand sides.
  Run d = crnt({"check-param", net("network1.crn"), net("param2-unsquared.txt"), "--json"});
  if (d.code == 3) {
    ReactionNetwork nw = parse_network(read_text_file(net("network1.crn")));
    // Exact recount at kappa = (1,2,3,4,5,6), tau = 1.
    std::vector<Rational> k{1, 2, 3, 4, 5, 6};
    std::vector<Rational> x{2 * k[2] * k[3] * (k[4] + k[5]), k[3] * (2 * k[0] * k[4] + k[0] * k[5] + k[1] * k[4]),
                            2 * k[2] * k[3] * (k[0] + k[1]), k[2] * (k[0] * k[5] + k[1] * k[4] + 2 * k[1] * k[5])};
    bool nonzero = false;
    for (auto& f : mas_point(nw, x, k)) nonzero = nonzero || !f.is_zero();
    (nonzero ? v.conflicts : v.failures)
        .push_back("unsquared network1 parametrization is rejected; direct evaluation of the field at it is nonzero");
  } else {
    v.failures.push_back("unsquared parametrization exit " + std::to_string(d.code));
  }
  return v;
}

Verdict criterion6() {
  Verdict v;
  Rng rng(606);
  std::size_t wr = 0, total = 0;
  for (; total < 250; ++total) {
    MultiGraph g = random_multigraph(rng, 6, 10);
    if (total % 3 == 0) {
      auto edges = g.edges;
      for (auto& e : edges)
        if (g.edges.size() < 10) g.edges.push_back({e.target, e.source});
    }
    bool scc = is_weakly_reversible(g);
    auto cert = wr_certificate(g);
    v.check(scc == cert.has_value(), "graph " + std::to_string(total) + ": SCC and certificate disagree");
    v.check(scc == wr_oracle(g), "graph " + std::to_string(total) + ": SCC disagrees with reachability");
    if (!cert) continue;
    ++wr;
    // Sign pattern of B against A = A_t - A_s, and zero row sums, recomputed here.
    const Matrix& b = cert->flow;
    bool ok = b.rows() == g.vertex_count && b.cols() == g.edges.size();
    for (std::size_t j = 0; ok && j < g.vertex_count; ++j) {
      Rational row;
      for (std::size_t k = 0; k < g.edges.size(); ++k) {
        const Edge& e = g.edges[k];
        int want = e.self_loop() ? 0 : j == e.target ? 1 : j == e.source ? -1 : 0;
        if (b(j, k).sign() != want) ok = false;
        row += b(j, k);
      }
      if (!row.is_zero()) ok = false;
    }
    v.check(ok, "graph " + std::to_string(total) + ": certificate fails the structural or balance check");
  }
  v.notes.push_back(std::to_string(total) + " graphs, " + std::to_string(wr) + " weakly reversible");
  return v;
}

Verdict criterion7() {
  Verdict v;
  Rng rng(707);
  std::size_t feasible = 0, models = 0, max_bin = 0;
  for (; models < 120; ++models) {
    std::size_t nb = models < 15 ? 18 : uniform(rng, 1, 13);
    milp::Model m = random_model(rng, nb, uniform(rng, 0, 2));
    max_bin = std::max(max_bin, nb);
    BruteResult want = brute_force(m);
    milp::Solution got = milp::solve(m);
    std::string tag = "model " + std::to_string(models);
    v.check((got.status == milp::SolveStatus::Optimal) == want.feasible, tag + ": status " + milp::to_string(got.status));
    if (!want.feasible || got.status != milp::SolveStatus::Optimal) continue;
    ++feasible;
    v.check(got.objective == want.objective, tag + ": objective " + got.objective.str() + " vs " + want.objective.str());
    v.check(feasible_oracle(m, got.values), tag + ": returned point is infeasible");
  }
  v.notes.push_back(std::to_string(models) + " models (" + std::to_string(feasible) + " feasible, up to " +
                    std::to_string(max_bin) + " binaries)");
  return v;
}

Verdict criterion8() {
  Verdict v;
  Rng rng(808);
  std::size_t found = 0, tried = 0;
  while (found < 60 && tried < 500) {
    ++tried;
    ReactionNetwork nw = random_network(rng, 3, 4);
    SearchOptions opt;
    opt.q_min = 1;
    opt.q_max = 3;
    opt.solver.node_limit = 20000;
    SearchResult res = find_wr_split_translation(nw, opt);
    if (!res.translation) continue;
    ++found;
    const SplitTranslation& t = *res.translation;
    std::string tag = "network " + std::to_string(tried);
    v.check(dyn::dynamically_equivalent(dyn::mas_rhs(nw), dyn::gmas_rhs(t)).equivalent, tag + ": not equivalent");
    for (int s = 0; s < 3; ++s) {
      auto x = random_point(rng, nw.m()), k = random_point(rng, nw.r());
      v.check(mas_point(nw, x, k) == gmas_point(t, x, k), tag + ": numeric mismatch");
    }
  }
  v.check(found >= 50, "only " + std::to_string(found) + " translations found");
  v.notes.push_back(std::to_string(found) + " translations from " + std::to_string(tried) + " networks");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i) {
    std::string a = argv[i];
    if (a == "--crnt") g_crnt = argv[++i];
    else if (a == "--work") g_work = argv[++i];
  }
  if (g_crnt.empty() || g_work.empty()) {
    std::cerr << "usage: crnt_acceptance --crnt <exe> --work <dir>\n";
    return 2;
  }
  fs::create_directories(g_work);

  int unexpected = 0;
  auto report = [&](int id, const std::string& title, const Verdict& v) {
    std::string status = v.pass() ? "PASS" : "FAIL";
    std::cout << "criterion " << id << " " << status << "  " << title;
    if (!v.notes.empty()) std::cout << " | " << join(v.notes);
    if (!v.failures.empty()) std::cout << " | failures: " << join(v.failures);
    if (!v.conflicts.empty()) std::cout << " | reference conflict: " << join(v.conflicts);
    std::cout << std::endl;
    if (!v.failures.empty()) ++unexpected;
  };

  std::string a2, a3, a4;
  report(1, "structural golden values", criterion1());
  report(2, "network1 split translation", criterion2(&a2));
  report(3, "network19 needs two slices", criterion3(&a3));
  report(4, "PFK case study", criterion4(&a4));
  report(5, "parametrization checks", criterion5());
  report(6, "weak-reversibility oracles agree", criterion6());
  report(7, "branch and bound vs brute force", criterion7());
  report(8, "decoded translations are dynamically equivalent", criterion8());

  Verdict v9;
  std::string b2, b3, b4;
  criterion2(&b2);
  criterion3(&b3);
  criterion4(&b4);
  v9.check(a2 == b2 && !a2.empty(), "network1 output differs between runs");
  v9.check(a3 == b3 && !a3.empty(), "network19 output differs between runs");
  v9.check(a4 == b4 && !a4.empty(), "pfk output differs between runs");
  report(9, "deterministic JSON artifacts", v9);

  std::cout << (unexpected ? "acceptance: " + std::to_string(unexpected) + " criteria failed unexpectedly\n"
                           : "acceptance: no unexpected failures\n");
  return unexpected ? 1 : 0;
}
