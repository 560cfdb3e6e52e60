// prismdom: exact partial-domination computations on prisms of graphs.
//
// Subcommands: gen, gamma, profile, prism, sweep, verify, find-t.
// Exit codes: 0 success/holds, 1 counterexample, 2 preconditions unmet,
// 3 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "prismdom/errors.hpp"
#include "prismdom/graph.hpp"
#include "prismdom/permutation.hpp"
#include "prismdom/prism.hpp"
#include "prismdom/report_json.hpp"
#include "prismdom/solver.hpp"
#include "prismdom/sweep.hpp"
#include "prismdom/verifier.hpp"

using nlohmann::json;
using namespace prismdom;

namespace {

int env_cap() {
  if (const char* s = std::getenv("PRISMDOM_CAP")) {
    try {
      return std::stoi(s);
    } catch (...) {
      throw std::invalid_argument("PRISMDOM_CAP is not an integer: " + std::string(s));
    }
  }
  return kDefaultExhaustiveCap;
}

struct GraphSource {
  std::string path;
  std::string builtin;
  std::string family;
  int n = 0;
  std::optional<std::uint64_t> seed;
  std::string density;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--graph", path, "edge-list file");
    cmd->add_option("--builtin", builtin, "named instance: gadget, two-gadget, two-star4");
    cmd->add_option("--family", family, "path|cycle|complete|star|random");
    cmd->add_option("--n", n, "vertex count for --family");
    cmd->add_option("--density", density, "edge probability a/b for --family random");
  }

  Graph load(bool one_indexed) const {
    if (!path.empty()) return load_edge_list(path, one_indexed);
    if (!builtin.empty()) {
      if (auto g = instances::by_name(builtin)) return *g;
      throw std::invalid_argument("unknown builtin instance: " + builtin);
    }
    if (!family.empty()) {
      auto fam = parse_family(family);
      if (!fam) throw std::invalid_argument("unknown family: " + family);
      std::optional<Density> d;
      if (!density.empty()) d = Density::parse(density);
      return generate_family(*fam, n, seed, d);
    }
    throw std::invalid_argument("no graph given: use --graph, --builtin or --family");
  }

  json config() const {
    json c = json::object();
    if (!path.empty()) c["graph"] = path;
    if (!builtin.empty()) c["builtin"] = builtin;
    if (!family.empty()) {
      c["family"] = family;
      c["n"] = n;
      if (seed) c["seed"] = *seed;
      if (!density.empty()) c["density"] = density;
    }
    return c;
  }
};

// pi spec: "identity", inline image/cycle notation, or a file holding an
// image line
Permutation load_permutation(const std::string& spec, int n, bool one_indexed) {
  std::ifstream in(spec);
  if (in) {
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_permutation(buf.str(), n, one_indexed);
  }
  return parse_permutation(spec, n, one_indexed);
}

VertexSet parse_vertex_list(const std::string& text, int index_base) {
  std::string body = text;
  std::replace(body.begin(), body.end(), ',', ' ');
  std::istringstream in(body);
  VertexSet out;
  int v = 0;
  while (in >> v) {
    v -= index_base;
    if (v < 0 || v >= VertexSet::max_vertices)
      throw std::invalid_argument("vertex out of range in list: " + text);
    out.set(v);
  }
  if (out.empty()) throw std::invalid_argument("empty vertex list: " + text);
  return out;
}

int verdict_exit_code(Verdict v) {
  switch (v) {
    case Verdict::holds: return 0;
    case Verdict::counterexample: return 1;
    case Verdict::preconditions_unmet: return 2;
  }
  return 3;
}

void print_report(const VerificationReport& rep, bool as_json, const json& config) {
  if (as_json) {
    json out = to_json(rep);
    out["config"] = config;
    std::cout << out.dump(2) << '\n';
    return;
  }
  std::cout << "claim: " << rep.claim << '\n'
            << "instance: " << rep.instance << '\n'
            << "mode: " << rep.mode << '\n'
            << "verdict: " << to_string(rep.verdict) << '\n';
  for (const auto& note : rep.notes) std::cout << "note: " << note << '\n';
  if (rep.certificate) {
    json cert = to_json(*rep.certificate);
    std::cout << "certificate: " << cert.dump() << '\n';
  }
}

// --- subcommands ------------------------------------------------------------

struct GenOpts {
  std::string family;
  int n = 0;
  std::optional<std::uint64_t> seed;
  std::string density;
  std::string out;
  bool one_indexed = false;
};

int run_gen(const GenOpts& o) {
  auto fam = parse_family(o.family);
  if (!fam) throw std::invalid_argument("unknown family: " + o.family);
  std::optional<Density> d;
  if (!o.density.empty()) d = Density::parse(o.density);
  Graph g = generate_family(*fam, o.n, o.seed, d);
  if (o.out.empty()) {
    write_edge_list(std::cout, g, o.one_indexed);
    std::cerr << g.n() << ' ' << g.m() << '\n';
  } else {
    std::ofstream out(o.out);
    if (!out) throw std::invalid_argument("cannot open output file: " + o.out);
    write_edge_list(out, g, o.one_indexed);
    std::cout << g.n() << ' ' << g.m() << '\n';
  }
  return 0;
}

struct GammaOpts {
  GraphSource src;
  std::string p;
  bool one_indexed = false;
  bool as_json = false;
};

int run_gamma(const GammaOpts& o) {
  Graph g = o.src.load(o.one_indexed);
  const int base = o.one_indexed ? 1 : 0;
  DominationResult res;
  std::string label;
  if (o.p.empty()) {
    res = solve_domination(g);
    label = "gamma";
  } else {
    res = solve_partial_domination(g, Proportion::parse(o.p));
    label = "gamma_p";
  }
  if (o.as_json) {
    json out{{"command", "gamma"},
             {"config", o.src.config()},
             {label, res.size},
             {"witness", res.witness.to_vector()}};
    if (!o.p.empty()) out["p"] = Proportion::parse(o.p).str();
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << label << " = " << res.size << '\n'
              << "witness = " << to_string(res.witness, base) << '\n';
  }
  return 0;
}

struct ProfileOpts {
  GraphSource src;
  bool one_indexed = false;
  bool as_json = false;
};

int run_profile(const ProfileOpts& o) {
  Graph g = o.src.load(o.one_indexed);
  CoverageProfile prof = coverage_profile(g);
  if (o.as_json) {
    json out{{"command", "profile"}, {"config", o.src.config()}, {"n", prof.n}};
    out["best"] = prof.best;
    std::cout << out.dump(2) << '\n';
  } else {
    for (int k = 0; k <= prof.n; ++k)
      std::cout << k << ' ' << prof.best[static_cast<std::size_t>(k)] << '\n';
  }
  return 0;
}

struct PrismOpts {
  GraphSource src;
  std::string pi = "identity";
  std::string out;
  bool one_indexed = false;
};

int run_prism(const PrismOpts& o) {
  Graph g = o.src.load(o.one_indexed);
  Permutation pi = load_permutation(o.pi, g.n(), o.one_indexed);
  PrismGraph pr = build_prism(g, pi);
  if (o.out.empty()) {
    write_edge_list(std::cout, pr.combined, o.one_indexed);
    std::cerr << pr.combined.n() << ' ' << pr.combined.m() << '\n';
  } else {
    std::ofstream out(o.out);
    if (!out) throw std::invalid_argument("cannot open output file: " + o.out);
    write_edge_list(out, pr.combined, o.one_indexed);
    std::cout << pr.combined.n() << ' ' << pr.combined.m() << '\n';
  }
  return 0;
}

struct SweepOpts {
  GraphSource src;
  std::string p;
  bool all = false;
  int sample = 0;
  std::uint64_t seed = 0;
  int cap = kDefaultExhaustiveCap;
  int jobs = 0;  // 0 = all cores
  bool one_indexed = false;
  bool as_json = false;
};

int run_sweep(const SweepOpts& o) {
  Graph g = o.src.load(o.one_indexed);
  Proportion p = Proportion::parse(o.p);
  SweepMode mode =
      o.sample > 0 ? SweepMode::sampled(o.sample, o.seed) : SweepMode::exhaustive();
  int jobs = o.jobs;
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  SweepResult result;
  try {
    result = sweep(g, p, mode, o.cap, jobs);
  } catch (const CapExceeded& e) {
    throw CapExceeded(std::string(e.what()) +
                      " (pass --sample N to sweep a sample instead)");
  }
  Classification c = classify(result);
  if (o.as_json) {
    json out = to_json(result, c);
    out["config"] = json{{"command", "sweep"}, {"graph", o.src.config()},
                         {"p", p.str()},      {"mode", to_json(mode)},
                         {"cap", o.cap},      {"jobs", jobs}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "n=" << result.n << " p=" << p.str() << " mode=" << mode.str()
              << " base=" << result.base_value << " min=" << result.min_value
              << " max=" << result.max_value << '\n';
    for (auto [value, count] : result.histogram)
      std::cout << "count[" << value << "] = " << count << '\n';
    std::cout << "classification: " << to_string(c)
              << (mode.kind == SweepMode::Kind::sampled ? " (sampled evidence)" : "")
              << '\n';
  }
  return 0;
}

struct VerifyOpts {
  std::string claim;
  int prop = 0;
  GraphSource src;
  std::string m_list;
  std::string pi;
  bool all_pi = false;
  int sample = 0;
  std::uint64_t seed = 0;
  int cap = kDefaultExhaustiveCap;
  bool one_indexed = false;
  bool as_json = false;
};

int run_verify(const VerifyOpts& o) {
  std::string claim = o.claim;
  if (claim.empty() && o.prop > 0) claim = "prop" + std::to_string(o.prop);
  if (claim.empty())
    throw std::invalid_argument("choose a claim with --prop N or --claim NAME");

  // without explicit mode flags, all-permutation claims run exhaustively up
  // to n=7 and fall back to a seeded 1000-permutation sample above
  auto pick_mode = [&](int n) {
    if (o.sample > 0) return SweepMode::sampled(o.sample, o.seed);
    if (o.all_pi || n <= 7) return SweepMode::exhaustive();
    return SweepMode::sampled(1000, o.seed);
  };
  const int base = o.one_indexed ? 1 : 0;

  json config{{"command", "verify"}, {"claim", claim}, {"graph", o.src.config()},
              {"cap", o.cap}};
  if (!o.pi.empty()) config["pi"] = o.pi;
  if (!o.m_list.empty()) config["m"] = o.m_list;

  VerificationReport rep;
  if (claim == "prop3") {
    auto fam = parse_family(o.src.family);
    if (!fam) throw std::invalid_argument("prop3 needs --family path or cycle");
    SweepMode mode = pick_mode(o.src.n);
    config["mode"] = to_json(mode);
    rep = verify_prop3(*fam, o.src.n, mode, o.cap);
  } else {
    Graph g = o.src.load(o.one_indexed);
    SweepMode mode = pick_mode(g.n());
    config["mode"] = to_json(mode);
    auto over_perms = [&](auto&& f) {
      if (o.pi.empty())
        return verify_for_permutations(g.n(), mode, o.cap, f);
      return f(load_permutation(o.pi, g.n(), o.one_indexed));
    };
    if (claim == "prop1") {
      rep = verify_prop1(g, mode, o.cap);
    } else if (claim == "prop2") {
      rep = over_perms([&](const Permutation& pi) { return verify_prop2(g, pi); });
    } else if (claim == "remark") {
      rep = over_perms([&](const Permutation& pi) { return verify_remark(g, pi); });
    } else if (claim == "prop4") {
      rep = over_perms([&](const Permutation& pi) { return verify_prop4(g, pi); });
    } else if (claim == "prop5") {
      rep = over_perms([&](const Permutation& pi) { return verify_prop5(g, pi); });
    } else if (claim == "gu-bound") {
      rep = over_perms([&](const Permutation& pi) { return verify_gu_bound(g, pi); });
    } else if (claim == "prop6") {
      if (o.m_list.empty()) throw std::invalid_argument("prop6 needs --m");
      rep = verify_prop6(g, parse_vertex_list(o.m_list, base), mode, o.cap);
    } else if (claim == "prop7") {
      if (o.m_list.empty()) throw std::invalid_argument("prop7 needs --m");
      VertexSet m = parse_vertex_list(o.m_list, base);
      rep = over_perms([&](const Permutation& pi) { return verify_prop7(g, m, pi); });
    } else {
      throw std::invalid_argument("unknown claim: " + claim);
    }
  }
  print_report(rep, o.as_json, config);
  return verdict_exit_code(rep.verdict);
}

struct FindTOpts {
  GraphSource src;
  std::string m_list;
  std::string pi = "identity";
  bool one_indexed = false;
  bool as_json = false;
};

int run_find_t(const FindTOpts& o) {
  Graph g = o.src.load(o.one_indexed);
  const int base = o.one_indexed ? 1 : 0;
  VertexSet m = parse_vertex_list(o.m_list, base);
  Permutation pi = load_permutation(o.pi, g.n(), o.one_indexed);

  PairingResult pairing = check_prop7_preconditions(g, m);
  if (!pairing.pairing) {
    std::cerr << "pairing failed: " << pairing.error;
    if (pairing.offending >= 0)
      std::cerr << " (vertex " << pairing.offending + base << ")";
    std::cerr << '\n';
    return 2;
  }
  auto packing_case = classify_packing_case(*pairing.pairing, pi);
  if (!packing_case) {
    std::cerr << "permutation is outside the three supported cases\n";
    return 2;
  }

  VertexSet t;
  try {
    t = find_two_packing(g, *pairing.pairing, pi);
  } catch (const TwoPackingFailure& e) {
    std::cerr << "construction failed: " << e.what()
              << "; partial T = " << to_string(e.partial(), base) << '\n';
    return 1;
  }
  PrismGraph pr = build_prism(g, pi);
  PackingAudit audit = audit_two_packing(pr, t, m.count());
  if (o.as_json) {
    json out{{"command", "find-t"},
             {"config", o.src.config()},
             {"case", std::string(to_string(*packing_case))},
             {"t", t.to_vector()},
             {"audit_ok", audit.ok}};
    if (!audit.ok) out["audit_problem"] = audit.problem;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "case: " << to_string(*packing_case) << '\n'
              << "T = " << to_string(t, base) << '\n'
              << "audit: " << (audit.ok ? "ok" : audit.problem) << '\n';
  }
  return audit.ok ? 0 : 1;
}

int run(int argc, char** argv) {
  CLI::App app{"exact partial domination on prisms of graphs"};
  app.require_subcommand(1);
  const int default_cap = env_cap();
  int exit_code = 0;

  GenOpts gen;
  auto* cmd_gen = app.add_subcommand("gen", "generate a graph family member");
  cmd_gen->add_option("--family", gen.family, "path|cycle|complete|star|random")
      ->required();
  cmd_gen->add_option("--n", gen.n, "vertex count")->required();
  cmd_gen->add_option("--seed", gen.seed, "seed for random");
  cmd_gen->add_option("--density", gen.density, "edge probability a/b for random");
  cmd_gen->add_option("--out,-o", gen.out, "output file (default stdout)");
  cmd_gen->add_flag("--one-indexed", gen.one_indexed, "emit 1-indexed labels");
  cmd_gen->callback([&] { exit_code = run_gen(gen); });

  GammaOpts gm;
  auto* cmd_gamma = app.add_subcommand("gamma", "minimum (p-)dominating set size");
  gm.src.add_options(cmd_gamma);
  cmd_gamma->add_option("--seed", gm.src.seed, "seed for --family random");
  cmd_gamma->add_option("-p,--p", gm.p, "proportion a/b (omit for full domination)");
  cmd_gamma->add_flag("--one-indexed", gm.one_indexed, "1-indexed input and output");
  cmd_gamma->add_flag("--json", gm.as_json, "structured output");
  cmd_gamma->callback([&] { exit_code = run_gamma(gm); });

  ProfileOpts pf;
  auto* cmd_profile = app.add_subcommand("profile", "max coverage per subset size");
  pf.src.add_options(cmd_profile);
  cmd_profile->add_option("--seed", pf.src.seed, "seed for --family random");
  cmd_profile->add_flag("--one-indexed", pf.one_indexed, "1-indexed input");
  cmd_profile->add_flag("--json", pf.as_json, "structured output");
  cmd_profile->callback([&] { exit_code = run_profile(pf); });

  PrismOpts pm;
  auto* cmd_prism = app.add_subcommand("prism", "build the prism under a permutation");
  pm.src.add_options(cmd_prism);
  cmd_prism->add_option("--seed", pm.src.seed, "seed for --family random");
  cmd_prism->add_option("--pi", pm.pi, "identity, image line, cycles, or a file");
  cmd_prism->add_option("--out,-o", pm.out, "output file (default stdout)");
  cmd_prism->add_flag("--one-indexed", pm.one_indexed, "1-indexed input and output");
  cmd_prism->callback([&] { exit_code = run_prism(pm); });

  SweepOpts sw;
  sw.cap = default_cap;
  auto* cmd_sweep = app.add_subcommand("sweep", "evaluate gamma_p over permutations");
  sw.src.add_options(cmd_sweep);
  cmd_sweep->add_option("-p,--p", sw.p, "proportion a/b")->required();
  auto* sw_all = cmd_sweep->add_flag("--all", sw.all,
                                     "exhaustive over all n! permutations");
  cmd_sweep->add_option("--sample", sw.sample, "sample this many permutations")
      ->excludes(sw_all);
  auto* sw_seed = cmd_sweep->add_option(
      "--seed", sw.seed, "seed for sampling and for --family random");
  cmd_sweep->add_option("--cap", sw.cap, "exhaustive cap (env PRISMDOM_CAP)");
  cmd_sweep->add_option("--jobs", sw.jobs, "worker threads (0 = all cores)");
  cmd_sweep->add_flag("--one-indexed", sw.one_indexed, "1-indexed input");
  cmd_sweep->add_flag("--json", sw.as_json, "structured output");
  cmd_sweep->callback([&, sw_seed] {
    if (sw_seed->count()) sw.src.seed = sw.seed;
    exit_code = run_sweep(sw);
  });

  VerifyOpts vf;
  vf.cap = default_cap;
  auto* cmd_verify = app.add_subcommand("verify", "machine-check a claim");
  cmd_verify->add_option("--prop", vf.prop, "claim number 1..7");
  cmd_verify->add_option("--claim", vf.claim, "prop1..prop7, remark, gu-bound");
  vf.src.add_options(cmd_verify);
  cmd_verify->add_option("--m", vf.m_list, "vertex list for prop6/prop7, e.g. 0,3");
  auto* vf_pi = cmd_verify->add_option("--pi", vf.pi, "single permutation to check");
  cmd_verify->add_flag("--all-pi", vf.all_pi, "check every permutation")
      ->excludes(vf_pi);
  cmd_verify->add_option("--sample", vf.sample, "check a permutation sample")
      ->excludes(vf_pi);
  auto* vf_seed = cmd_verify->add_option(
      "--seed", vf.seed, "seed for sampling and for --family random");
  cmd_verify->add_option("--cap", vf.cap, "exhaustive cap (env PRISMDOM_CAP)");
  cmd_verify->add_flag("--one-indexed", vf.one_indexed, "1-indexed input");
  cmd_verify->add_flag("--json", vf.as_json, "structured output");
  cmd_verify->callback([&, vf_seed] {
    if (vf_seed->count()) vf.src.seed = vf.seed;
    exit_code = run_verify(vf);
  });

  FindTOpts ft;
  auto* cmd_find_t = app.add_subcommand("find-t", "build the paired two-packing T");
  ft.src.add_options(cmd_find_t);
  cmd_find_t->add_option("--seed", ft.src.seed, "seed for --family random");
  cmd_find_t->add_option("--m", ft.m_list, "paired max-degree set, e.g. 0,1")
      ->required();
  cmd_find_t->add_option("--pi", ft.pi, "identity, image line, cycles, or a file");
  cmd_find_t->add_flag("--one-indexed", ft.one_indexed, "1-indexed input and output");
  cmd_find_t->add_flag("--json", ft.as_json, "structured output");
  cmd_find_t->callback([&] { exit_code = run_find_t(ft); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
