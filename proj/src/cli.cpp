#include "dasep/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <tuple>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dasep/chains.hpp"
#include "dasep/combinatorics.hpp"
#include "dasep/error.hpp"
#include "dasep/lumping.hpp"
#include "dasep/montecarlo.hpp"
#include "dasep/stationary.hpp"
#include "dasep/theorems.hpp"
#include "json.hpp"

namespace dasep::cli {

namespace {

/// State cap for theorem suites when DASEP_STATE_CAP is unset; the default
/// grid reaches DASEP(6,3,3) with 540 states.
constexpr std::size_t kSuiteStateCap = 1000;

struct Triple {
  int n = 0, p = 0, q = 0;
};

void add_triple(CLI::App* cmd, Triple& t, bool required) {
  auto* n = cmd->add_option("-n", t.n, "ring size");
  auto* p = cmd->add_option("-p", t.p, "number of species");
  auto* q = cmd->add_option("-q", t.q, "number of particles");
  if (required) {
    n->required();
    p->required();
    q->required();
  }
}

std::vector<Triple> grid(int max_n, int max_p, int max_q) {
  std::vector<Triple> out;
  for (int n = 2; n <= max_n; ++n)
    for (int q = 1; q <= std::min(max_q, n - 1); ++q)
      for (int p = 1; p <= max_p; ++p) out.push_back({n, p, q});
  return out;
}

/// Writes to --out when given, else to the output stream.
void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::InvalidParams, "cannot write " + path);
  file << text;
  if (!text.empty() && text.back() != '\n') file << '\n';
}

std::pair<Rational, Rational> parse_point(const std::vector<std::string>& at) {
  return {Rational::parse(at.at(0)), Rational::parse(at.at(1))};
}

/// Memoized symbolic solutions shared by the suites of one invocation.
class SolutionCache {
 public:
  explicit SolutionCache(SolverOptions options) : options_(options) {}

  const TransitionSystem& system(ChainKind kind, const Triple& t) {
    const auto key = std::make_tuple(static_cast<int>(kind), t.n, t.p, t.q);
    auto it = systems_.find(key);
    if (it == systems_.end()) it = systems_.emplace(key, build_chain(kind, t.n, t.p, t.q)).first;
    return it->second;
  }

  const StationaryVector& solution(ChainKind kind, const Triple& t) {
    const auto key = std::make_tuple(static_cast<int>(kind), t.n, t.p, t.q);
    auto it = solutions_.find(key);
    if (it == solutions_.end()) it = solutions_.emplace(key, solve_stationary_symbolic(system(kind, t), options_)).first;
    return it->second;
  }

  const SolverOptions& options() const { return options_; }

 private:
  using Key = std::tuple<int, int, int, int>;
  SolverOptions options_;
  std::map<Key, TransitionSystem> systems_;
  std::map<Key, StationaryVector> solutions_;
};

std::vector<Report> run_suite(const std::string& suite, const std::vector<Triple>& triples,
                              const std::vector<int>& n22_sizes, const std::string& fixtures, SolutionCache& cache) {
  std::vector<Report> reports;
  const bool all = suite == "all";
  if (all || suite == "lumping") {
    for (const auto& t : triples) {
      const auto& dasep = cache.system(ChainKind::dasep, t);
      const auto& cbp = cache.system(ChainKind::cbp, t);
      const auto& rrg = cache.system(ChainKind::rrg, t);
      for (const auto& [name, map] : {std::make_pair(std::string("lumping_dasep_to_cbp"), decompose_map(dasep, cbp)),
                                      std::make_pair(std::string("lumping_cbp_to_rrg"), shape_map(cbp, rrg))}) {
        Report r(name, {{"n", t.n}, {"p", t.p}, {"q", t.q}});
        const LumpingReport lr = verify_lumping(map);
        if (lr.pass) {
          r.note("all fiber sums match the target rows");
        } else {
          for (const auto& v : lr.violations)
            r.fail("from " + v.x0 + " into fiber " + v.y1 + ": expected " + v.expected.to_string() + ", found " +
                   v.found.to_string());
        }
        reports.push_back(std::move(r));
      }
    }
  }
  if (all || suite == "main") {
    for (const auto& t : triples)
      reports.push_back(verify_main_theorem(cache.system(ChainKind::dasep, t), cache.solution(ChainKind::dasep, t)));
  }
  if (all || suite == "ratios") {
    for (const auto& t : triples) {
      Report r = verify_ratio_corollary(cache.system(ChainKind::dasep, t), cache.solution(ChainKind::dasep, t));
      r.absorb(verify_rrg_ratios(cache.system(ChainKind::rrg, t), cache.solution(ChainKind::rrg, t)));
      reports.push_back(std::move(r));
    }
  }
  if (all || suite == "cbp") {
    for (const auto& t : triples) {
      const auto& cbp = cache.system(ChainKind::cbp, t);
      Report r = verify_cbp_closed_form(cbp, cache.solution(ChainKind::cbp, t));
      r.absorb(verify_pushforward(decompose_map(cache.system(ChainKind::dasep, t), cbp),
                                  cache.solution(ChainKind::dasep, t), cache.solution(ChainKind::cbp, t)));
      reports.push_back(std::move(r));
    }
  }
  if (all || suite == "n22") {
    for (int n : n22_sizes) reports.push_back(verify_n22(n, cache.options()));
  }
  if (all || suite == "matchings") {
    Report r("matchings", {{"k_max", 6}});
    const SequencePair seq = seq_ab(6);
    for (int k = 1; k <= 6; ++k) {
      if (matchings_weight_sum(MatchingGraph::cycle, k) != seq.a_at(k)) r.fail("cycle C_" + std::to_string(2 * k + 1));
      if (matchings_weight_sum(MatchingGraph::path, k) != seq.b_at(k)) r.fail("path L_" + std::to_string(2 * k + 1));
    }
    if (r.pass) r.note("matching sums equal a_k and b_k for k <= 6");
    reports.push_back(std::move(r));
  }
  if (all || suite == "oeis") reports.push_back(oeis_specialization(10, fixtures));
  if (all || suite == "homomesy") {
    for (const auto& t : triples) {
      const auto& sys = cache.system(ChainKind::dasep, t);
      for (GroupAction action : {GroupAction::permute_particles, GroupAction::permute_sites})
        reports.push_back(
            summarize_homomesy(homomesy_check(sys, cache.solution(ChainKind::dasep, t), action), action, sys.params()));
    }
  }
  return reports;
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact stationary distributions and theorem checks for the DASEP and its lumpings", "dasep"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "write the primary output to FILE")->type_name("FILE");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "list the states of a space");
  std::string space = "gamma";
  Triple et;
  enumerate->add_option("--space", space, "gamma | omega | chi | words")
      ->check(CLI::IsMember({"gamma", "omega", "chi", "words"}));
  add_triple(enumerate, et, false);

  // matrix
  auto* matrix = app.add_subcommand("matrix", "export the scaled transition matrix as JSON");
  std::string chain = "dasep";
  Triple mt;
  matrix->add_option("--chain", chain, "dasep | cbp | rrg")->check(CLI::IsMember({"dasep", "cbp", "rrg"}));
  add_triple(matrix, mt, true);

  // stationary
  auto* stationary = app.add_subcommand("stationary", "solve for the stationary distribution");
  Triple st;
  bool symbolic = false;
  std::vector<std::string> at;
  std::string normalize = "gcd";
  stationary->add_option("--chain", chain, "dasep | cbp | rrg")->check(CLI::IsMember({"dasep", "cbp", "rrg"}));
  add_triple(stationary, st, true);
  stationary->add_flag("--symbolic", symbolic, "polynomial entries (the default without --at)");
  stationary->add_option("--at", at, "exact rational point U T")->expected(2);
  stationary->add_option("--normalize", normalize, "gcd | prob")->check(CLI::IsMember({"gcd", "prob"}));

  // verify
  auto* verify = app.add_subcommand("verify", "run theorem suites");
  std::string suite = "all";
  Triple vt;
  int max_n = 6, max_p = 3, max_q = 3, n22_max = 9;
  std::string fixtures = default_fixture_dir();
  verify->add_option("--suite", suite, "lumping | main | ratios | cbp | n22 | matchings | oeis | homomesy | all")
      ->check(CLI::IsMember({"lumping", "main", "ratios", "cbp", "n22", "matchings", "oeis", "homomesy", "all"}));
  add_triple(verify, vt, false);
  verify->add_option("--max-n", max_n, "grid bound on n");
  verify->add_option("--max-p", max_p, "grid bound on p");
  verify->add_option("--max-q", max_q, "grid bound on q");
  verify->add_option("--n22-max", n22_max, "largest n for the DASEP(n,2,2) closed form");
  verify->add_option("--fixtures", fixtures, "directory with the OEIS fixture files")->type_name("DIR");

  // simulate
  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo run of the discrete-time chain");
  Triple mc;
  SimConfig cfg;
  std::vector<std::string> sim_at{"1", "1"};
  std::string format = "csv";
  std::string start;
  bool compare = false;
  simulate_cmd->add_option("--chain", chain, "dasep | cbp | rrg")->check(CLI::IsMember({"dasep", "cbp", "rrg"}));
  add_triple(simulate_cmd, mc, true);
  simulate_cmd->add_option("--at", sim_at, "rational point U T in [0,1]")->expected(2);
  simulate_cmd->add_option("--steps", cfg.steps, "steps per chain");
  simulate_cmd->add_option("--burn-in", cfg.burn_in, "discarded initial steps");
  simulate_cmd->add_option("--thinning", cfg.thinning, "record every k-th step");
  simulate_cmd->add_option("--seed", cfg.seed, "master seed");
  simulate_cmd->add_option("--chains", cfg.chains, "independent chains");
  simulate_cmd->add_option("--start", start, "start state label");
  simulate_cmd->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  simulate_cmd->add_flag("--compare", compare, "include the TV distance to the exact distribution (json)");

  // dot
  auto* dot = app.add_subcommand("dot", "Graphviz state diagram");
  Triple dt;
  dot->add_option("--chain", chain, "dasep | cbp | rrg")->check(CLI::IsMember({"dasep", "cbp", "rrg"}));
  add_triple(dot, dt, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*enumerate) {
      std::vector<std::string> labels;
      if (space == "chi") {
        if (et.p < 1 || et.q < 1) throw Error(ErrorCode::InvalidParams, "--space chi needs -p and -q");
        for (const auto& lambda : enumerate_chi(et.p, et.q)) labels.push_back(lambda.to_string());
      } else if (space == "words") {
        for (const auto& w : enumerate_words(et.n, et.q)) labels.push_back(w.to_string());
      } else {
        labels = build_chain(space == "gamma" ? ChainKind::dasep : ChainKind::cbp, et.n, et.p, et.q).states();
      }
      std::ostringstream text;
      for (const auto& l : labels) text << l << '\n';
      emit(out, out_path, text.str());
      return kSuccess;
    }
    if (*matrix) {
      emit(out, out_path, export_matrix_json(build_chain(parse_chain_kind(chain), mt.n, mt.p, mt.q)));
      return kSuccess;
    }
    if (*dot) {
      emit(out, out_path, export_dot(build_chain(parse_chain_kind(chain), dt.n, dt.p, dt.q)));
      return kSuccess;
    }
    if (*stationary) {
      const TransitionSystem sys = build_chain(parse_chain_kind(chain), st.n, st.p, st.q);
      const SolverOptions options = SolverOptions::from_env();
      if (normalize == "prob" && at.empty()) throw Error(ErrorCode::InvalidParams, "--normalize prob needs --at U T");
      if (!at.empty() && !symbolic) {
        if (normalize == "gcd" && stationary->count("--normalize") > 0)
          throw Error(ErrorCode::InvalidParams, "--normalize gcd applies to symbolic output");
        const auto [u0, t0] = parse_point(at);
        emit(out, out_path, solve_stationary_at_point(sys, u0, t0).to_json());
        return kSuccess;
      }
      StationaryVector pi = solve_stationary_symbolic(sys, options);
      if (normalize == "prob") {
        const auto [u0, t0] = parse_point(at);
        pi = evaluate_normalized(pi, u0, t0);
      }
      emit(out, out_path, pi.to_json());
      return kSuccess;
    }
    if (*simulate_cmd) {
      const TransitionSystem sys = build_chain(parse_chain_kind(chain), mc.n, mc.p, mc.q);
      std::tie(cfg.u0, cfg.t0) = parse_point(sim_at);
      if (!start.empty()) cfg.start = start;
      const EmpiricalDistribution result = simulate(sys, cfg);
      if (format == "csv") {
        emit(out, out_path, result.to_csv());
        return kSuccess;
      }
      std::optional<Distribution> reference;
      if (compare)
        reference = exact_distribution(solve_stationary_at_point(sys, cfg.u0, cfg.t0), cfg.u0, cfg.t0);
      emit(out, out_path, simulation_summary_json(sys, cfg, result, reference));
      return kSuccess;
    }
    if (*verify) {
      SolverOptions options = SolverOptions::from_env();
      if (std::getenv("DASEP_STATE_CAP") == nullptr) options.state_cap = kSuiteStateCap;
      SolutionCache cache(options);
      std::vector<Triple> triples;
      std::vector<int> n22_sizes;
      if (vt.n > 0 && vt.p > 0 && vt.q > 0) {
        triples.push_back(vt);
      } else if (vt.p > 0 || vt.q > 0) {
        throw Error(ErrorCode::InvalidParams, "give all of -n -p -q, or none for the default grid");
      } else {
        triples = grid(max_n, max_p, max_q);
      }
      if (vt.n > 0) {
        n22_sizes.push_back(vt.n);
      } else {
        for (int n = 3; n <= n22_max; ++n) n22_sizes.push_back(n);
      }
      const auto reports = run_suite(suite, triples, n22_sizes, fixtures, cache);
      nlohmann::ordered_json doc = nlohmann::ordered_json::array();
      bool pass = true;
      for (const auto& r : reports) {
        doc.push_back(nlohmann::ordered_json::parse(r.to_json()));
        pass = pass && r.pass;
        err << (r.pass ? "PASS " : "FAIL ") << r.theorem;
        for (const auto& [k, v] : r.params) err << ' ' << k << '=' << v;
        err << '\n';
      }
      emit(out, out_path, doc.dump(2));
      return pass ? kSuccess : kFailure;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::InvalidParams:
      case ErrorCode::InvalidN:
      case ErrorCode::ParseError:
        return kUsage;
      default:
        return kFailure;
    }
  }
  return kUsage;
}

}  // namespace

int run(int argc, char** argv) { return dispatch(argc, argv, std::cout, std::cerr); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"dasep"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace dasep::cli
