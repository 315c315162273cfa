// Command-line surface for weighted degenerate-set selection, incentive
// assignment, exact oracles, and the extremal census.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dgs/bounds.hpp"
#include "dgs/degeneracy.hpp"
#include "dgs/extremal.hpp"
#include "dgs/graph_io.hpp"
#include "dgs/greedy.hpp"
#include "dgs/instance.hpp"
#include "dgs/oracle.hpp"
#include "dgs/smallgraphs.hpp"

using json = nlohmann::ordered_json;
using namespace dgs;

namespace {

constexpr std::uint64_t kDefaultSeed = 42;
constexpr const char* kSchemaVersion = "1";

struct CommonOpts {
  std::string graph_path;
  std::string format = "el";  // el | g6
  std::string c_spec = "const:1";
  std::string kappa_spec = "const:0";
  int cap = kDefaultOracleCap;
  std::string output = "json";  // json | text | csv
};

Graph load_graph(const CommonOpts& opts) {
  std::ifstream in(opts.graph_path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + opts.graph_path);
  if (opts.format == "g6") {
    std::string line;
    do {
      if (!std::getline(in, line)) throw std::invalid_argument("empty graph6 file");
    } while (line.empty());
    return parse_graph6(line);
  }
  if (opts.format != "el") throw std::invalid_argument("unknown format: " + opts.format);
  auto parsed = parse_edge_list(in);
  if (parsed.duplicate_edges > 0)
    std::cerr << "warning: collapsed " << parsed.duplicate_edges
              << " duplicate edge line(s)\n";
  return std::move(parsed.graph);
}

std::vector<Rational> resolve_c(const std::string& spec, const Graph& g) {
  const int n = g.vertex_count();
  if (spec.rfind("const:", 0) == 0)
    return std::vector<Rational>(n, parse_rational(spec.substr(6)));
  if (spec.rfind("file:", 0) == 0) {
    std::ifstream in(spec.substr(5));
    if (!in) throw std::invalid_argument("cannot open profile file: " + spec.substr(5));
    return parse_profile_file(in, n).c;
  }
  if (spec == "ascending") {
    std::vector<Rational> c(n);
    for (int u = 0; u < n; ++u) c[u] = u + 1;
    return c;
  }
  if (spec == "last-heavier") {
    std::vector<Rational> c(n, Rational(1));
    if (n > 0) c[n - 1] = 2;
    return c;
  }
  throw std::invalid_argument("bad weight spec: " + spec);
}

std::vector<int> resolve_kappa(const std::string& spec, const Graph& g) {
  const int n = g.vertex_count();
  if (spec == "full") {
    std::vector<int> k(n);
    for (int u = 0; u < n; ++u) k[u] = g.degree(u);
    return k;
  }
  if (spec.rfind("const:", 0) == 0)
    return std::vector<int>(n, std::stoi(spec.substr(6)));
  if (spec.rfind("file:", 0) == 0) {
    std::ifstream in(spec.substr(5));
    if (!in) throw std::invalid_argument("cannot open profile file: " + spec.substr(5));
    return parse_profile_file(in, n).kappa;
  }
  throw std::invalid_argument("bad kappa spec: " + spec);
}

Instance load_instance(const CommonOpts& opts) {
  Graph g = load_graph(opts);
  auto c = resolve_c(opts.c_spec, g);
  auto kappa = resolve_kappa(opts.kappa_spec, g);
  return make_instance(std::move(g), std::move(c), std::move(kappa));
}

json rational_json(const Rational& r) {
  return json{{"value", rational_str(r)}, {"decimal", rational_to_double(r)}};
}

json rationals_json(const std::vector<Rational>& values) {
  json arr = json::array();
  for (const auto& r : values) arr.push_back(rational_str(r));
  return arr;
}

void emit(const json& doc, const std::string& output) {
  if (output == "json") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  // Flattened key=value rendering for text/csv.
  const char* sep = output == "csv" ? "," : ": ";
  const auto flat = doc.flatten();
  for (const auto& [key, value] : flat.items())
    std::cout << key << sep << (value.is_string() ? value.get<std::string>() : value.dump())
              << "\n";
}

json witness_json(const DegenWitness& w) {
  return json(w.order);
}

json incentives_json(const IncentiveAssignment& a) {
  return json{{"iota", a.iota},
              {"ordering", a.ordering},
              {"cost", rational_json(a.cost)}};
}

std::vector<int> parse_vertex_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    out.push_back(std::stoi(token));
  }
  return out;
}

CLI::App* add_common(CLI::App& app, const std::string& name, const std::string& desc,
                     CommonOpts& opts, bool needs_graph = true) {
  auto* sub = app.add_subcommand(name, desc);
  auto* g = sub->add_option("--graph", opts.graph_path, "graph file");
  if (needs_graph) g->required();
  sub->add_option("--format", opts.format, "graph format: el or g6");
  sub->add_option("--c", opts.c_spec, "weights: const:<r>, file:<p>, ascending, last-heavier");
  sub->add_option("--kappa", opts.kappa_spec, "capacities: const:<k>, file:<p>, full");
  sub->add_option("--cap", opts.cap, "oracle vertex cap");
  sub->add_option("--output", opts.output, "output format: json, text, csv");
  return sub;
}

json base_doc(const Instance& inst) {
  return json{{"schema_version", kSchemaVersion},
              {"n", inst.size()},
              {"m", inst.graph.edge_count()}};
}

int run(int argc, char** argv) {
  CLI::App app{"weighted degenerate sets, dynamic monopolies, and partial incentives"};
  app.require_subcommand(1);

  CommonOpts opts;

  auto* cmd_bounds = add_common(app, "bounds", "closed-form alpha/beta bounds", opts);
  auto* cmd_greedy_set = add_common(app, "greedy-set", "greedy degenerate set meeting the alpha bound", opts);
  auto* cmd_greedy_inc = add_common(app, "greedy-incentives", "greedy incentives meeting the beta bound", opts);

  std::string which = "alpha-set";
  std::uint64_t samples = 100000;
  std::uint64_t seed = kDefaultSeed;
  auto* cmd_sample = add_common(app, "sample", "Monte Carlo estimate over random orderings", opts);
  cmd_sample->add_option("--which", which, "alpha-set or incentives");
  cmd_sample->add_option("--samples", samples, "sample count");
  cmd_sample->add_option("--seed", seed, "RNG seed (default 42)");

  auto* cmd_expect = add_common(app, "enumerate-expect", "exact expectation over all n! orderings", opts);
  cmd_expect->add_option("--which", which, "alpha-set or incentives");

  auto* cmd_alpha = add_common(app, "exact-alpha", "exact maximum-weight degenerate set", opts);
  auto* cmd_beta = add_common(app, "exact-beta", "exact minimum incentive cost", opts);

  std::string set_spec;
  auto* cmd_check = add_common(app, "check-set", "certify kappa-degeneracy of a vertex set", opts);
  cmd_check->add_option("--set", set_spec, "comma-separated vertex list")->required();

  std::string seed_spec;
  auto* cmd_sim = add_common(app, "simulate", "threshold activation from a seed set", opts);
  cmd_sim->add_option("--seeds", seed_spec, "comma-separated seed vertices");

  auto* cmd_verify = add_common(app, "verify", "bounds, oracles, and extremal predicates", opts);

  int n_min = 2, n_max = 5, jobs = 1;
  std::string kappa_mode = "all", theorems = "both", census_graphs;
  std::vector<std::string> c_profiles;
  bool claims = false, all_graphs = false;
  auto* cmd_census = add_common(app, "census", "exhaustive extremal verification", opts, false);
  cmd_census->add_option("--n-min", n_min, "minimum order (labeled enumeration)");
  cmd_census->add_option("--n-max", n_max, "maximum order");
  cmd_census->add_option("--graphs", census_graphs, "graph6 corpus file (overrides enumeration)");
  cmd_census->add_option("--kappa-mode", kappa_mode, "all or const");
  cmd_census->add_option("--c-profile", c_profiles,
                         "repeatable: const:<r>, ascending, last-heavier");
  cmd_census->add_option("--theorems", theorems, "1, 2, or both");
  cmd_census->add_flag("--claims", claims, "also verify initial/terminal vertices and potentials");
  cmd_census->add_flag("--all-graphs", all_graphs, "include disconnected graphs");
  cmd_census->add_option("--jobs", jobs, "worker threads");

  std::string to_format = "g6";
  auto* cmd_convert = add_common(app, "convert", "convert between edge-list and graph6", opts);
  cmd_convert->add_option("--to", to_format, "target format: el or g6");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (*cmd_bounds) {
    const auto inst = load_instance(opts);
    const auto a = bound_alpha(inst);
    const auto b = bound_beta(inst);
    json doc = base_doc(inst);
    doc["alpha_bound"] = rational_json(a.total);
    doc["alpha_bound"]["per_vertex"] = rationals_json(a.per_vertex);
    doc["beta_bound"] = rational_json(b.total);
    doc["beta_bound"]["per_vertex"] = rationals_json(b.per_vertex);
    emit(doc, opts.output);
  } else if (*cmd_greedy_set) {
    const auto inst = load_instance(opts);
    const auto res = greedy_degenerate_set(inst);
    const auto bound = bound_alpha(inst).total;
    if (res.weight < bound) throw std::logic_error("greedy set below the alpha bound");
    json doc = base_doc(inst);
    doc["witness"] = witness_json(res.witness);
    doc["weight"] = rational_json(res.weight);
    doc["alpha_bound"] = rational_json(bound);
    emit(doc, opts.output);
  } else if (*cmd_greedy_inc) {
    const auto inst = load_instance(opts);
    const auto res = greedy_incentives(inst);
    const auto bound = bound_beta(inst).total;
    if (res.cost > bound) throw std::logic_error("greedy incentives above the beta bound");
    std::vector<int> caps(inst.size());
    for (int u = 0; u < inst.size(); ++u) caps[u] = inst.kappa[u] + res.iota[u];
    if (!ordering_certifies(inst.graph, caps, res.ordering))
      throw std::logic_error("greedy incentive ordering fails certification");
    json doc = base_doc(inst);
    doc["incentives"] = incentives_json(res);
    doc["beta_bound"] = rational_json(bound);
    emit(doc, opts.output);
  } else if (*cmd_sample) {
    const auto inst = load_instance(opts);
    const auto objective =
        which == "incentives" ? Objective::Incentives : Objective::DegenerateSet;
    const auto res = monte_carlo_estimate(inst, objective, samples, seed);
    json doc = base_doc(inst);
    doc["which"] = which;
    doc["samples"] = res.samples;
    doc["seed"] = seed;
    doc["mean"] = rational_json(res.mean_exact);
    doc["best_value"] = rational_json(res.best_value);
    if (objective == Objective::DegenerateSet)
      doc["best_set"] = witness_json(res.best_set);
    else
      doc["best_incentives"] = incentives_json(res.best_incentives);
    emit(doc, opts.output);
  } else if (*cmd_expect) {
    const auto inst = load_instance(opts);
    const auto objective =
        which == "incentives" ? Objective::Incentives : Objective::DegenerateSet;
    json doc = base_doc(inst);
    doc["which"] = which;
    doc["expectation"] = rational_json(expectation_by_enumeration(inst, objective));
    emit(doc, opts.output);
  } else if (*cmd_alpha) {
    const auto inst = load_instance(opts);
    const auto res = exact_alpha(inst, opts.cap);
    json doc = base_doc(inst);
    doc["alpha"] = rational_json(res.value);
    doc["witness"] = witness_json(res.witness);
    emit(doc, opts.output);
  } else if (*cmd_beta) {
    const auto inst = load_instance(opts);
    const auto res = exact_beta(inst, opts.cap);
    json doc = base_doc(inst);
    doc["beta"] = rational_json(res.value);
    doc["incentives"] = incentives_json(res.assignment);
    emit(doc, opts.output);
  } else if (*cmd_check) {
    const auto inst = load_instance(opts);
    const auto res = check_degenerate(inst, parse_vertex_list(set_spec));
    json doc = base_doc(inst);
    doc["degenerate"] = res.degenerate;
    if (res.degenerate)
      doc["witness"] = json(res.order);
    else
      doc["stuck"] = json(res.stuck);
    emit(doc, opts.output);
  } else if (*cmd_sim) {
    const auto inst = load_instance(opts);
    const auto tau = dual_threshold(inst);
    const auto res = simulate_activation(inst.graph, tau, parse_vertex_list(seed_spec));
    std::vector<int> final_set;
    for (int u = 0; u < inst.size(); ++u)
      if (res.active[u]) final_set.push_back(u);
    json doc = base_doc(inst);
    doc["tau"] = tau;
    doc["final_active"] = final_set;
    doc["rounds"] = res.rounds;
    doc["is_dynamic_monopoly"] = static_cast<int>(final_set.size()) == inst.size();
    emit(doc, opts.output);
  } else if (*cmd_verify) {
    const auto inst = load_instance(opts);
    const auto rep = verify_instance(inst, opts.cap);
    json doc = base_doc(inst);
    doc["alpha_bound"] = rational_json(rep.alpha_bound);
    doc["alpha_exact"] = rational_json(rep.alpha_exact);
    doc["beta_bound"] = rational_json(rep.beta_bound);
    doc["beta_exact"] = rational_json(rep.beta_exact);
    doc["alpha_equality"] = rep.alpha_equality;
    doc["beta_equality"] = rep.beta_equality;
    doc["t1_predicate"] = rep.t1_predicate;
    doc["t2_predicate"] = rep.t2_predicate;
    doc["t1_agrees"] = rep.t1_agrees;
    doc["t2_agrees"] = rep.t2_agrees;
    json t1c = json::array(), t2c = json::array();
    for (auto c : rep.t1_cases) t1c.push_back(component_case_name(c));
    for (auto c : rep.t2_cases) t2c.push_back(component_case_name(c));
    doc["t1_cases"] = t1c;
    doc["t2_cases"] = t2c;
    emit(doc, opts.output);
  } else if (*cmd_census) {
    CensusConfig cfg;
    cfg.n_min = n_min;
    cfg.n_max = n_max;
    cfg.connected_only = !all_graphs;
    cfg.kappa_mode = kappa_mode == "const" ? CensusConfig::KappaMode::ConstantOnly
                                           : CensusConfig::KappaMode::AllProfiles;
    cfg.check_theorem1 = theorems == "1" || theorems == "both";
    cfg.check_theorem2 = theorems == "2" || theorems == "both";
    cfg.check_claims = claims;
    cfg.jobs = jobs;
    cfg.oracle_cap = opts.cap;
    for (const auto& spec : c_profiles) {
      CProfileSpec p;
      if (spec.rfind("const:", 0) == 0) {
        p.kind = CProfileSpec::Kind::Constant;
        p.constant = parse_rational(spec.substr(6));
      } else if (spec == "ascending") {
        p.kind = CProfileSpec::Kind::Ascending;
      } else if (spec == "last-heavier") {
        p.kind = CProfileSpec::Kind::LastHeavier;
      } else {
        throw std::invalid_argument("bad census weight profile: " + spec);
      }
      cfg.c_profiles.push_back(std::move(p));
    }
    std::ifstream corpus;
    if (!census_graphs.empty()) {
      corpus.open(census_graphs);
      if (!corpus) throw std::invalid_argument("cannot open corpus: " + census_graphs);
      cfg.source = CensusConfig::Source::Graph6Stream;
      cfg.graph6_input = &corpus;
    }
    const auto summary = enumerate_and_verify(cfg);
    if (opts.output == "json") {
      json doc{{"schema_version", kSchemaVersion},
               {"graphs", summary.graphs},
               {"instances", summary.instances},
               {"malformed_lines", summary.malformed_lines},
               {"extremal_counts", summary.extremal_counts},
               {"claims_checked", summary.claims_checked},
               {"claims_violations", summary.claims_violations},
               {"claim_failures", summary.claim_failures},
               {"disagreements", summary.disagreements}};
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << census_text_summary(summary);
    }
    if (!summary.disagreements.empty() || summary.claims_violations > 0) return 3;
  } else if (*cmd_convert) {
    const Graph g = load_graph(opts);
    if (to_format == "g6")
      std::cout << encode_graph6(g) << "\n";
    else if (to_format == "el")
      std::cout << to_edge_list(g);
    else
      throw std::invalid_argument("unknown target format: " + to_format);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
