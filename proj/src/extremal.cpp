#include "dgs/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "dgs/bounds.hpp"
#include "dgs/graph_io.hpp"
#include "dgs/smallgraphs.hpp"

namespace dgs {

const char* component_case_name(ComponentCase c) {
  switch (c) {
    case ComponentCase::CaseI: return "i";
    case ComponentCase::CaseII: return "ii";
    case ComponentCase::CaseIII: return "iii";
    default: return "none";
  }
}

namespace {

bool is_clique_component(const Graph& g, const std::vector<int>& comp) {
  const int k = static_cast<int>(comp.size());
  for (int u : comp)
    if (g.degree(u) != k - 1) return false;
  return true;
}

bool constant_on(const std::vector<Rational>& values, const std::vector<int>& comp) {
  for (int u : comp)
    if (values[u] != values[comp[0]]) return false;
  return true;
}

bool constant_on(const std::vector<int>& values, const std::vector<int>& comp) {
  for (int u : comp)
    if (values[u] != values[comp[0]]) return false;
  return true;
}

bool full_capacity_on(const Graph& g, const std::vector<int>& kappa,
                      const std::vector<int>& comp) {
  for (int u : comp)
    if (kappa[u] != g.degree(u)) return false;
  return true;
}

ComponentCase t1_component_case(const Graph& g, const std::vector<Rational>& c,
                                const std::vector<int>& kappa,
                                const std::vector<int>& comp, bool clique) {
  if (full_capacity_on(g, kappa, comp)) return ComponentCase::CaseI;
  if (clique && constant_on(c, comp) && constant_on(kappa, comp))
    return ComponentCase::CaseII;
  return ComponentCase::None;
}

ComponentCase t2_component_case(const Graph& g, const std::vector<Rational>& c,
                                const std::vector<int>& kappa,
                                const std::vector<int>& comp, bool clique) {
  if (full_capacity_on(g, kappa, comp)) return ComponentCase::CaseI;
  const bool kappa_zero =
      std::all_of(comp.begin(), comp.end(), [&](int u) { return kappa[u] == 0; });
  if (constant_on(c, comp) && kappa_zero) return ComponentCase::CaseII;
  const int order = static_cast<int>(comp.size());
  if (clique && constant_on(c, comp) && constant_on(kappa, comp) &&
      kappa[comp[0]] > 0 && kappa[comp[0]] < order - 1)
    return ComponentCase::CaseIII;
  return ComponentCase::None;
}

PredicateResult predicate_for(const Instance& inst, bool theorem1) {
  PredicateResult result;
  result.holds = true;
  for (const auto& comp : inst.graph.components()) {
    const bool clique = is_clique_component(inst.graph, comp);
    const ComponentCase c =
        theorem1 ? t1_component_case(inst.graph, inst.c, inst.kappa, comp, clique)
                 : t2_component_case(inst.graph, inst.c, inst.kappa, comp, clique);
    result.component_cases.push_back(c);
    if (c == ComponentCase::None) result.holds = false;
  }
  return result;
}

}  // namespace

PredicateResult theorem1_predicate(const Instance& inst) { return predicate_for(inst, true); }
PredicateResult theorem2_predicate(const Instance& inst) { return predicate_for(inst, false); }

ExtremalReport verify_instance(const Instance& inst, int cap) {
  ExtremalReport report;
  report.alpha_bound = bound_alpha(inst).total;
  report.beta_bound = bound_beta(inst).total;
  report.alpha_exact = exact_alpha(inst, cap).value;
  report.beta_exact = exact_beta(inst, cap).value;
  report.alpha_equality = report.alpha_exact == report.alpha_bound;
  report.beta_equality = report.beta_exact == report.beta_bound;
  auto p1 = theorem1_predicate(inst);
  auto p2 = theorem2_predicate(inst);
  report.t1_predicate = p1.holds;
  report.t2_predicate = p2.holds;
  report.t1_cases = std::move(p1.component_cases);
  report.t2_cases = std::move(p2.component_cases);
  report.t1_agrees = report.alpha_equality == report.t1_predicate;
  report.t2_agrees = report.beta_equality == report.t2_predicate;
  return report;
}

std::string CProfileSpec::name() const {
  switch (kind) {
    case Kind::Constant: return "const:" + rational_str(constant);
    case Kind::Ascending: return "ascending";
    case Kind::LastHeavier: return "last-heavier";
    default: return "explicit";
  }
}

std::vector<Rational> CProfileSpec::materialize(int n) const {
  std::vector<Rational> c(n, Rational(1));
  switch (kind) {
    case Kind::Constant:
      c.assign(n, constant);
      break;
    case Kind::Ascending:
      for (int u = 0; u < n; ++u) c[u] = u + 1;
      break;
    case Kind::LastHeavier:
      if (n > 0) c[n - 1] = 2;
      break;
    case Kind::Explicit:
      for (int u = 0; u < n && u < static_cast<int>(values.size()); ++u) c[u] = values[u];
      break;
  }
  return c;
}

std::string instance_dump(const Instance& inst, const std::string& note) {
  std::ostringstream out;
  const Graph& g = inst.graph;
  if (g.vertex_count() < 63) out << "graph6 " << encode_graph6(g) << " | ";
  out << "edges " << g.vertex_count() << " " << g.edge_count();
  for (auto [u, v] : g.edges()) out << " " << u << "-" << v;
  out << " | c";
  for (const auto& w : inst.c) out << " " << rational_str(w);
  out << " | kappa";
  for (int k : inst.kappa) out << " " << k;
  if (!note.empty()) out << " | " << note;
  return out.str();
}

namespace {

std::string count_key(int n, const char* theorem, const std::string& label) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "n=%02d", n);
  return std::string(buf) + " " + theorem + " case=" + label;
}

std::string cases_label(const std::vector<ComponentCase>& cases) {
  std::vector<std::string> names;
  for (ComponentCase c : cases) names.push_back(component_case_name(c));
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  std::string label;
  for (const auto& s : names) {
    if (!label.empty()) label += "+";
    label += s;
  }
  return label;
}

// Peeling restricted to bitmask graphs: is the whole vertex set degenerate?
bool full_set_degenerate(const std::vector<std::uint64_t>& masks,
                         const std::vector<int>& kappa, int n) {
  std::uint64_t residual = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  while (residual) {
    bool changed = false;
    for (std::uint64_t scan = residual; scan; scan &= scan - 1) {
      const int u = __builtin_ctzll(scan);
      if (__builtin_popcountll(masks[u] & residual) <= kappa[u]) {
        residual &= ~(std::uint64_t{1} << u);
        changed = true;
      }
    }
    if (!changed) return false;
  }
  return true;
}

struct LocalSummary {
  std::uint64_t graphs = 0, instances = 0;
  std::map<std::string, std::uint64_t> extremal_counts;
  std::vector<std::pair<std::uint64_t, std::string>> disagreements;
  std::uint64_t claims_checked = 0, claims_violations = 0;
  std::vector<std::pair<std::uint64_t, std::string>> claim_failures;
};

struct GraphTask {
  Graph graph;
  std::uint64_t order = 0;  // deterministic sort key for reported items
};

class CensusEngine {
 public:
  CensusEngine(const CensusConfig& cfg) : cfg_(cfg) {
    profiles_ = cfg.c_profiles;
    if (profiles_.empty()) profiles_.push_back(CProfileSpec{});
  }

  void process_graph(const GraphTask& task, LocalSummary& out) const {
    const Graph& g = task.graph;
    const int n = g.vertex_count();
    if (n > cfg_.oracle_cap || n > 32)
      throw std::invalid_argument("census graph exceeds oracle cap");
    ++out.graphs;
    if (n == 0) return;

    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> masks(n);
    std::vector<int> deg(n);
    for (int u = 0; u < n; ++u) {
      masks[u] = g.neighbor_mask(u);
      deg[u] = g.degree(u);
    }
    const auto comps = g.components();
    std::vector<char> clique(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i)
      clique[i] = is_clique_component(g, comps[i]);
    int min_deg = n > 0 ? *std::min_element(deg.begin(), deg.end()) : 0;

    std::vector<char> flags(full + 1);
    std::vector<Rational> beta_table(cfg_.check_theorem2 ? full + 1 : 0);

    for (std::size_t c_idx = 0; c_idx < profiles_.size(); ++c_idx) {
      const auto cvec = profiles_[c_idx].materialize(n);

      // Per-vertex bound terms for every capacity value, plus step deltas.
      std::vector<std::vector<Rational>> fterm(n), gterm(n);
      for (int u = 0; u < n; ++u) {
        fterm[u].resize(deg[u] + 1);
        gterm[u].resize(deg[u] + 1);
        for (int k = 0; k <= deg[u]; ++k) {
          fterm[u][k] = cvec[u] * (k + 1) / (deg[u] + 1);
          const int slack = deg[u] - k;
          gterm[u][k] = cvec[u] * slack * (slack + 1) / (2 * (deg[u] + 1));
        }
      }

      // Subset weights, sorted heaviest-first, shared by every kappa profile.
      std::vector<Rational> weight;
      std::vector<std::uint32_t> heavy_order;
      if (cfg_.check_theorem1) {
        weight.resize(full + 1);
        for (std::uint64_t s = 1; s <= full; ++s)
          weight[s] = weight[s & (s - 1)] + cvec[__builtin_ctzll(s)];
        heavy_order.resize(full + 1);
        std::iota(heavy_order.begin(), heavy_order.end(), 0);
        std::sort(heavy_order.begin(), heavy_order.end(),
                  [&](std::uint32_t a, std::uint32_t b) {
                    if (weight[a] != weight[b]) return weight[a] > weight[b];
                    return a < b;
                  });
      }

      std::vector<int> kappa(n, 0);
      Rational f = 0, gval = 0;
      for (int u = 0; u < n; ++u) {
        f += fterm[u][0];
        gval += gterm[u][0];
      }
      std::uint64_t kappa_counter = 0;

      auto item_key = [&](std::uint64_t kc) {
        return ((task.order * 8 + c_idx) << 34) | kc;
      };

      auto evaluate = [&]() {
        ++out.instances;
        if (cfg_.check_theorem1) {
          const Rational* alpha = nullptr;
          if (full_set_degenerate(masks, kappa, n)) {
            alpha = &weight[full];
          } else {
            flags[0] = 1;
            for (std::uint64_t s = 1; s <= full; ++s) {
              flags[s] = 0;
              for (std::uint64_t rest = s; rest; rest &= rest - 1) {
                const int v = __builtin_ctzll(rest);
                const std::uint64_t without = s & ~(std::uint64_t{1} << v);
                if (flags[without] &&
                    __builtin_popcountll(masks[v] & without) <= kappa[v]) {
                  flags[s] = 1;
                  break;
                }
              }
            }
            for (std::uint32_t s : heavy_order)
              if (flags[s]) {
                alpha = &weight[s];
                break;
              }
          }
          const bool equality = (*alpha == f);
          bool pred = true;
          std::vector<ComponentCase> cases(comps.size());
          for (std::size_t i = 0; i < comps.size(); ++i) {
            cases[i] = t1_component_case(g, cvec, kappa, comps[i], clique[i]);
            if (cases[i] == ComponentCase::None) pred = false;
          }
          if (equality != pred) {
            Instance inst{g, cvec, kappa};
            out.disagreements.emplace_back(
                item_key(kappa_counter),
                instance_dump(inst, "theorem1: alpha=" + rational_str(*alpha) +
                                        " bound=" + rational_str(f) + " predicate=" +
                                        (pred ? "true" : "false")));
          }
          if (equality) {
            ++out.extremal_counts[count_key(n, "t1", cases_label(cases))];
            if (cfg_.check_claims)
              check_claims_t1(g, cvec, kappa, *alpha, comps, item_key(kappa_counter), out);
          }
        }
        if (cfg_.check_theorem2) {
          beta_table[0] = 0;
          for (std::uint64_t s = 1; s <= full; ++s) {
            bool first = true;
            for (std::uint64_t rest = s; rest; rest &= rest - 1) {
              const int v = __builtin_ctzll(rest);
              const std::uint64_t without = s & ~(std::uint64_t{1} << v);
              const int charge = __builtin_popcountll(masks[v] & without) - kappa[v];
              Rational cand = beta_table[without];
              if (charge > 0) cand += cvec[v] * charge;
              if (first || cand < beta_table[s]) {
                beta_table[s] = std::move(cand);
                first = false;
              }
            }
          }
          const Rational& beta = beta_table[full];
          const bool equality = (beta == gval);
          bool pred = true;
          std::vector<ComponentCase> cases(comps.size());
          for (std::size_t i = 0; i < comps.size(); ++i) {
            cases[i] = t2_component_case(g, cvec, kappa, comps[i], clique[i]);
            if (cases[i] == ComponentCase::None) pred = false;
          }
          if (equality != pred) {
            Instance inst{g, cvec, kappa};
            out.disagreements.emplace_back(
                item_key(kappa_counter),
                instance_dump(inst, "theorem2: beta=" + rational_str(beta) +
                                        " bound=" + rational_str(gval) + " predicate=" +
                                        (pred ? "true" : "false")));
          }
          if (equality) {
            ++out.extremal_counts[count_key(n, "t2", cases_label(cases))];
            if (cfg_.check_claims) check_claims_t2(g, cvec, kappa, beta, comps, cases,
                                                   item_key(kappa_counter), out);
          }
        }
      };

      if (cfg_.kappa_mode == CensusConfig::KappaMode::ConstantOnly) {
        for (int k = 0; k <= min_deg; ++k) {
          if (k > 0) {
            for (int u = 0; u < n; ++u) {
              f += fterm[u][k] - fterm[u][k - 1];
              gval += gterm[u][k] - gterm[u][k - 1];
              kappa[u] = k;
            }
          }
          evaluate();
          ++kappa_counter;
        }
      } else {
        while (true) {
          evaluate();
          ++kappa_counter;
          int i = 0;
          for (; i < n; ++i) {
            if (kappa[i] < deg[i]) {
              ++kappa[i];
              f += fterm[i][kappa[i]] - fterm[i][kappa[i] - 1];
              gval += gterm[i][kappa[i]] - gterm[i][kappa[i] - 1];
              break;
            }
            f += fterm[i][0] - fterm[i][deg[i]];
            gval += gterm[i][0] - gterm[i][deg[i]];
            kappa[i] = 0;
          }
          if (i == n) break;
        }
      }
    }
  }

 private:
  void check_claims_t1(const Graph& g, const std::vector<Rational>& cvec,
                       const std::vector<int>& kappa, const Rational& alpha,
                       const std::vector<std::vector<int>>& comps,
                       std::uint64_t key, LocalSummary& out) const {
    ++out.claims_checked;
    Instance inst{g, cvec, kappa};
    std::string failure;
    for (int u = 0; u < inst.size() && failure.empty(); ++u) {
      const auto red = reduce_initial(inst, u);
      if (alpha != cvec[u] + exact_alpha(red.instance, cfg_.oracle_cap).value)
        failure = "vertex " + std::to_string(u) + " not initial";
    }
    if (failure.empty()) failure = potential_constancy_failure(inst, comps, true);
    if (!failure.empty()) {
      ++out.claims_violations;
      out.claim_failures.emplace_back(key, instance_dump(inst, "claims(t1): " + failure));
    }
  }

  void check_claims_t2(const Graph& g, const std::vector<Rational>& cvec,
                       const std::vector<int>& kappa, const Rational& beta,
                       const std::vector<std::vector<int>>& comps,
                       const std::vector<ComponentCase>& cases, std::uint64_t key,
                       LocalSummary& out) const {
    ++out.claims_checked;
    Instance inst{g, cvec, kappa};
    std::string failure;
    for (int u = 0; u < inst.size() && failure.empty(); ++u) {
      const auto red = reduce_terminal(inst, u);
      const Rational rest = exact_beta(red.instance, cfg_.oracle_cap).value;
      if (beta != cvec[u] * (g.degree(u) - kappa[u]) + rest)
        failure = "vertex " + std::to_string(u) + " not terminal";
    }
    if (failure.empty()) failure = potential_constancy_failure(inst, comps, false);
    if (failure.empty() && comps.size() == 1 && inst.size() >= 3 &&
        cases[0] != ComponentCase::CaseII) {
      const auto g0 = potential_h2(inst, comps[0][0]);
      if (g0 && *g0 > 0) {
        for (int u = 0; u < inst.size(); ++u)
          if (inst.kappa[u] == 0) {
            failure = "kappa(" + std::to_string(u) + ")=0 despite positive potential";
            break;
          }
      }
    }
    if (!failure.empty()) {
      ++out.claims_violations;
      out.claim_failures.emplace_back(key, instance_dump(inst, "claims(t2): " + failure));
    }
  }

  static std::string potential_constancy_failure(const Instance& inst,
                                                 const std::vector<std::vector<int>>& comps,
                                                 bool alpha_side) {
    for (const auto& comp : comps) {
      bool all_positive = true;
      for (int u : comp)
        if (inst.graph.degree(u) == 0) all_positive = false;
      if (!all_positive) continue;
      const auto ref = alpha_side ? potential_h1(inst, comp[0]) : potential_h2(inst, comp[0]);
      for (int u : comp) {
        const auto h = alpha_side ? potential_h1(inst, u) : potential_h2(inst, u);
        if (h != ref)
          return std::string(alpha_side ? "h1" : "h2") + " not constant on component";
      }
    }
    return {};
  }

  const CensusConfig& cfg_;
  std::vector<CProfileSpec> profiles_;

 public:
  const std::vector<CProfileSpec>& profiles() const { return profiles_; }
};

}  // namespace

CensusSummary enumerate_and_verify(const CensusConfig& config) {
  CensusSummary summary;
  CensusEngine engine(config);

  std::vector<GraphTask> tasks;
  if (config.source == CensusConfig::Source::LabeledEnumeration) {
    std::uint64_t order = 0;
    for (int n = config.n_min; n <= config.n_max; ++n) {
      for_each_labeled_graph(n, config.connected_only, [&](const Graph& g) {
        tasks.push_back(GraphTask{g, order++});
      });
    }
  } else {
    if (config.graph6_input == nullptr)
      throw std::invalid_argument("graph6 census requires an input stream");
    std::string line;
    std::uint64_t order = 0;
    while (std::getline(*config.graph6_input, line)) {
      if (line.empty()) continue;
      try {
        tasks.push_back(GraphTask{parse_graph6(line), order++});
      } catch (const std::invalid_argument&) {
        ++summary.malformed_lines;
      }
    }
  }

  const int jobs = std::max(1, config.jobs);
  std::vector<LocalSummary> locals(jobs);
  if (jobs == 1) {
    for (const auto& task : tasks) engine.process_graph(task, locals[0]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= tasks.size()) break;
          engine.process_graph(tasks[i], locals[w]);
        }
      });
    }
    for (auto& t : workers) t.join();
  }

  std::vector<std::pair<std::uint64_t, std::string>> disagreements, failures;
  for (const auto& local : locals) {
    summary.graphs += local.graphs;
    summary.instances += local.instances;
    summary.claims_checked += local.claims_checked;
    summary.claims_violations += local.claims_violations;
    for (const auto& [key, count] : local.extremal_counts)
      summary.extremal_counts[key] += count;
    disagreements.insert(disagreements.end(), local.disagreements.begin(),
                         local.disagreements.end());
    failures.insert(failures.end(), local.claim_failures.begin(),
                    local.claim_failures.end());
  }
  std::sort(disagreements.begin(), disagreements.end());
  std::sort(failures.begin(), failures.end());
  for (auto& [key, text] : disagreements) summary.disagreements.push_back(std::move(text));
  for (auto& [key, text] : failures) summary.claim_failures.push_back(std::move(text));
  return summary;
}

std::string census_text_summary(const CensusSummary& summary) {
  std::ostringstream out;
  out << "graphs: " << summary.graphs << "\n";
  out << "instances: " << summary.instances << "\n";
  for (const auto& [key, count] : summary.extremal_counts)
    out << key << ": " << count << "\n";
  if (summary.claims_checked > 0) {
    out << "claims checked: " << summary.claims_checked << "\n";
    out << "claims violations: " << summary.claims_violations << "\n";
  }
  if (summary.malformed_lines > 0)
    out << "malformed lines: " << summary.malformed_lines << "\n";
  for (const auto& d : summary.disagreements) out << "DISAGREEMENT " << d << "\n";
  out << "disagreements: " << summary.disagreements.size() << "\n";
  return out.str();
}

}  // namespace dgs
