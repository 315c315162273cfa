#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "dgs/instance.hpp"
#include "dgs/oracle.hpp"

namespace dgs {

enum class ComponentCase { None, CaseI, CaseII, CaseIII };
const char* component_case_name(ComponentCase c);

struct PredicateResult {
  bool holds = false;
  std::vector<ComponentCase> component_cases;  // aligned with Graph::components()
};

// Equality characterization for the alpha bound, component-wise:
// (i) kappa = d on the component, or (ii) the component is a clique with
// c and kappa constant on it.
PredicateResult theorem1_predicate(const Instance& inst);

// Equality characterization for the beta bound, component-wise:
// (i) kappa = d, (ii) c constant and kappa = 0, or (iii) a clique with
// c, kappa constant and 0 < kappa < component order - 1.
PredicateResult theorem2_predicate(const Instance& inst);

struct ExtremalReport {
  Rational alpha_bound, alpha_exact, beta_bound, beta_exact;
  bool alpha_equality = false, beta_equality = false;
  bool t1_predicate = false, t2_predicate = false;
  bool t1_agrees = false, t2_agrees = false;
  std::vector<ComponentCase> t1_cases, t2_cases;
};

ExtremalReport verify_instance(const Instance& inst, int cap = kDefaultOracleCap);

// Weight profile applied by vertex index during a census sweep.
struct CProfileSpec {
  enum class Kind { Constant, Ascending, LastHeavier, Explicit };
  Kind kind = Kind::Constant;
  Rational constant = 1;
  std::vector<Rational> values;  // Explicit; shorter lists pad with 1
  std::string name() const;
  std::vector<Rational> materialize(int n) const;
};

struct CensusConfig {
  int n_min = 2;
  int n_max = 5;
  bool connected_only = true;
  enum class Source { LabeledEnumeration, Graph6Stream };
  Source source = Source::LabeledEnumeration;
  std::istream* graph6_input = nullptr;
  enum class KappaMode { AllProfiles, ConstantOnly };
  KappaMode kappa_mode = KappaMode::AllProfiles;
  std::vector<CProfileSpec> c_profiles;  // empty means constant 1
  bool check_theorem1 = true;
  bool check_theorem2 = true;
  bool check_claims = false;  // initial/terminal vertices + potential constancy
  int jobs = 1;
  int oracle_cap = kDefaultOracleCap;
};

struct CensusSummary {
  std::uint64_t graphs = 0;
  std::uint64_t instances = 0;
  std::uint64_t malformed_lines = 0;
  // key "n=<n> <t1|t2> case=<label>" -> number of extremal instances
  std::map<std::string, std::uint64_t> extremal_counts;
  std::vector<std::string> disagreements;  // required empty
  std::uint64_t claims_checked = 0;
  std::uint64_t claims_violations = 0;
  std::vector<std::string> claim_failures;
};

// Runs verify-style checks over every (graph, c, kappa) combination the
// config describes. The inner loop shares per-graph tables and updates the
// bound values incrementally, so full kappa sweeps stay desk-scale.
CensusSummary enumerate_and_verify(const CensusConfig& config);

// One line per (n, case) count plus a final "disagreements: k" line.
std::string census_text_summary(const CensusSummary& summary);

// Replayable single-line dump: edge list, c, kappa and the compared values.
std::string instance_dump(const Instance& inst, const std::string& note);

}  // namespace dgs
