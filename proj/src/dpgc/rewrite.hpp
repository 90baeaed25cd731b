#pragma once

#include "evaluate.hpp"
#include "graph.hpp"

namespace dpgc {

// Boundary-preserving rewrite: lhs and rhs have identical boundary arities
// and equal resolved semantics (checked when the rule is built).
struct RewriteRule {
  std::string name;
  Graph lhs, rhs;
  Model check_model = Model::M;
};

// lhs vertex id -> host vertex id
struct Occurrence {
  std::map<std::string, std::string> vertex_map;
};

// Verifies evaluate(lhs) == evaluate(rhs) within 1e-9 under `model`.
RewriteRule make_rule(const std::string& name, Graph lhs, Graph rhs, Model model);

// correction vs entangling: corr in {"CX","CZ"}, port in {1,2}
RewriteRule rule_corr_vs_entangling(const std::string& corr, int port);
// correction vs measurement at angle alpha: corr in {"CX","CZ"}
RewriteRule rule_corr_vs_measurement(const std::string& corr, const Angle& alpha);
// the MBPC variants: corr in {"CX","CS"}
RewriteRule rule_corr_vs_xy_measurement(const std::string& corr);

// all six Appendix rules for one measurement angle
std::vector<RewriteRule> standard_rules(const Angle& alpha);

std::vector<Occurrence> find_occurrences(const Graph& g, const RewriteRule& rule);

// Replaces one occurrence of rule.lhs by rule.rhs; fresh rhs vertex ids are
// namespaced by `tag`.
Graph apply_rewrite(const Graph& g, const RewriteRule& rule, const Occurrence& occ,
                    const std::string& tag = "rw");

// The preparation / measurement / correction layer split of an MBQC graph.
struct StandardForm {
  Graph layered = Graph::identity_h(0);  // the rewritten graph, in one piece
  Graph prep = Graph::identity_h(0);     // the three horizontally-cut layers
  Graph meas = Graph::identity_h(0);
  Graph corr = Graph::identity_h(0);
  std::vector<int> vin_of_meas;  // original v-input indices consumed by meas
  std::vector<int> vin_of_corr;  // original v-input indices consumed by corr
  int crossings = 0;             // outcome wires from meas into corr
};

// Pushes corrections right with the rewrite rules until the graph splits into
// N_X/E, measurement+Boolean, and correction layers. Iteration cap
// 10*|vertices|^2 guards against a missing rule.
StandardForm standard_form(const Graph& g);

// Reconnects the three layers (including the exposed outcome wires) back into
// one graph with the original outer boundary.
Graph reglue_standard_form(const StandardForm& sf);

}  // namespace dpgc
