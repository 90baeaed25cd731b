#pragma once

#include <string>

#include "bellspec.hpp"
#include "gadgets.hpp"
#include "rewrite.hpp"

namespace dpgc {

// One file = one graph plus its declared model.
struct GraphFile {
  Graph graph = Graph::identity_h(0);
  Model model = Model::C;
};

GraphFile parse_graph_file(const std::string& text);
std::string serialize_graph_file(const Graph& g, Model model);

std::string instrument_to_json(const AdaptiveInstrument& phi);
std::string distribution_to_json(const Distribution& d, int bits);

BellScenario parse_scenario(const std::string& text);
std::string serialize_scenario(const BellScenario& sc);

// {"ncf": .., "cf": .., "strong": ..}; exact mode emits rational strings
std::string ncf_report_json(const BellScenario& sc, bool exact);

// Theorem bound report for the CLI bound-check subcommand.
std::string bound_check_json(const std::string& spec_text);

// standard-form layers plus the semantic-equality report
struct StandardFormFiles {
  std::string prep, meas, corr, report;
};
StandardFormFiles standard_form_files(const Graph& g);

// state specs of the born subcommand: ghz:N, zero:N, maxmixed:N, or a JSON
// document {"qubits": n, "matrix": [[..]]}
DensityMatrix parse_state_spec(const std::string& spec);

std::uint32_t parse_bits(const std::string& text, int expected_len);
std::string bits_to_string(std::uint32_t value, int len);

}  // namespace dpgc
