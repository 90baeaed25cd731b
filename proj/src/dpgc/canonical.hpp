#pragma once

#include "graph.hpp"

namespace dpgc {

// Deterministic relabeling of vertex ids to v1..vN such that isomorphic
// labeled graphs produce identical results. Refinement on
// (label, port-adjacency) colors with backtracking over ties.
Graph canonical_form(const Graph& g);

// Stable textual encoding of the canonical form (equal iff isomorphic).
std::string canonical_encoding(const Graph& g);

// Short hex digest of the canonical encoding, for CLI output.
std::string canonical_digest(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace dpgc
