#pragma once

#include "graph.hpp"
#include "instrument.hpp"
#include "semantics.hpp"

namespace dpgc {

// Evaluates a labeled graph to its adaptive instrument: vertices are walked
// in topological order of the total flow graph with a frontier of open qubit
// wires; classical wires are enumerated exactly, with branches that agree on
// the live classical wires summed as they go.
AdaptiveInstrument evaluate(const Graph& g, const LabelSemantics& sem);

inline AdaptiveInstrument evaluate(const Graph& g, Model model) {
  return evaluate(g, LabelSemantics(model));
}

}  // namespace dpgc
