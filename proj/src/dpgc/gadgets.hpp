#pragma once

#include "paste.hpp"
#include "semantics.hpp"

namespace dpgc {

// Gadget graphs. Names accepted by gadget(): J(<angle>), teleport, T-gadget,
// GHZ(<n>), OR, teleported-J(pi/4), teleported-J(pi/4)-expanded, NOT, ZERO,
// AND, H-mbpc. Angles are written 0, pi/4, -pi/4, 3pi/4, ...
Graph gadget(const std::string& name);

Graph gadget_j(const Angle& alpha);
Graph gadget_teleport();
Graph gadget_t();
Graph gadget_ghz(int n);
Graph gadget_or();
Graph gadget_h_mbpc();
Graph gadget_not();
Graph gadget_zero();
Graph gadget_and();
// affine derived form; pass expand_and=true for the rule-generated pattern
// with its AND vertex expanded through the OR-gadget
Graph gadget_teleported_j(bool expand_and = false);

// Converter dictionaries by name: qc-to-mbqc, qc-to-qcm, mbpc-to-qcm,
// qc-to-mbpc, boolean-expansion.
GadgetDictionary converter(const std::string& name);

// Target model of each converter's output graphs.
Model converter_target(const std::string& name);

// Pastes g against `dict` extended with identity entries for labels it does
// not cover (used by boolean-expansion and --expand-gadgets).
Graph apply_partial_dictionary(const Graph& g, const GadgetDictionary& dict);

// Expands gadget-named vertices (J, teleport, T-gadget, H-mbpc, GHZn) plus
// Boolean sugar into model labels.
Graph expand_gadget_labels(const Graph& g);

Angle parse_angle(const std::string& text);

}  // namespace dpgc
