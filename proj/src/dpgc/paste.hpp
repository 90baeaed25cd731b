#pragma once

#include "graph.hpp"

namespace dpgc {

// Morphism of port labels into squares: each label maps to a gadget graph
// with matching boundary arities (checked on insert).
class GadgetDictionary {
 public:
  void add(const Label& label, Graph gadget);
  bool has(const Label& label) const;
  const Graph& at(const Label& label) const;
  std::size_t size() const { return entries_.size(); }

  // every label of g to the single-vertex graph with that label (paste unit)
  static GadgetDictionary identity_for(const Graph& g);

 private:
  std::map<std::string, Graph> entries_;
};

// the single-vertex graph carrying `label`, with boundary wires in port order
Graph single_vertex(const Label& label, const std::string& id = "x");

// Replaces every vertex by a fresh copy of its gadget, splicing wires in port
// order; re-validates the result (acyclicity included).
Graph paste(const Graph& g, const GadgetDictionary& dict);

// Conversion functor: relabel-into-squares followed by paste. Same outer
// arities as g, labels drawn from the dictionary's target label set.
Graph convert(const Graph& g, const GadgetDictionary& dict);

}  // namespace dpgc
