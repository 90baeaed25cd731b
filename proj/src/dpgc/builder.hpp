#pragma once

#include "graph.hpp"
#include "semantics.hpp"

namespace dpgc {

// Incremental graph construction: vertices are added with their input wires
// named by source endpoints; boundary outputs are attached at the end.
class GraphBuilder {
 public:
  GraphBuilder(int m, int n, int k, int l) : m_(m), n_(n), k_(k), l_(l) {}

  Endpoint bh(int i) const { return Endpoint::at_boundary(i); }
  Endpoint bv(int i) const { return Endpoint::at_boundary(i); }

  // adds a vertex wired to the given h/v sources (port order); returns its id
  std::string add(const std::string& id, const Label& label, std::vector<Endpoint> h_srcs,
                  std::vector<Endpoint> v_srcs = {}) {
    if (int(h_srcs.size()) != label.h_in || int(v_srcs.size()) != label.v_in)
      throw internal_error("builder arity mismatch at vertex " + id);
    for (std::size_t i = 0; i < h_srcs.size(); ++i)
      h_.push_back({h_srcs[i], Endpoint::at_vertex(id, int(i) + 1)});
    for (std::size_t i = 0; i < v_srcs.size(); ++i)
      v_.push_back({v_srcs[i], Endpoint::at_vertex(id, int(i) + 1)});
    verts_.push_back({id, label});
    return id;
  }

  Endpoint ho(const std::string& id, int p = 1) const { return Endpoint::at_vertex(id, p); }
  Endpoint vo(const std::string& id, int p = 1) const { return Endpoint::at_vertex(id, p); }

  void out_h(int j, const Endpoint& src) { h_.push_back({src, Endpoint::at_boundary(j)}); }
  void out_v(int j, const Endpoint& src) { v_.push_back({src, Endpoint::at_boundary(j)}); }

  Graph done() && {
    return Graph::build(m_, n_, k_, l_, std::move(verts_), std::move(h_), std::move(v_));
  }

 private:
  int m_, n_, k_, l_;
  std::vector<Vertex> verts_;
  std::vector<Wire> h_, v_;
};

}  // namespace dpgc
