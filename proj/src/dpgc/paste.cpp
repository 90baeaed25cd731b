#include "paste.hpp"

namespace dpgc {

void GadgetDictionary::add(const Label& label, Graph gadget) {
  if (gadget.m() != label.h_in || gadget.n() != label.h_out || gadget.k() != label.v_in ||
      gadget.l() != label.v_out)
    throw validation_error("gadget boundary arities do not match label " + label.name);
  entries_.insert_or_assign(label.key(), std::move(gadget));
}

bool GadgetDictionary::has(const Label& label) const { return entries_.count(label.key()) > 0; }

const Graph& GadgetDictionary::at(const Label& label) const {
  auto it = entries_.find(label.key());
  if (it == entries_.end())
    throw validation_error("missing dictionary entry for label " + label.key());
  return it->second;
}

Graph single_vertex(const Label& label, const std::string& id) {
  std::vector<Wire> h, v;
  for (int i = 1; i <= label.h_in; ++i) h.push_back({Endpoint::at_boundary(i), Endpoint::at_vertex(id, i)});
  for (int i = 1; i <= label.h_out; ++i) h.push_back({Endpoint::at_vertex(id, i), Endpoint::at_boundary(i)});
  for (int i = 1; i <= label.v_in; ++i) v.push_back({Endpoint::at_boundary(i), Endpoint::at_vertex(id, i)});
  for (int i = 1; i <= label.v_out; ++i) v.push_back({Endpoint::at_vertex(id, i), Endpoint::at_boundary(i)});
  return Graph::build(label.h_in, label.h_out, label.v_in, label.v_out, {{id, label}},
                      std::move(h), std::move(v));
}

GadgetDictionary GadgetDictionary::identity_for(const Graph& g) {
  GadgetDictionary d;
  for (const Vertex& v : g.vertices())
    if (!d.has(v.label)) d.add(v.label, single_vertex(v.label));
  return d;
}

namespace {

// The quotient construction realized as chain walking: starting from a final
// source, follow host and gadget wires through gadget passthroughs until a
// final target (host boundary output or copied gadget vertex port).
struct Paster {
  const Graph& g;
  const GadgetDictionary& dict;
  bool horizontal;

  const Graph& gadget_of(const std::string& host_vertex) const {
    return dict.at(g.vertex(host_vertex).label);
  }

  const Wire& host_from(const Endpoint& e) const {
    return horizontal ? g.h_wire_from(e) : g.v_wire_from(e);
  }
  const Wire& gadget_from(const Graph& gad, const Endpoint& e) const {
    return horizontal ? gad.h_wire_from(e) : gad.v_wire_from(e);
  }

  static std::string copy_id(const std::string& host, const std::string& inner) {
    return host + "/" + inner;
  }

  // resolve a host-space wire target to a final endpoint
  Endpoint resolve_host_target(Endpoint t) const {
    while (true) {
      if (t.boundary) return t;
      // t = host vertex in-port: enter the gadget at boundary input t.index
      const std::string host_vertex = t.vertex;
      const Graph& gad = gadget_of(host_vertex);
      Endpoint inner = gadget_from(gad, Endpoint::at_boundary(t.index)).to;
      if (!inner.boundary) return Endpoint::at_vertex(copy_id(host_vertex, inner.vertex), inner.index);
      // gadget passthrough: continue from the host vertex's out-port
      t = host_from(Endpoint::at_vertex(host_vertex, inner.index)).to;
    }
  }

  void emit(std::vector<Wire>& out) const {
    int boundary_in = horizontal ? g.m() : g.k();
    for (int i = 1; i <= boundary_in; ++i) {
      Endpoint t = resolve_host_target(host_from(Endpoint::at_boundary(i)).to);
      out.push_back({Endpoint::at_boundary(i), t});
    }
    for (const Vertex& x : g.vertices()) {
      const Graph& gad = gadget_of(x.id);
      const auto& wires = horizontal ? gad.h_wires() : gad.v_wires();
      for (const Wire& w : wires) {
        if (w.from.boundary) continue;  // handled when the chain enters the gadget
        Endpoint src = Endpoint::at_vertex(copy_id(x.id, w.from.vertex), w.from.index);
        Endpoint tgt;
        if (!w.to.boundary) {
          tgt = Endpoint::at_vertex(copy_id(x.id, w.to.vertex), w.to.index);
        } else {
          // leaves the gadget: continue in host space from x's out-port
          tgt = resolve_host_target(host_from(Endpoint::at_vertex(x.id, w.to.index)).to);
        }
        out.push_back({src, tgt});
      }
    }
  }
};

}  // namespace

Graph paste(const Graph& g, const GadgetDictionary& dict) {
  std::vector<Vertex> vertices;
  for (const Vertex& x : g.vertices()) {
    const Graph& gad = dict.at(x.label);  // throws on missing entry
    if (gad.m() != x.label.h_in || gad.n() != x.label.h_out || gad.k() != x.label.v_in ||
        gad.l() != x.label.v_out)
      throw validation_error("gadget arity mismatch for label " + x.label.name);
    for (const Vertex& y : gad.vertices())
      vertices.push_back({Paster::copy_id(x.id, y.id), y.label});
  }

  std::vector<Wire> h, v;
  Paster{g, dict, true}.emit(h);
  Paster{g, dict, false}.emit(v);

  try {
    return Graph::build(g.m(), g.n(), g.k(), g.l(), std::move(vertices), std::move(h), std::move(v));
  } catch (const validation_error& e) {
    throw validation_error(std::string("paste produced an invalid graph (malformed dictionary): ") + e.what());
  }
}

Graph convert(const Graph& g, const GadgetDictionary& dict) { return paste(g, dict); }

}  // namespace dpgc
