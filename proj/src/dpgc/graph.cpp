#include "graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace dpgc {

std::string Label::key() const {
  std::ostringstream os;
  os << name;
  for (const auto& [pname, val] : params) os << "{" << pname << "=" << val.str() << "}";
  os << "[" << h_in << "," << h_out << "," << v_in << "," << v_out << "]";
  return os.str();
}

bool Label::operator==(const Label& o) const {
  return name == o.name && params == o.params && h_in == o.h_in && h_out == o.h_out &&
         v_in == o.v_in && v_out == o.v_out;
}

const Vertex& Graph::vertex(const std::string& id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) throw internal_error("unknown vertex id: " + id);
  return vertices_[it->second];
}

namespace {

Graph::SlotKey slot(const Endpoint& e) {
  return {e.boundary ? 0 : 1, e.vertex, e.index};
}

std::string describe(const Endpoint& e, const char* boundary_kind) {
  std::ostringstream os;
  if (e.boundary)
    os << boundary_kind << " " << e.index;
  else
    os << "vertex " << e.vertex << " port " << e.index;
  return os.str();
}

}  // namespace

const Wire& Graph::h_wire_from(const Endpoint& src) const {
  auto it = h_by_src_.find(slot(src));
  if (it == h_by_src_.end()) throw internal_error("no h-wire from " + describe(src, "boundary-in"));
  return h_wires_[it->second];
}
const Wire& Graph::h_wire_to(const Endpoint& tgt) const {
  auto it = h_by_tgt_.find(slot(tgt));
  if (it == h_by_tgt_.end()) throw internal_error("no h-wire to " + describe(tgt, "boundary-out"));
  return h_wires_[it->second];
}
const Wire& Graph::v_wire_from(const Endpoint& src) const {
  auto it = v_by_src_.find(slot(src));
  if (it == v_by_src_.end()) throw internal_error("no v-wire from " + describe(src, "boundary-in"));
  return v_wires_[it->second];
}
const Wire& Graph::v_wire_to(const Endpoint& tgt) const {
  auto it = v_by_tgt_.find(slot(tgt));
  if (it == v_by_tgt_.end()) throw internal_error("no v-wire to " + describe(tgt, "boundary-out"));
  return v_wires_[it->second];
}

Graph Graph::build(int m, int n, int k, int l, std::vector<Vertex> vertices,
                   std::vector<Wire> h_wires, std::vector<Wire> v_wires) {
  if (m < 0 || n < 0 || k < 0 || l < 0) throw validation_error("negative boundary arity");
  Graph g;
  g.m_ = m;
  g.n_ = n;
  g.k_ = k;
  g.l_ = l;
  g.vertices_ = std::move(vertices);
  g.h_wires_ = std::move(h_wires);
  g.v_wires_ = std::move(v_wires);
  g.index_and_validate();
  return g;
}

void Graph::index_and_validate() {
  vertex_index_.clear();
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Vertex& v = vertices_[i];
    if (v.id.empty()) throw validation_error("vertex with empty id");
    if (!vertex_index_.emplace(v.id, i).second)
      throw validation_error("duplicate vertex id: " + v.id);
    const Label& lb = v.label;
    if (lb.h_in < 0 || lb.h_out < 0 || lb.v_in < 0 || lb.v_out < 0)
      throw validation_error("label arity mismatch: negative arity on " + v.id);
  }

  auto check_wires = [&](const std::vector<Wire>& wires, bool horizontal,
                         std::map<SlotKey, std::size_t>& by_src,
                         std::map<SlotKey, std::size_t>& by_tgt, int bin, int bout) {
    const char* dir = horizontal ? "h" : "v";
    by_src.clear();
    by_tgt.clear();
    for (std::size_t w = 0; w < wires.size(); ++w) {
      const Endpoint& f = wires[w].from;
      const Endpoint& t = wires[w].to;
      if (f.boundary) {
        if (f.index < 1 || f.index > bin)
          throw validation_error(std::string(dir) + "-wire source boundary index out of range");
      } else {
        auto it = vertex_index_.find(f.vertex);
        if (it == vertex_index_.end())
          throw validation_error("dangling port: wire from unknown vertex " + f.vertex);
        const Label& lb = vertices_[it->second].label;
        int outs = horizontal ? lb.h_out : lb.v_out;
        if (f.index < 1 || f.index > outs)
          throw validation_error("wire from out-of-range " + std::string(dir) + "-out port on " + f.vertex);
      }
      if (t.boundary) {
        if (t.index < 1 || t.index > bout)
          throw validation_error(std::string(dir) + "-wire target boundary index out of range");
      } else {
        auto it = vertex_index_.find(t.vertex);
        if (it == vertex_index_.end())
          throw validation_error("dangling port: wire to unknown vertex " + t.vertex);
        const Label& lb = vertices_[it->second].label;
        int ins = horizontal ? lb.h_in : lb.v_in;
        if (t.index < 1 || t.index > ins)
          throw validation_error("wire to out-of-range " + std::string(dir) + "-in port on " + t.vertex);
      }
      if (!by_src.emplace(slot(f), w).second)
        throw validation_error("duplicate endpoint use at " + describe(f, "boundary-in"));
      if (!by_tgt.emplace(slot(t), w).second)
        throw validation_error("duplicate endpoint use at " + describe(t, "boundary-out"));
    }
    // every slot covered: the iota maps are bijections
    for (int i = 1; i <= bin; ++i)
      if (!by_src.count({0, "", i}))
        throw validation_error(std::string(dir) + "-boundary input " + std::to_string(i) + " is dangling");
    for (int i = 1; i <= bout; ++i)
      if (!by_tgt.count({0, "", i}))
        throw validation_error(std::string(dir) + "-boundary output " + std::to_string(i) + " is dangling");
    for (const Vertex& v : vertices_) {
      int ins = horizontal ? v.label.h_in : v.label.v_in;
      int outs = horizontal ? v.label.h_out : v.label.v_out;
      for (int i = 1; i <= ins; ++i)
        if (!by_tgt.count({1, v.id, i}))
          throw validation_error("dangling " + std::string(dir) + "-in port " + std::to_string(i) + " on " + v.id);
      for (int i = 1; i <= outs; ++i)
        if (!by_src.count({1, v.id, i}))
          throw validation_error("dangling " + std::string(dir) + "-out port " + std::to_string(i) + " on " + v.id);
    }
  };

  check_wires(h_wires_, true, h_by_src_, h_by_tgt_, m_, n_);
  check_wires(v_wires_, false, v_by_src_, v_by_tgt_, k_, l_);

  // acyclicity of the total flow graph (both wire sets together)
  topo_order();
}

std::vector<std::string> Graph::topo_order() const {
  std::map<std::string, int> indeg;
  std::map<std::string, std::vector<std::string>> succ;
  for (const Vertex& v : vertices_) indeg[v.id] = 0;
  auto add_edges = [&](const std::vector<Wire>& wires) {
    for (const Wire& w : wires)
      if (!w.from.boundary && !w.to.boundary) {
        succ[w.from.vertex].push_back(w.to.vertex);
        ++indeg[w.to.vertex];
      }
  };
  add_edges(h_wires_);
  add_edges(v_wires_);

  std::priority_queue<std::string, std::vector<std::string>, std::greater<>> ready;
  for (const auto& [id, d] : indeg)
    if (d == 0) ready.push(id);
  std::vector<std::string> order;
  order.reserve(vertices_.size());
  while (!ready.empty()) {
    std::string id = ready.top();
    ready.pop();
    order.push_back(id);
    for (const std::string& s : succ[id])
      if (--indeg[s] == 0) ready.push(s);
  }
  if (order.size() != vertices_.size())
    throw validation_error("cycle in total flow graph");
  return order;
}

Graph Graph::identity_h(int n) { return identity(n, 0); }
Graph Graph::identity_v(int k) { return identity(0, k); }

Graph Graph::identity(int n, int k) {
  std::vector<Wire> h, v;
  for (int i = 1; i <= n; ++i) h.push_back({Endpoint::at_boundary(i), Endpoint::at_boundary(i)});
  for (int i = 1; i <= k; ++i) v.push_back({Endpoint::at_boundary(i), Endpoint::at_boundary(i)});
  return build(n, n, k, k, {}, std::move(h), std::move(v));
}

namespace {

// deterministic fresh-id renaming for the right/bottom operand of a composite
std::map<std::string, std::string> rename_against(const Graph& base, const Graph& incoming) {
  std::set<std::string> used;
  for (const Vertex& v : base.vertices()) used.insert(v.id);
  std::map<std::string, std::string> ren;
  for (const Vertex& v : incoming.vertices()) {
    std::string cand = v.id;
    int suffix = 2;
    while (used.count(cand)) cand = v.id + "~" + std::to_string(suffix++);
    used.insert(cand);
    ren[v.id] = cand;
  }
  return ren;
}

Endpoint renamed(const Endpoint& e, const std::map<std::string, std::string>& ren) {
  if (e.boundary) return e;
  return Endpoint::at_vertex(ren.at(e.vertex), e.index);
}

}  // namespace

Graph compose_h(const Graph& left, const Graph& right) {
  if (left.n() != right.m())
    throw validation_error("compose_h arity mismatch: left n=" + std::to_string(left.n()) +
                           ", right m=" + std::to_string(right.m()));
  auto ren = rename_against(left, right);

  std::vector<Vertex> vertices = left.vertices();
  for (const Vertex& v : right.vertices()) vertices.push_back({ren.at(v.id), v.label});

  std::vector<Wire> h, v;
  for (const Wire& w : left.h_wires())
    if (!w.to.boundary) h.push_back(w);
  for (const Wire& w : right.h_wires())
    if (!w.from.boundary) h.push_back({renamed(w.from, ren), renamed(w.to, ren)});
  // splice across the shared boundary via the codiagonal
  for (int j = 1; j <= left.n(); ++j) {
    Endpoint src = left.h_wire_to(Endpoint::at_boundary(j)).from;
    Endpoint tgt = renamed(right.h_wire_from(Endpoint::at_boundary(j)).to, ren);
    h.push_back({src, tgt});
  }

  // vertical boundaries concatenate, left block first
  for (const Wire& w : left.v_wires()) v.push_back(w);
  for (const Wire& w : right.v_wires()) {
    Wire nw{renamed(w.from, ren), renamed(w.to, ren)};
    if (nw.from.boundary) nw.from.index += left.k();
    if (nw.to.boundary) nw.to.index += left.l();
    v.push_back(nw);
  }

  return Graph::build(left.m(), right.n(), left.k() + right.k(), left.l() + right.l(),
                      std::move(vertices), std::move(h), std::move(v));
}

Graph compose_v(const Graph& top, const Graph& bottom) {
  if (top.l() != bottom.k())
    throw validation_error("compose_v arity mismatch: top l=" + std::to_string(top.l()) +
                           ", bottom k=" + std::to_string(bottom.k()));
  auto ren = rename_against(top, bottom);

  std::vector<Vertex> vertices = top.vertices();
  for (const Vertex& v : bottom.vertices()) vertices.push_back({ren.at(v.id), v.label});

  std::vector<Wire> h, v;
  for (const Wire& w : top.v_wires())
    if (!w.to.boundary) v.push_back(w);
  for (const Wire& w : bottom.v_wires())
    if (!w.from.boundary) v.push_back({renamed(w.from, ren), renamed(w.to, ren)});
  for (int j = 1; j <= top.l(); ++j) {
    Endpoint src = top.v_wire_to(Endpoint::at_boundary(j)).from;
    Endpoint tgt = renamed(bottom.v_wire_from(Endpoint::at_boundary(j)).to, ren);
    v.push_back({src, tgt});
  }

  for (const Wire& w : top.h_wires()) h.push_back(w);
  for (const Wire& w : bottom.h_wires()) {
    Wire nw{renamed(w.from, ren), renamed(w.to, ren)};
    if (nw.from.boundary) nw.from.index += top.m();
    if (nw.to.boundary) nw.to.index += top.n();
    h.push_back(nw);
  }

  return Graph::build(top.m() + bottom.m(), top.n() + bottom.n(), top.k(), bottom.l(),
                      std::move(vertices), std::move(h), std::move(v));
}

Graph relabel(const Graph& g, const std::function<Label(const Label&)>& f) {
  std::vector<Vertex> vertices;
  vertices.reserve(g.vertices().size());
  for (const Vertex& v : g.vertices()) {
    Label nl = f(v.label);
    if (nl.h_in != v.label.h_in || nl.h_out != v.label.h_out || nl.v_in != v.label.v_in ||
        nl.v_out != v.label.v_out)
      throw validation_error("relabel map does not preserve arities on label " + v.label.name);
    vertices.push_back({v.id, std::move(nl)});
  }
  return Graph::build(g.m(), g.n(), g.k(), g.l(), std::move(vertices), g.h_wires(), g.v_wires());
}

}  // namespace dpgc
