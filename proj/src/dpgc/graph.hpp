#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "angle.hpp"
#include "errors.hpp"

namespace dpgc {

// Port label: name, exact angle parameters, and the four arities
// (h_in/h_out/v_in/v_out = s^h/t^h/s^v/t^v).
struct Label {
  std::string name;
  std::map<std::string, Angle> params;
  int h_in = 0, h_out = 0, v_in = 0, v_out = 0;

  std::string key() const;
  bool operator==(const Label& o) const;
};

struct Vertex {
  std::string id;
  Label label;  // port counts are the label arities
};

struct Endpoint {
  bool boundary = false;
  std::string vertex;  // empty for boundary endpoints
  int index = 0;       // 1-based

  static Endpoint at_boundary(int index) { return Endpoint{true, "", index}; }
  static Endpoint at_vertex(std::string id, int index) { return Endpoint{false, std::move(id), index}; }
  bool operator==(const Endpoint& o) const {
    return boundary == o.boundary && vertex == o.vertex && index == o.index;
  }
};

// Directed wire; sources are boundary inputs or vertex out-ports, targets are
// boundary outputs or vertex in-ports. Direction (h or v) comes from which
// wire set the wire lives in.
struct Wire {
  Endpoint from, to;
};

// A validated labeled double port graph. Immutable after build().
class Graph {
 public:
  // Validates the wiring bijections, label arities and acyclicity of the
  // total flow graph; throws validation_error otherwise.
  static Graph build(int m, int n, int k, int l, std::vector<Vertex> vertices,
                     std::vector<Wire> h_wires, std::vector<Wire> v_wires);

  // the (n,n) / (k,k) units: passthrough wires only
  static Graph identity_h(int n);
  static Graph identity_v(int k);
  // both at once: m=n passthrough qubits plus k=l passthrough bits
  static Graph identity(int n, int k);

  int m() const { return m_; }
  int n() const { return n_; }
  int k() const { return k_; }
  int l() const { return l_; }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Wire>& h_wires() const { return h_wires_; }
  const std::vector<Wire>& v_wires() const { return v_wires_; }

  bool has_vertex(const std::string& id) const { return vertex_index_.count(id) > 0; }
  const Vertex& vertex(const std::string& id) const;

  // wire lookups by slot; throw internal_error if absent (cannot happen on a
  // validated graph)
  const Wire& h_wire_from(const Endpoint& src) const;
  const Wire& h_wire_to(const Endpoint& tgt) const;
  const Wire& v_wire_from(const Endpoint& src) const;
  const Wire& v_wire_to(const Endpoint& tgt) const;

  // vertex ids in a deterministic topological order of the total flow graph
  std::vector<std::string> topo_order() const;

  using SlotKey = std::tuple<int, std::string, int>;

 private:
  Graph() = default;
  void index_and_validate();

  int m_ = 0, n_ = 0, k_ = 0, l_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<Wire> h_wires_, v_wires_;

  std::map<std::string, std::size_t> vertex_index_;
  std::map<SlotKey, std::size_t> h_by_src_, h_by_tgt_, v_by_src_, v_by_tgt_;
};

Graph compose_h(const Graph& left, const Graph& right);
Graph compose_v(const Graph& top, const Graph& bottom);

// Applies an arity-preserving label map to every vertex.
Graph relabel(const Graph& g, const std::function<Label(const Label&)>& f);

}  // namespace dpgc
