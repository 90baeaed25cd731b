#include "canonical.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dpgc {

namespace {

struct Ctx {
  const Graph* g = nullptr;
  std::vector<std::string> ids;                 // vertex ids, fixed order
  std::map<std::string, std::size_t> id_index;  // id -> position in ids
};

// Signature of a vertex under a coloring: its own color plus, per port in
// order, what the port is wired to (boundary index exactly, or neighbor color
// and port).
std::string vertex_signature(const Ctx& ctx, const std::vector<int>& color, std::size_t vi) {
  const Graph& g = *ctx.g;
  const Vertex& v = g.vertices()[vi];
  std::ostringstream os;
  os << color[vi] << "|" << v.label.key();
  auto emit = [&](const Endpoint& e) {
    if (e.boundary)
      os << "B" << e.index;
    else
      os << "c" << color[ctx.id_index.at(e.vertex)] << "." << e.index;
  };
  for (int p = 1; p <= v.label.h_in; ++p) {
    os << ";hi" << p << ":";
    emit(g.h_wire_to(Endpoint::at_vertex(v.id, p)).from);
  }
  for (int p = 1; p <= v.label.h_out; ++p) {
    os << ";ho" << p << ":";
    emit(g.h_wire_from(Endpoint::at_vertex(v.id, p)).to);
  }
  for (int p = 1; p <= v.label.v_in; ++p) {
    os << ";vi" << p << ":";
    emit(g.v_wire_to(Endpoint::at_vertex(v.id, p)).from);
  }
  for (int p = 1; p <= v.label.v_out; ++p) {
    os << ";vo" << p << ":";
    emit(g.v_wire_from(Endpoint::at_vertex(v.id, p)).to);
  }
  return os.str();
}

// One full refinement pass to a fixpoint; colors are ranks of signatures.
std::vector<int> refine(const Ctx& ctx, std::vector<int> color) {
  const std::size_t n = ctx.ids.size();
  for (std::size_t round = 0; round <= n + 1; ++round) {
    std::vector<std::string> sig(n);
    for (std::size_t i = 0; i < n; ++i) sig[i] = vertex_signature(ctx, color, i);
    std::vector<std::string> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(n);
    for (std::size_t i = 0; i < n; ++i)
      next[i] = int(std::lower_bound(sorted.begin(), sorted.end(), sig[i]) - sorted.begin());
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

std::string encode_with_order(const Ctx& ctx, const std::vector<std::size_t>& order) {
  const Graph& g = *ctx.g;
  std::vector<int> rank(ctx.ids.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = int(r);
  auto ep = [&](const Endpoint& e) {
    if (e.boundary) return "B" + std::to_string(e.index);
    return "v" + std::to_string(rank[ctx.id_index.at(e.vertex)]) + "." + std::to_string(e.index);
  };
  std::ostringstream os;
  os << g.m() << "," << g.n() << "," << g.k() << "," << g.l() << "/";
  for (std::size_t r = 0; r < order.size(); ++r)
    os << g.vertices()[order[r]].label.key() << "/";
  std::vector<std::string> hw, vw;
  for (const Wire& w : g.h_wires()) hw.push_back(ep(w.from) + ">" + ep(w.to));
  for (const Wire& w : g.v_wires()) vw.push_back(ep(w.from) + ">" + ep(w.to));
  std::sort(hw.begin(), hw.end());
  std::sort(vw.begin(), vw.end());
  os << "H:";
  for (const auto& s : hw) os << s << ";";
  os << "V:";
  for (const auto& s : vw) os << s << ";";
  return os.str();
}

// Individualization-refinement search for the lexicographically least
// encoding. Desk-scale graphs: the worst case is acceptable.
void search(const Ctx& ctx, const std::vector<int>& color, std::string& best,
            std::vector<std::size_t>& best_order) {
  const std::size_t n = ctx.ids.size();
  // find the first non-singleton color class (by color value)
  std::map<int, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < n; ++i) classes[color[i]].push_back(i);
  const std::vector<std::size_t>* tie = nullptr;
  for (const auto& [c, members] : classes)
    if (members.size() > 1) { tie = &members; break; }

  if (!tie) {
    std::vector<std::size_t> order;
    order.reserve(n);
    for (const auto& [c, members] : classes) { (void)c; order.push_back(members.front()); }
    std::string enc = encode_with_order(ctx, order);
    if (best.empty() || enc < best) {
      best = std::move(enc);
      best_order = std::move(order);
    }
    return;
  }
  for (std::size_t pick : *tie) {
    std::vector<int> split = color;
    for (std::size_t i = 0; i < n; ++i) split[i] *= 2;
    split[pick] -= 1;
    search(ctx, refine(ctx, split), best, best_order);
  }
}

void canonical_order(const Graph& g, std::string& enc, std::vector<std::size_t>& order) {
  Ctx ctx;
  ctx.g = &g;
  for (const Vertex& v : g.vertices()) {
    ctx.id_index[v.id] = ctx.ids.size();
    ctx.ids.push_back(v.id);
  }
  std::vector<int> color(ctx.ids.size(), 0);
  enc.clear();
  order.clear();
  search(ctx, refine(ctx, color), enc, order);
}

}  // namespace

std::string canonical_encoding(const Graph& g) {
  std::string enc;
  std::vector<std::size_t> order;
  canonical_order(g, enc, order);
  return enc;
}

Graph canonical_form(const Graph& g) {
  std::string enc;
  std::vector<std::size_t> order;
  canonical_order(g, enc, order);

  std::map<std::string, std::string> ren;
  std::vector<Vertex> vertices;
  for (std::size_t r = 0; r < order.size(); ++r) {
    const Vertex& v = g.vertices()[order[r]];
    ren[v.id] = "v" + std::to_string(r + 1);
    vertices.push_back({ren[v.id], v.label});
  }
  auto fix = [&](Endpoint e) {
    if (!e.boundary) e.vertex = ren.at(e.vertex);
    return e;
  };
  std::vector<Wire> h, v;
  for (const Wire& w : g.h_wires()) h.push_back({fix(w.from), fix(w.to)});
  for (const Wire& w : g.v_wires()) v.push_back({fix(w.from), fix(w.to)});
  auto wire_less = [](const Wire& a, const Wire& b) {
    auto key = [](const Endpoint& e) { return std::make_tuple(!e.boundary, e.vertex, e.index); };
    return std::make_pair(key(a.from), key(a.to)) < std::make_pair(key(b.from), key(b.to));
  };
  std::sort(h.begin(), h.end(), wire_less);
  std::sort(v.begin(), v.end(), wire_less);
  return Graph::build(g.m(), g.n(), g.k(), g.l(), std::move(vertices), std::move(h), std::move(v));
}

std::string canonical_digest(const Graph& g) {
  // FNV-1a 64, stable across platforms
  std::string enc = canonical_encoding(g);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : enc) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.m() != b.m() || a.n() != b.n() || a.k() != b.k() || a.l() != b.l()) return false;
  if (a.vertices().size() != b.vertices().size()) return false;
  return canonical_encoding(a) == canonical_encoding(b);
}

}  // namespace dpgc
