#include "rewrite.hpp"

#include <algorithm>
#include <set>

#include "builder.hpp"
#include "instrument.hpp"

namespace dpgc {

RewriteRule make_rule(const std::string& name, Graph lhs, Graph rhs, Model model) {
  if (lhs.m() != rhs.m() || lhs.n() != rhs.n() || lhs.k() != rhs.k() || lhs.l() != rhs.l())
    throw validation_error("rewrite rule " + name + " has mismatched boundary arities");
  if (!instrument_equal(evaluate(lhs, model), evaluate(rhs, model), 1e-9))
    throw validation_error("rewrite rule " + name + " is not semantics-preserving");
  return RewriteRule{name, std::move(lhs), std::move(rhs), model};
}

RewriteRule rule_corr_vs_entangling(const std::string& corr, int port) {
  if (port != 1 && port != 2) throw validation_error("entangler port must be 1 or 2");
  Graph lhs = [&] {
    GraphBuilder gb(2, 2, 1, 0);
    std::string c = gb.add("c", make_label(corr), {gb.bh(port)}, {gb.bv(1)});
    std::vector<Endpoint> ins(2);
    ins[port - 1] = gb.ho(c);
    ins[2 - port] = gb.bh(3 - port);
    std::string e = gb.add("e", make_label("E"), ins);
    gb.out_h(1, gb.ho(e, 1));
    gb.out_h(2, gb.ho(e, 2));
    return std::move(gb).done();
  }();
  Graph rhs = [&] {
    GraphBuilder gb(2, 2, 1, 0);
    std::string e = gb.add("e", make_label("E"), {gb.bh(1), gb.bh(2)});
    if (corr == "CX") {
      // the X jumps the entangler and drops a Z on the partner wire
      std::string cp = gb.add("cp", make_label("c"), {}, {gb.bv(1)});
      std::string x = gb.add("x", make_label("CX"), {gb.ho(e, port)}, {gb.vo(cp, 1)});
      std::string z = gb.add("z", make_label("CZ"), {gb.ho(e, 3 - port)}, {gb.vo(cp, 2)});
      gb.out_h(port, gb.ho(x));
      gb.out_h(3 - port, gb.ho(z));
    } else {
      std::string z = gb.add("z", make_label("CZ"), {gb.ho(e, port)}, {gb.bv(1)});
      gb.out_h(port, gb.ho(z));
      gb.out_h(3 - port, gb.ho(e, 3 - port));
    }
    return std::move(gb).done();
  }();
  return make_rule(corr + "-vs-E" + std::to_string(port), std::move(lhs), std::move(rhs), Model::M);
}

RewriteRule rule_corr_vs_measurement(const std::string& corr, const Angle& alpha) {
  Graph lhs = [&] {
    GraphBuilder gb(1, 0, 2, 1);
    std::string c = gb.add("c", make_label(corr), {gb.bh(1)}, {gb.bv(1)});
    std::string mv = gb.add("m", make_m_label(alpha), {gb.ho(c)}, {gb.bv(2)});
    gb.out_v(1, gb.vo(mv));
    return std::move(gb).done();
  }();
  Graph rhs = [&] {
    GraphBuilder gb(1, 0, 2, 1);
    if (corr == "CX") {
      // the X flips the effective sign input
      std::string x = gb.add("x", make_label("xor"), {}, {gb.bv(1), gb.bv(2)});
      std::string mv = gb.add("m", make_m_label(alpha), {gb.bh(1)}, {gb.vo(x)});
      gb.out_v(1, gb.vo(mv));
    } else {
      // the Z flips the outcome
      std::string mv = gb.add("m", make_m_label(alpha), {gb.bh(1)}, {gb.bv(2)});
      std::string x = gb.add("x", make_label("xor"), {}, {gb.bv(1), gb.vo(mv)});
      gb.out_v(1, gb.vo(x));
    }
    return std::move(gb).done();
  }();
  return make_rule(corr + "-vs-M(" + alpha.str() + ")", std::move(lhs), std::move(rhs), Model::M);
}

RewriteRule rule_corr_vs_xy_measurement(const std::string& corr) {
  Graph lhs = [&] {
    GraphBuilder gb(1, 0, 2, 1);
    std::string c = gb.add("c", make_label(corr), {gb.bh(1)}, {gb.bv(1)});
    std::string mv = gb.add("m", make_label("MXY"), {gb.ho(c)}, {gb.bv(2)});
    gb.out_v(1, gb.vo(mv));
    return std::move(gb).done();
  }();
  Graph rhs = [&] {
    GraphBuilder gb(1, 0, 2, 1);
    if (corr == "CX") {
      // outcome flips only in the Y basis: t = u xor (r and s)
      std::string cp = gb.add("cp", make_label("c"), {}, {gb.bv(2)});
      std::string mv = gb.add("m", make_label("MXY"), {gb.bh(1)}, {gb.vo(cp, 1)});
      std::string av = gb.add("a", make_label("and"), {}, {gb.bv(1), gb.vo(cp, 2)});
      std::string x = gb.add("x", make_label("xor"), {}, {gb.vo(mv), gb.vo(av)});
      gb.out_v(1, gb.vo(x));
    } else {
      // S^r before the measurement becomes X^r before the r-shifted basis
      std::string cp = gb.add("cp", make_label("c"), {}, {gb.bv(1)});
      std::string bas = gb.add("bas", make_label("xor"), {}, {gb.vo(cp, 1), gb.bv(2)});
      std::string x = gb.add("x", make_label("CX"), {gb.bh(1)}, {gb.vo(cp, 2)});
      std::string mv = gb.add("m", make_label("MXY"), {gb.ho(x)}, {gb.vo(bas)});
      gb.out_v(1, gb.vo(mv));
    }
    return std::move(gb).done();
  }();
  return make_rule(corr + "-vs-MXY", std::move(lhs), std::move(rhs), Model::PTilde);
}

std::vector<RewriteRule> standard_rules(const Angle& alpha) {
  return {rule_corr_vs_entangling("CX", 1), rule_corr_vs_entangling("CX", 2),
          rule_corr_vs_entangling("CZ", 1), rule_corr_vs_entangling("CZ", 2),
          rule_corr_vs_measurement("CX", alpha), rule_corr_vs_measurement("CZ", alpha)};
}

namespace {

// wiring consistency of a candidate assignment: every lhs wire between two
// matched vertices must exist in the host between the mapped ports, and wires
// out of matched vertices may not collide
bool check_mapping(const Graph& g, const Graph& lhs, const std::map<std::string, std::string>& vm) {
  auto mapped = [&](const Endpoint& e) { return Endpoint::at_vertex(vm.at(e.vertex), e.index); };
  auto check_set = [&](const std::vector<Wire>& lw, bool horizontal) {
    for (const Wire& w : lw) {
      bool from_in = !w.from.boundary && vm.count(w.from.vertex);
      bool to_in = !w.to.boundary && vm.count(w.to.vertex);
      if (from_in && to_in) {
        const Wire& hw = horizontal ? g.h_wire_from(mapped(w.from)) : g.v_wire_from(mapped(w.from));
        if (!(hw.to == mapped(w.to))) return false;
      }
    }
    return true;
  };
  return check_set(lhs.h_wires(), true) && check_set(lhs.v_wires(), false);
}

void search_occurrences(const Graph& g, const Graph& lhs, std::size_t next,
                        const std::vector<const Vertex*>& lhs_verts,
                        std::map<std::string, std::string>& vm, std::set<std::string>& used,
                        std::vector<Occurrence>& out) {
  if (next == lhs_verts.size()) {
    if (check_mapping(g, lhs, vm)) out.push_back(Occurrence{vm});
    return;
  }
  const Vertex* lv = lhs_verts[next];
  for (const Vertex& gv : g.vertices()) {
    if (used.count(gv.id) || !(gv.label == lv->label)) continue;
    vm[lv->id] = gv.id;
    used.insert(gv.id);
    // prune early
    if (check_mapping(g, lhs, vm))
      search_occurrences(g, lhs, next + 1, lhs_verts, vm, used, out);
    used.erase(gv.id);
    vm.erase(lv->id);
  }
}

}  // namespace

std::vector<Occurrence> find_occurrences(const Graph& g, const RewriteRule& rule) {
  std::vector<const Vertex*> lhs_verts;
  for (const Vertex& v : rule.lhs.vertices()) lhs_verts.push_back(&v);
  std::vector<Occurrence> out;
  std::map<std::string, std::string> vm;
  std::set<std::string> used;
  search_occurrences(g, rule.lhs, 0, lhs_verts, vm, used, out);
  return out;
}

Graph apply_rewrite(const Graph& g, const RewriteRule& rule, const Occurrence& occ,
                    const std::string& tag) {
  const Graph& lhs = rule.lhs;
  const Graph& rhs = rule.rhs;
  for (const Vertex& lv : lhs.vertices()) {
    auto it = occ.vertex_map.find(lv.id);
    if (it == occ.vertex_map.end()) throw validation_error("occurrence does not cover " + lv.id);
    if (!g.has_vertex(it->second) || !(g.vertex(it->second).label == lv.label))
      throw validation_error("occurrence is not a match of the rule pattern");
  }
  if (!check_mapping(g, lhs, occ.vertex_map))
    throw validation_error("occurrence is not a match of the rule pattern");

  std::set<std::string> removed;
  for (const auto& [l, h] : occ.vertex_map) removed.insert(h);

  auto host_of = [&](const Endpoint& e) {
    return Endpoint::at_vertex(occ.vertex_map.at(e.vertex), e.index);
  };
  auto rhs_id = [&](const std::string& id) { return tag + "." + id; };

  std::vector<Vertex> verts;
  for (const Vertex& v : g.vertices())
    if (!removed.count(v.id)) verts.push_back(v);
  for (const Vertex& v : rhs.vertices()) verts.push_back({rhs_id(v.id), v.label});

  auto splice = [&](const std::vector<Wire>& gw, const std::vector<Wire>& lw,
                    const std::vector<Wire>& rw, bool horizontal, int bin, int bout,
                    std::vector<Wire>& out) {
    (void)horizontal;
    // where the pattern's boundary ports sit in the host
    std::vector<Endpoint> ext_src(bin + 1), ext_tgt(bout + 1);
    std::vector<int> in_shared(bin + 1, 0);  // lhs bout index wired straight to lhs bin
    for (const Wire& w : lw) {
      if (w.from.boundary && w.to.boundary)
        throw internal_error("rule patterns with passthrough wires are not supported");
      if (w.from.boundary) {
        // the host wire targeting the mapped port
        Endpoint tgt = host_of(w.to);
        for (const Wire& hw : gw)
          if (hw.to == tgt) ext_src[w.from.index] = hw.from;
      }
      if (w.to.boundary) {
        Endpoint src = host_of(w.from);
        for (const Wire& hw : gw)
          if (hw.from == src) ext_tgt[w.to.index] = hw.to;
      }
    }
    // boundary-in whose external source is itself a removed-vertex port feeding
    // a boundary-out of the pattern: connect rhs to rhs
    for (int i = 1; i <= bin; ++i) {
      const Endpoint& s = ext_src[i];
      if (!s.boundary && removed.count(s.vertex)) {
        for (const Wire& w : lw)
          if (w.to.boundary && host_of(w.from) == s) in_shared[i] = w.to.index;
      }
    }

    // host wires not touching the occurrence survive
    for (const Wire& hw : gw) {
      bool from_rm = !hw.from.boundary && removed.count(hw.from.vertex);
      bool to_rm = !hw.to.boundary && removed.count(hw.to.vertex);
      if (!from_rm && !to_rm) out.push_back(hw);
    }
    // rhs wires, with boundary ports reattached to the host
    auto rhs_at = [&](const Endpoint& e) { return Endpoint::at_vertex(rhs_id(e.vertex), e.index); };
    std::vector<Endpoint> rhs_src_of_out(bout + 1);
    for (const Wire& w : rw) {
      if (w.from.boundary && w.to.boundary)
        throw internal_error("rule replacements with passthrough wires are not supported");
      if (w.to.boundary) rhs_src_of_out[w.to.index] = rhs_at(w.from);
    }
    for (const Wire& w : rw) {
      if (w.to.boundary) continue;  // handled below
      Endpoint to = rhs_at(w.to);
      if (w.from.boundary) {
        int i = w.from.index;
        if (in_shared[i])
          out.push_back({rhs_src_of_out[in_shared[i]], to});
        else
          out.push_back({ext_src[i], to});
      } else {
        out.push_back({rhs_at(w.from), to});
      }
    }
    for (int j = 1; j <= bout; ++j) {
      if (rhs_src_of_out[j].vertex.empty() && !rhs_src_of_out[j].boundary) continue;
      // skip boundary-outs consumed by an internal share
      bool shared = false;
      for (int i = 1; i <= bin; ++i)
        if (in_shared[i] == j) shared = true;
      if (!shared) out.push_back({rhs_src_of_out[j], ext_tgt[j]});
    }
  };

  std::vector<Wire> h, v;
  splice(g.h_wires(), lhs.h_wires(), rhs.h_wires(), true, lhs.m(), lhs.n(), h);
  splice(g.v_wires(), lhs.v_wires(), rhs.v_wires(), false, lhs.k(), lhs.l(), v);
  return Graph::build(g.m(), g.n(), g.k(), g.l(), std::move(verts), std::move(h), std::move(v));
}

namespace {

bool is_correction(const Label& lb) { return lb.name == "CX" || lb.name == "CZ"; }

bool is_prep_layer(const Label& lb) { return lb.name == "NX" || lb.name == "E"; }

// one pushing step: find a correction immediately followed by E or M
struct Redex {
  std::string corr_id, next_id;
  int port = 0;  // E input port when next is the entangler
};

std::optional<Redex> find_redex(const Graph& g) {
  // scan in reverse topological order so downstream corrections move first
  auto order = g.topo_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex& v = g.vertex(*it);
    if (!is_correction(v.label)) continue;
    const Wire& w = g.h_wire_from(Endpoint::at_vertex(v.id, 1));
    if (w.to.boundary) continue;
    const Vertex& nxt = g.vertex(w.to.vertex);
    if (nxt.label.name == "E") return Redex{v.id, nxt.id, w.to.index};
    if (nxt.label.name == "M") return Redex{v.id, nxt.id, 0};
    if (is_correction(nxt.label)) continue;  // chains resolve from the right
    throw validation_error("no rewrite rule for correction before label " + nxt.label.name);
  }
  return std::nullopt;
}

}  // namespace

StandardForm standard_form(const Graph& g) {
  LabelSemantics sem(Model::M);
  for (const Vertex& v : g.vertices())
    if (!sem.resolvable(v.label))
      throw validation_error("standard form needs an MBQC-labeled graph; found " + v.label.name);

  Graph work = g;
  long cap = 10 * long(g.vertices().size()) * long(g.vertices().size()) + 50;
  long steps = 0;
  while (auto rx = find_redex(work)) {
    if (++steps > cap)
      throw validation_error("standard form did not terminate (missing rule?)");
    const Label& cl = work.vertex(rx->corr_id).label;
    const Label& nl = work.vertex(rx->next_id).label;
    RewriteRule rule = (nl.name == "E")
                           ? rule_corr_vs_entangling(cl.name, rx->port)
                           : rule_corr_vs_measurement(cl.name, nl.params.at("alpha"));
    Occurrence occ;
    occ.vertex_map["c"] = rx->corr_id;
    occ.vertex_map[nl.name == "E" ? "e" : "m"] = rx->next_id;
    work = apply_rewrite(work, rule, occ, "rw" + std::to_string(steps));
  }

  StandardForm sf;
  sf.layered = work;

  // layer assignment
  enum Layer { P = 0, MEAS = 1, CORR = 2 };
  std::map<std::string, Layer> layer;
  for (const Vertex& v : work.vertices())
    layer[v.id] = is_prep_layer(v.label) ? P : (is_correction(v.label) ? CORR : MEAS);

  auto region_of_src = [&](const Endpoint& e) { return e.boundary ? -1 : int(layer[e.vertex]); };
  auto region_of_tgt = [&](const Endpoint& e) { return e.boundary ? 3 : int(layer[e.vertex]); };

  // horizontal cut lists, deterministic order
  auto wire_key = [](const Wire& w) {
    return std::make_tuple(!w.from.boundary, w.from.vertex, w.from.index);
  };
  std::vector<const Wire*> cut1, cut2;
  for (const Wire& w : work.h_wires()) {
    int rs = region_of_src(w.from), rt = region_of_tgt(w.to);
    if (rs > rt) throw internal_error("standard form layers are not ordered");
    if (rs <= int(P) && rt >= int(MEAS)) cut1.push_back(&w);
    if (rs <= int(MEAS) && rt >= int(CORR)) cut2.push_back(&w);
  }
  auto by_key = [&](const Wire* a, const Wire* b) { return wire_key(*a) < wire_key(*b); };
  std::sort(cut1.begin(), cut1.end(), by_key);
  std::sort(cut2.begin(), cut2.end(), by_key);
  auto index_in = [&](const std::vector<const Wire*>& cut, const Wire& w) {
    for (std::size_t i = 0; i < cut.size(); ++i)
      if (cut[i]->from == w.from && cut[i]->to == w.to) return int(i) + 1;
    return 0;
  };

  // vertical input split and meas->corr crossings
  std::vector<const Wire*> crossings;
  for (const Wire& w : work.v_wires())
    if (!w.from.boundary && layer[w.from.vertex] == MEAS && !w.to.boundary &&
        layer[w.to.vertex] == CORR)
      crossings.push_back(&w);
  std::sort(crossings.begin(), crossings.end(), by_key);
  sf.crossings = int(crossings.size());
  auto crossing_index = [&](const Wire& w) {
    for (std::size_t i = 0; i < crossings.size(); ++i)
      if (crossings[i]->from == w.from && crossings[i]->to == w.to) return int(i) + 1;
    return 0;
  };

  for (int j = 1; j <= work.k(); ++j) {
    const Wire& w = work.v_wire_from(Endpoint::at_boundary(j));
    bool to_corr = !w.to.boundary && layer[w.to.vertex] == CORR;
    (to_corr ? sf.vin_of_corr : sf.vin_of_meas).push_back(j);
  }
  auto meas_vin_index = [&](int orig) {
    for (std::size_t i = 0; i < sf.vin_of_meas.size(); ++i)
      if (sf.vin_of_meas[i] == orig) return int(i) + 1;
    return 0;
  };
  auto corr_vin_index = [&](int orig) {
    for (std::size_t i = 0; i < sf.vin_of_corr.size(); ++i)
      if (sf.vin_of_corr[i] == orig) return int(i) + 1;
    return 0;
  };

  // build the three graphs
  {
    std::vector<Vertex> verts;
    std::vector<Wire> h;
    for (const Vertex& v : work.vertices())
      if (layer[v.id] == P) verts.push_back(v);
    for (const Wire& w : work.h_wires()) {
      int rs = region_of_src(w.from), rt = region_of_tgt(w.to);
      if (rt <= int(P)) h.push_back(w);  // internal to prep
      else if (rs <= int(P)) h.push_back({w.from, Endpoint::at_boundary(index_in(cut1, w))});
    }
    sf.prep = Graph::build(work.m(), int(cut1.size()), 0, 0, std::move(verts), std::move(h), {});
  }
  {
    std::vector<Vertex> verts;
    std::vector<Wire> h, v;
    for (const Vertex& v : work.vertices())
      if (layer[v.id] == MEAS) verts.push_back(v);
    for (const Wire& w : work.h_wires()) {
      int rs = region_of_src(w.from), rt = region_of_tgt(w.to);
      if (rs <= int(P) && rt >= int(MEAS)) {
        Endpoint from = Endpoint::at_boundary(index_in(cut1, w));
        Endpoint to = (rt == int(MEAS)) ? w.to : Endpoint::at_boundary(index_in(cut2, w));
        h.push_back({from, to});
      }
    }
    for (const Wire& w : work.v_wires()) {
      int ls = w.from.boundary ? -1 : int(layer[w.from.vertex]);
      int lt = w.to.boundary ? -1 : int(layer[w.to.vertex]);
      if (w.from.boundary) {
        int idx = meas_vin_index(w.from.index);
        if (!idx) continue;  // consumed by corr
        Endpoint to = w.to.boundary ? w.to : w.to;  // boundary passthrough keeps index
        v.push_back({Endpoint::at_boundary(idx), to});
      } else if (ls == MEAS) {
        if (w.to.boundary) {
          v.push_back(w);
        } else if (lt == MEAS) {
          v.push_back(w);
        } else {
          // crossing into corr: exposed after the original outputs
          v.push_back({w.from, Endpoint::at_boundary(work.l() + crossing_index(w))});
        }
      }
    }
    sf.meas = Graph::build(int(cut1.size()), int(cut2.size()), int(sf.vin_of_meas.size()),
                           work.l() + sf.crossings, std::move(verts), std::move(h), std::move(v));
  }
  {
    std::vector<Vertex> verts;
    std::vector<Wire> h, v;
    for (const Vertex& v2 : work.vertices())
      if (layer[v2.id] == CORR) verts.push_back(v2);
    for (const Wire& w : work.h_wires()) {
      int rs = region_of_src(w.from), rt = region_of_tgt(w.to);
      if (rt >= int(CORR) || (rs == int(CORR))) {
        Endpoint from = (rs <= int(MEAS)) ? Endpoint::at_boundary(index_in(cut2, w)) : w.from;
        h.push_back({from, w.to});
      }
    }
    for (const Wire& w : work.v_wires()) {
      if (w.from.boundary) {
        int idx = corr_vin_index(w.from.index);
        if (!idx) continue;
        v.push_back({Endpoint::at_boundary(idx), w.to});
      } else if (layer[w.from.vertex] == MEAS && !w.to.boundary &&
                 layer[w.to.vertex] == CORR) {
        v.push_back({Endpoint::at_boundary(int(sf.vin_of_corr.size()) + crossing_index(w)), w.to});
      }
    }
    sf.corr = Graph::build(int(cut2.size()), work.n(), int(sf.vin_of_corr.size()) + sf.crossings,
                           0, std::move(verts), std::move(h), std::move(v));
  }
  return sf;
}

Graph reglue_standard_form(const StandardForm& sf) {
  // stitch prep|meas|corr back together, rewiring the exposed outcome bits
  auto pre = [](const std::string& t, const Endpoint& e) {
    if (e.boundary) return e;
    return Endpoint::at_vertex(t + "." + e.vertex, e.index);
  };
  std::vector<Vertex> verts;
  for (const Vertex& v : sf.prep.vertices()) verts.push_back({"p." + v.id, v.label});
  for (const Vertex& v : sf.meas.vertices()) verts.push_back({"m." + v.id, v.label});
  for (const Vertex& v : sf.corr.vertices()) verts.push_back({"x." + v.id, v.label});

  std::vector<Wire> h, v;
  // horizontal: prep internals; cut1 splice; meas h-wires are all boundary to
  // boundary-or-vertex; cut2 splice into corr
  for (const Wire& w : sf.prep.h_wires())
    if (!w.to.boundary) h.push_back({pre("p", w.from), pre("p", w.to)});
  for (int j = 1; j <= sf.prep.n(); ++j) {
    Endpoint src = pre("p", sf.prep.h_wire_to(Endpoint::at_boundary(j)).from);
    const Wire& mw = sf.meas.h_wire_from(Endpoint::at_boundary(j));
    if (!mw.to.boundary) {
      h.push_back({src, pre("m", mw.to)});
    } else {
      const Wire& cw = sf.corr.h_wire_from(Endpoint::at_boundary(mw.to.index));
      h.push_back({src, pre("x", cw.to)});
    }
  }
  for (const Wire& w : sf.corr.h_wires())
    if (!w.from.boundary) h.push_back({pre("x", w.from), pre("x", w.to)});

  // vertical: meas boundary indices of meas map back to the original positions
  int km = int(sf.vin_of_meas.size());
  for (const Wire& w : sf.meas.v_wires()) {
    Endpoint from = w.from.boundary ? Endpoint::at_boundary(sf.vin_of_meas[w.from.index - 1])
                                    : pre("m", w.from);
    if (!w.to.boundary) {
      v.push_back({from, pre("m", w.to)});
    } else if (w.to.index <= sf.meas.l() - sf.crossings) {
      v.push_back({from, w.to});  // original boundary output
    } else {
      int cross = w.to.index - (sf.meas.l() - sf.crossings);
      const Wire& cw =
          sf.corr.v_wire_from(Endpoint::at_boundary(int(sf.vin_of_corr.size()) + cross));
      v.push_back({from, pre("x", cw.to)});
    }
  }
  for (const Wire& w : sf.corr.v_wires()) {
    if (!w.from.boundary) continue;
    if (w.from.index <= int(sf.vin_of_corr.size()))
      v.push_back({Endpoint::at_boundary(sf.vin_of_corr[w.from.index - 1]), pre("x", w.to)});
    // crossing inputs were handled from the meas side
  }
  (void)km;

  int l_orig = sf.meas.l() - sf.crossings;
  int k_orig = int(sf.vin_of_meas.size() + sf.vin_of_corr.size());
  return Graph::build(sf.prep.m(), sf.corr.n(), k_orig, l_orig, std::move(verts), std::move(h),
                      std::move(v));
}

}  // namespace dpgc
