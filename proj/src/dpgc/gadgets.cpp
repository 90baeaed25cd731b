#include "gadgets.hpp"

#include <sstream>

#include "builder.hpp"

namespace dpgc {

namespace {

// J(alpha) pattern inlined onto an open wire: prepare |+>, entangle, measure
// at angle alpha with the adaptive input held at 1, X-correct the fresh wire.
Endpoint inline_j(GraphBuilder& gb, const std::string& tag, const Angle& alpha, Endpoint src) {
  std::string o = gb.add(tag + ".one", make_label("one"), {});
  std::string n = gb.add(tag + ".prep", make_label("NX"), {});
  std::string e = gb.add(tag + ".ent", make_label("E"), {src, gb.ho(n)});
  std::string mv = gb.add(tag + ".meas", make_m_label(alpha), {gb.ho(e, 1)}, {gb.vo(o)});
  std::string x = gb.add(tag + ".corr", make_label("CX"), {gb.ho(e, 2)}, {gb.vo(mv)});
  return gb.ho(x);
}

// the MBPC Hadamard pattern: |+> prep, entangle, X-measure, X-correct
Endpoint inline_h_mbpc(GraphBuilder& gb, const std::string& tag, Endpoint src) {
  std::string z = gb.add(tag + ".zero", make_label("zero"), {});
  std::string n = gb.add(tag + ".prep", make_label("NX"), {});
  std::string e = gb.add(tag + ".ent", make_label("E"), {src, gb.ho(n)});
  std::string mv = gb.add(tag + ".meas", make_label("MXY"), {gb.ho(e, 1)}, {gb.vo(z)});
  std::string x = gb.add(tag + ".corr", make_label("CX"), {gb.ho(e, 2)}, {gb.vo(mv)});
  return gb.ho(x);
}

// GHZ chain: |+> preps, entangle neighbours, Hadamard every wire after the
// first. Returns the n open wires in qubit order.
std::vector<Endpoint> inline_ghz(GraphBuilder& gb, const std::string& tag, int n) {
  std::vector<Endpoint> wires;
  Endpoint cur = gb.ho(gb.add(tag + ".p1", make_label("NX"), {}));
  for (int j = 2; j <= n; ++j) {
    std::string pj = gb.add(tag + ".p" + std::to_string(j), make_label("NX"), {});
    std::string e = gb.add(tag + ".e" + std::to_string(j), make_label("E"), {cur, gb.ho(pj)});
    wires.push_back(gb.ho(e, 1));
    cur = inline_h_mbpc(gb, tag + ".h" + std::to_string(j), gb.ho(e, 2));
  }
  wires.push_back(cur);
  return wires;
}

// X^r with QCM corrections: H, S^r, S^r, H
Endpoint inline_x_via_hs(GraphBuilder& gb, const std::string& tag, Endpoint wire, Endpoint r1,
                         Endpoint r2) {
  std::string o1 = gb.add(tag + ".one1", make_label("one"), {});
  std::string h1 = gb.add(tag + ".h1", make_label("CH"), {wire}, {gb.vo(o1)});
  std::string s1 = gb.add(tag + ".s1", make_label("CS"), {gb.ho(h1)}, {r1});
  std::string s2 = gb.add(tag + ".s2", make_label("CS"), {gb.ho(s1)}, {r2});
  std::string o2 = gb.add(tag + ".one2", make_label("one"), {});
  std::string h2 = gb.add(tag + ".h2", make_label("CH"), {gb.ho(s2)}, {gb.vo(o2)});
  return gb.ho(h2);
}

// deterministic |+> preparation with QCM labels: measure the magic state to
// |r'>, Hadamard, undo the sign with Z^{r'} = S^{r'} S^{r'}
Endpoint inline_plus_in_q(GraphBuilder& gb, const std::string& tag) {
  std::string nt = gb.add(tag + ".prep", make_label("NT"), {});
  std::string mz = gb.add(tag + ".meas", make_label("MZnd"), {gb.ho(nt)});
  std::string c = gb.add(tag + ".copy", make_label("c"), {}, {gb.vo(mz)});
  std::string o = gb.add(tag + ".one", make_label("one"), {});
  std::string h = gb.add(tag + ".h", make_label("CH"), {gb.ho(mz)}, {gb.vo(o)});
  std::string s1 = gb.add(tag + ".s1", make_label("CS"), {gb.ho(h)}, {gb.vo(c, 1)});
  std::string s2 = gb.add(tag + ".s2", make_label("CS"), {gb.ho(s1)}, {gb.vo(c, 2)});
  return gb.ho(s2);
}

}  // namespace

Graph gadget_j(const Angle& alpha) {
  GraphBuilder gb(1, 1, 0, 0);
  gb.out_h(1, inline_j(gb, "j", alpha, gb.bh(1)));
  return std::move(gb).done();
}

Graph gadget_teleport() {
  GraphBuilder gb(1, 1, 0, 0);
  std::string nt = gb.add("prep1", make_label("NX"), {});
  std::string nd = gb.add("prep2", make_label("NX"), {});
  std::string el = gb.add("ent1", make_label("E"), {gb.bh(1), gb.ho(nt)});
  std::string em = gb.add("ent2", make_label("E"), {gb.ho(el, 2), gb.ho(nd)});
  std::string o1 = gb.add("one1", make_label("one"), {});
  std::string mt = gb.add("meas1", make_m_label(Angle(0, 1)), {gb.ho(el, 1)}, {gb.vo(o1)});
  std::string o2 = gb.add("one2", make_label("one"), {});
  std::string md = gb.add("meas2", make_m_label(Angle(0, 1)), {gb.ho(em, 1)}, {gb.vo(o2)});
  std::string z = gb.add("zcorr", make_label("CZ"), {gb.ho(em, 2)}, {gb.vo(mt)});
  std::string x = gb.add("xcorr", make_label("CX"), {gb.ho(z)}, {gb.vo(md)});
  gb.out_h(1, gb.ho(x));
  return std::move(gb).done();
}

Graph gadget_t() {
  GraphBuilder gb(1, 1, 0, 0);
  std::string nt = gb.add("magic", make_label("NT"), {});
  std::string o1 = gb.add("one1", make_label("one"), {});
  std::string h1 = gb.add("h1", make_label("CH"), {gb.ho(nt)}, {gb.vo(o1)});
  std::string e = gb.add("ent", make_label("E"), {gb.ho(h1), gb.bh(1)});
  std::string o2 = gb.add("one2", make_label("one"), {});
  std::string h2 = gb.add("h2", make_label("CH"), {gb.ho(e, 1)}, {gb.vo(o2)});
  std::string mz = gb.add("meas", make_label("MZnd"), {gb.ho(h2)});
  gb.add("sink", make_label("tr"), {gb.ho(mz)});
  std::string s = gb.add("scorr", make_label("CS"), {gb.ho(e, 2)}, {gb.vo(mz)});
  gb.out_h(1, gb.ho(s));
  return std::move(gb).done();
}

Graph gadget_h_mbpc() {
  GraphBuilder gb(1, 1, 0, 0);
  gb.out_h(1, inline_h_mbpc(gb, "h", gb.bh(1)));
  return std::move(gb).done();
}

Graph gadget_ghz(int n) {
  if (n < 1) throw validation_error("GHZ gadget needs n >= 1");
  GraphBuilder gb(0, n, 0, 0);
  auto wires = inline_ghz(gb, "ghz", n);
  for (int j = 1; j <= n; ++j) gb.out_h(j, wires[j - 1]);
  return std::move(gb).done();
}

Graph gadget_or() {
  // GHZ(3) with X/Y measurements; third setting is the xor of the two input
  // settings; output is the NOT of the outcome parity, as drawn.
  GraphBuilder gb(0, 0, 2, 1);
  auto wires = inline_ghz(gb, "ghz", 3);
  std::string c1 = gb.add("copy1", make_label("c"), {}, {gb.bv(1)});
  std::string c2 = gb.add("copy2", make_label("c"), {}, {gb.bv(2)});
  std::string xt = gb.add("setting3", make_label("xor"), {}, {gb.vo(c1, 2), gb.vo(c2, 2)});
  std::string mu = gb.add("meas1", make_label("MXY"), {wires[0]}, {gb.vo(c1, 1)});
  std::string ml = gb.add("meas2", make_label("MXY"), {wires[1]}, {gb.vo(c2, 1)});
  std::string mr = gb.add("meas3", make_label("MXY"), {wires[2]}, {gb.vo(xt)});
  std::string x1 = gb.add("par1", make_label("xor"), {}, {gb.vo(mu), gb.vo(ml)});
  std::string x2 = gb.add("par2", make_label("xor"), {}, {gb.vo(x1), gb.vo(mr)});
  std::string nt = gb.add("flip", make_label("not"), {}, {gb.vo(x2)});
  gb.out_v(1, gb.vo(nt));
  return std::move(gb).done();
}

Graph gadget_not() {
  GraphBuilder gb(0, 0, 1, 1);
  std::string o = gb.add("one", make_label("one"), {});
  std::string x = gb.add("xor", make_label("xor"), {}, {gb.bv(1), gb.vo(o)});
  gb.out_v(1, gb.vo(x));
  return std::move(gb).done();
}

Graph gadget_zero() {
  // the 1-state flipped
  GraphBuilder gb(0, 0, 0, 1);
  std::string o1 = gb.add("one1", make_label("one"), {});
  std::string o2 = gb.add("one2", make_label("one"), {});
  std::string x = gb.add("xor", make_label("xor"), {}, {gb.vo(o1), gb.vo(o2)});
  gb.out_v(1, gb.vo(x));
  return std::move(gb).done();
}

Graph gadget_and() {
  // De Morgan through the OR label
  GraphBuilder gb(0, 0, 2, 1);
  std::string n1 = gb.add("not1", make_label("not"), {}, {gb.bv(1)});
  std::string n2 = gb.add("not2", make_label("not"), {}, {gb.bv(2)});
  std::string o = gb.add("or", make_label("or"), {}, {gb.vo(n1), gb.vo(n2)});
  std::string n3 = gb.add("not3", make_label("not"), {}, {gb.vo(o)});
  gb.out_v(1, gb.vo(n3));
  return std::move(gb).done();
}

namespace {

// Core of the teleported J(pi/4): chain w-a-t-b with the magic state at t,
// X-measurements on w and a, the s2-selected X/Y measurement on t, and Pauli
// corrections Z^{s2}, X^{s1+u+s2}. `with_and` keeps the degenerate AND(s2,s2)
// the correction-elimination rules produce; otherwise the wiring is the
// simplified affine form X^{s1+u}.
Graph teleported_j_core(bool with_and) {
  GraphBuilder gb(1, 1, 0, 0);
  std::string na = gb.add("prep1", make_label("NX"), {});
  std::string nt = gb.add("magic", make_label("NT"), {});
  std::string nb = gb.add("prep2", make_label("NX"), {});
  std::string e1 = gb.add("ent1", make_label("E"), {gb.bh(1), gb.ho(na)});
  std::string e2 = gb.add("ent2", make_label("E"), {gb.ho(e1, 2), gb.ho(nt)});
  std::string e3 = gb.add("ent3", make_label("E"), {gb.ho(e2, 2), gb.ho(nb)});
  std::string z1 = gb.add("zero1", make_label("zero"), {});
  std::string m1 = gb.add("meas1", make_label("MXY"), {gb.ho(e1, 1)}, {gb.vo(z1)});
  std::string z2 = gb.add("zero2", make_label("zero"), {});
  std::string m2 = gb.add("meas2", make_label("MXY"), {gb.ho(e2, 1)}, {gb.vo(z2)});

  if (with_and) {
    // s2 fans out to: measurement basis, both AND inputs, the trailing parity
    // xor and the two S-corrections realizing Z^{s2}
    std::string ca = gb.add("cp1", make_label("c"), {}, {gb.vo(m2)});
    std::string cb = gb.add("cp2", make_label("c"), {}, {gb.vo(ca, 1)});
    std::string cc = gb.add("cp3", make_label("c"), {}, {gb.vo(ca, 2)});
    std::string cd = gb.add("cp4", make_label("c"), {}, {gb.vo(cb, 1)});
    std::string ce = gb.add("cp5", make_label("c"), {}, {gb.vo(cb, 2)});
    std::string m3 = gb.add("meas3", make_label("MXY"), {gb.ho(e3, 1)}, {gb.vo(cd, 1)});
    std::string av = gb.add("and", make_label("and"), {}, {gb.vo(cd, 2), gb.vo(ce, 1)});
    std::string x1 = gb.add("xr1", make_label("xor"), {}, {gb.vo(m3), gb.vo(av)});
    std::string x2 = gb.add("xr2", make_label("xor"), {}, {gb.vo(m1), gb.vo(x1)});
    std::string x3 = gb.add("xr3", make_label("xor"), {}, {gb.vo(x2), gb.vo(ce, 2)});
    std::string s1 = gb.add("zc1", make_label("CS"), {gb.ho(e3, 2)}, {gb.vo(cc, 1)});
    std::string s2 = gb.add("zc2", make_label("CS"), {gb.ho(s1)}, {gb.vo(cc, 2)});
    std::string xc = gb.add("xcorr", make_label("CX"), {gb.ho(s2)}, {gb.vo(x3)});
    gb.out_h(1, gb.ho(xc));
  } else {
    std::string ca = gb.add("cp1", make_label("c"), {}, {gb.vo(m2)});
    std::string cb = gb.add("cp2", make_label("c"), {}, {gb.vo(ca, 2)});
    std::string m3 = gb.add("meas3", make_label("MXY"), {gb.ho(e3, 1)}, {gb.vo(ca, 1)});
    std::string x1 = gb.add("xr1", make_label("xor"), {}, {gb.vo(m1), gb.vo(m3)});
    std::string s1 = gb.add("zc1", make_label("CS"), {gb.ho(e3, 2)}, {gb.vo(cb, 1)});
    std::string s2 = gb.add("zc2", make_label("CS"), {gb.ho(s1)}, {gb.vo(cb, 2)});
    std::string xc = gb.add("xcorr", make_label("CX"), {gb.ho(s2)}, {gb.vo(x1)});
    gb.out_h(1, gb.ho(xc));
  }
  return std::move(gb).done();
}

GadgetDictionary boolean_expansion_dictionary() {
  GadgetDictionary d;
  d.add(make_label("not"), gadget_not());
  d.add(make_label("zero"), gadget_zero());

  Label norlb;  // placeholder for the quantum gadget, which computes NOR
  norlb.name = "nor.tmp";
  norlb.v_in = 2;
  norlb.v_out = 1;
  GadgetDictionary wrap;
  wrap.add(norlb, gadget_or());
  wrap.add(make_label("not"), single_vertex(make_label("not")));

  {
    // or = not . nor
    GraphBuilder gb(0, 0, 2, 1);
    std::string g = gb.add("nor", norlb, {}, {gb.bv(1), gb.bv(2)});
    std::string n = gb.add("flip", make_label("not"), {}, {gb.vo(g)});
    gb.out_v(1, gb.vo(n));
    d.add(make_label("or"), paste(std::move(gb).done(), wrap));
  }
  {
    // and(x,y) = nor(not x, not y)
    GraphBuilder gb(0, 0, 2, 1);
    std::string n1 = gb.add("not1", make_label("not"), {}, {gb.bv(1)});
    std::string n2 = gb.add("not2", make_label("not"), {}, {gb.bv(2)});
    std::string g = gb.add("nor", norlb, {}, {gb.vo(n1), gb.vo(n2)});
    gb.out_v(1, gb.vo(g));
    d.add(make_label("and"), paste(std::move(gb).done(), wrap));
  }
  return d;
}

}  // namespace

Graph gadget_teleported_j(bool expand_and) {
  if (!expand_and) return teleported_j_core(false);
  return apply_partial_dictionary(teleported_j_core(true), boolean_expansion_dictionary());
}

Graph apply_partial_dictionary(const Graph& g, const GadgetDictionary& dict) {
  GadgetDictionary full = dict;
  for (const Vertex& v : g.vertices())
    if (!full.has(v.label)) full.add(v.label, single_vertex(v.label));
  return paste(g, full);
}

namespace {

void add_affine_identities(GadgetDictionary& d) {
  for (const char* nm : {"one", "zero", "not", "d", "c", "xor"})
    d.add(make_label(nm), single_vertex(make_label(nm)));
}

GadgetDictionary qc_to_mbqc() {
  GadgetDictionary d;
  d.add(make_label("H"), gadget_j(Angle(0, 1)));
  d.add(make_label("T"), compose_h(gadget_j(Angle(1, 4)), gadget_j(Angle(0, 1))));
  d.add(make_label("E"), single_vertex(make_label("E")));
  {
    // |r> = H Z^r |+>
    GraphBuilder gb(0, 1, 1, 0);
    std::string n = gb.add("prep", make_label("NX"), {});
    std::string z = gb.add("zcorr", make_label("CZ"), {gb.ho(n)}, {gb.bv(1)});
    gb.out_h(1, inline_j(gb, "had", Angle(0, 1), gb.ho(z)));
    d.add(make_label("NZ"), std::move(gb).done());
  }
  {
    // measure Z = Hadamard then measure at angle 0
    GraphBuilder gb(1, 0, 0, 1);
    Endpoint w = inline_j(gb, "had", Angle(0, 1), gb.bh(1));
    std::string o = gb.add("one", make_label("one"), {});
    std::string mv = gb.add("meas", make_m_label(Angle(0, 1)), {w}, {gb.vo(o)});
    gb.out_v(1, gb.vo(mv));
    d.add(make_label("MZ"), std::move(gb).done());
  }
  add_affine_identities(d);
  return d;
}

GadgetDictionary qc_to_qcm() {
  GadgetDictionary d;
  {
    // H-correction driven by the 1-state
    GraphBuilder gb(1, 1, 0, 0);
    std::string o = gb.add("one", make_label("one"), {});
    std::string h = gb.add("had", make_label("CH"), {gb.bh(1)}, {gb.vo(o)});
    gb.out_h(1, gb.ho(h));
    d.add(make_label("H"), std::move(gb).done());
  }
  d.add(make_label("T"), gadget_t());
  d.add(make_label("E"), single_vertex(make_label("E")));
  {
    // |r>: collapse the magic state to |r'>, then X^{r xor r'}
    GraphBuilder gb(0, 1, 1, 0);
    std::string nt = gb.add("prep", make_label("NT"), {});
    std::string mz = gb.add("meas", make_label("MZnd"), {gb.ho(nt)});
    std::string u = gb.add("diff", make_label("xor"), {}, {gb.bv(1), gb.vo(mz)});
    std::string c = gb.add("copy", make_label("c"), {}, {gb.vo(u)});
    gb.out_h(1, inline_x_via_hs(gb, "fix", gb.ho(mz), gb.vo(c, 1), gb.vo(c, 2)));
    d.add(make_label("NZ"), std::move(gb).done());
  }
  {
    GraphBuilder gb(1, 0, 0, 1);
    std::string mz = gb.add("meas", make_label("MZnd"), {gb.bh(1)});
    gb.add("sink", make_label("tr"), {gb.ho(mz)});
    gb.out_v(1, gb.vo(mz));
    d.add(make_label("MZ"), std::move(gb).done());
  }
  add_affine_identities(d);
  return d;
}

GadgetDictionary qc_to_mbpc() {
  GadgetDictionary d;
  d.add(make_label("H"), gadget_h_mbpc());
  d.add(make_label("T"), compose_h(gadget_teleported_j(false), gadget_h_mbpc()));
  d.add(make_label("E"), single_vertex(make_label("E")));
  {
    // |r> = H Z^r |+>, with Z^r as two S-corrections
    GraphBuilder gb(0, 1, 1, 0);
    std::string n = gb.add("prep", make_label("NX"), {});
    std::string c = gb.add("copy", make_label("c"), {}, {gb.bv(1)});
    std::string s1 = gb.add("zc1", make_label("CS"), {gb.ho(n)}, {gb.vo(c, 1)});
    std::string s2 = gb.add("zc2", make_label("CS"), {gb.ho(s1)}, {gb.vo(c, 2)});
    gb.out_h(1, inline_h_mbpc(gb, "had", gb.ho(s2)));
    d.add(make_label("NZ"), std::move(gb).done());
  }
  {
    GraphBuilder gb(1, 0, 0, 1);
    Endpoint w = inline_h_mbpc(gb, "had", gb.bh(1));
    std::string z = gb.add("zero", make_label("zero"), {});
    std::string mv = gb.add("meas", make_label("MXY"), {w}, {gb.vo(z)});
    gb.out_v(1, gb.vo(mv));
    d.add(make_label("MZ"), std::move(gb).done());
  }
  add_affine_identities(d);
  return d;
}

GadgetDictionary mbpc_to_qcm() {
  GadgetDictionary d;
  {
    GraphBuilder gb(0, 1, 0, 0);
    gb.out_h(1, inline_plus_in_q(gb, "plus"));
    d.add(make_label("NX"), std::move(gb).done());
  }
  d.add(make_label("NT"), single_vertex(make_label("NT")));
  d.add(make_label("E"), single_vertex(make_label("E")));
  d.add(make_label("CS"), single_vertex(make_label("CS")));
  {
    // X-correction through H S S H
    GraphBuilder gb(1, 1, 1, 0);
    std::string c = gb.add("copy", make_label("c"), {}, {gb.bv(1)});
    gb.out_h(1, inline_x_via_hs(gb, "x", gb.bh(1), gb.vo(c, 1), gb.vo(c, 2)));
    d.add(make_label("CX"), std::move(gb).done());
  }
  {
    // the X/Y measurement: S^s, H, nondestructive Z, outcome s xor u
    GraphBuilder gb(1, 0, 1, 1);
    std::string c = gb.add("copy", make_label("c"), {}, {gb.bv(1)});
    std::string s = gb.add("twist", make_label("CS"), {gb.bh(1)}, {gb.vo(c, 1)});
    std::string o = gb.add("one", make_label("one"), {});
    std::string h = gb.add("had", make_label("CH"), {gb.ho(s)}, {gb.vo(o)});
    std::string mz = gb.add("meas", make_label("MZnd"), {gb.ho(h)});
    gb.add("sink", make_label("tr"), {gb.ho(mz)});
    std::string x = gb.add("out", make_label("xor"), {}, {gb.vo(c, 2), gb.vo(mz)});
    gb.out_v(1, gb.vo(x));
    d.add(make_label("MXY"), std::move(gb).done());
  }
  {
    GraphBuilder gb(1, 0, 0, 1);
    std::string o = gb.add("one", make_label("one"), {});
    std::string h = gb.add("had", make_label("CH"), {gb.bh(1)}, {gb.vo(o)});
    std::string mz = gb.add("meas", make_label("MZnd"), {gb.ho(h)});
    gb.add("sink", make_label("tr"), {gb.ho(mz)});
    gb.out_v(1, gb.vo(mz));
    d.add(make_label("MX"), std::move(gb).done());
  }
  {
    GraphBuilder gb(1, 0, 0, 1);
    std::string o1 = gb.add("sone", make_label("one"), {});
    std::string s = gb.add("twist", make_label("CS"), {gb.bh(1)}, {gb.vo(o1)});
    std::string o = gb.add("one", make_label("one"), {});
    std::string h = gb.add("had", make_label("CH"), {gb.ho(s)}, {gb.vo(o)});
    std::string mz = gb.add("meas", make_label("MZnd"), {gb.ho(h)});
    gb.add("sink", make_label("tr"), {gb.ho(mz)});
    std::string n = gb.add("flip", make_label("not"), {}, {gb.vo(mz)});
    gb.out_v(1, gb.vo(n));
    d.add(make_label("MY"), std::move(gb).done());
  }
  add_affine_identities(d);
  return d;
}

}  // namespace

GadgetDictionary converter(const std::string& name) {
  if (name == "qc-to-mbqc") return qc_to_mbqc();
  if (name == "qc-to-qcm") return qc_to_qcm();
  if (name == "qc-to-mbpc") return qc_to_mbpc();
  if (name == "mbpc-to-qcm") return mbpc_to_qcm();
  if (name == "boolean-expansion") return boolean_expansion_dictionary();
  throw validation_error("unknown converter: " + name);
}

Model converter_target(const std::string& name) {
  if (name == "qc-to-mbqc") return Model::MPi4;
  if (name == "qc-to-qcm") return Model::Q;
  if (name == "qc-to-mbpc") return Model::PTilde;
  if (name == "mbpc-to-qcm") return Model::Q;
  if (name == "boolean-expansion") return Model::P;
  throw validation_error("unknown converter: " + name);
}

Angle parse_angle(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw validation_error("empty angle");
  bool neg = false;
  if (s[0] == '-') {
    neg = true;
    s = s.substr(1);
  }
  std::int64_t num = 1, den = 1;
  std::size_t pi = s.find("pi");
  if (pi == std::string::npos) {
    if (s != "0") throw validation_error("angles must be rational multiples of pi: " + text);
    return Angle(0, 1);
  }
  std::string coeff = s.substr(0, pi);
  std::string rest = s.substr(pi + 2);
  if (!coeff.empty()) num = std::stoll(coeff);
  if (!rest.empty()) {
    if (rest[0] != '/') throw validation_error("bad angle syntax: " + text);
    den = std::stoll(rest.substr(1));
  }
  return Angle(neg ? -num : num, den);
}

Graph gadget(const std::string& name) {
  if (name == "teleport") return gadget_teleport();
  if (name == "T-gadget") return gadget_t();
  if (name == "OR") return gadget_or();
  if (name == "NOT") return gadget_not();
  if (name == "ZERO") return gadget_zero();
  if (name == "AND") return gadget_and();
  if (name == "H-mbpc") return gadget_h_mbpc();
  if (name == "teleported-J(pi/4)") return gadget_teleported_j(false);
  if (name == "teleported-J(pi/4)-expanded") return gadget_teleported_j(true);
  if (name.rfind("J(", 0) == 0 && name.back() == ')')
    return gadget_j(parse_angle(name.substr(2, name.size() - 3)));
  if (name.rfind("GHZ(", 0) == 0 && name.back() == ')')
    return gadget_ghz(std::stoi(name.substr(4, name.size() - 5)));
  throw validation_error("unknown gadget: " + name);
}

Graph expand_gadget_labels(const Graph& g) {
  GadgetDictionary d;
  for (const Vertex& v : g.vertices()) {
    if (d.has(v.label)) continue;
    const std::string& n = v.label.name;
    if (n == "J") {
      d.add(v.label, gadget_j(v.label.params.at("alpha")));
    } else if (n == "teleport") {
      d.add(v.label, gadget_teleport());
    } else if (n == "T-gadget") {
      d.add(v.label, gadget_t());
    } else if (n == "H-mbpc") {
      d.add(v.label, gadget_h_mbpc());
    } else if (n.rfind("GHZ", 0) == 0 && n.size() > 3 && isdigit(static_cast<unsigned char>(n[3]))) {
      d.add(v.label, gadget_ghz(std::stoi(n.substr(3))));
    } else {
      d.add(v.label, single_vertex(v.label));
    }
  }
  return paste(g, d);
}

}  // namespace dpgc
