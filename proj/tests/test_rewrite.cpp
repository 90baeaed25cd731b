#include <random>

#include "doctest.h"
#include "dpgc/builder.hpp"
#include "dpgc/canonical.hpp"
#include "dpgc/gadgets.hpp"
#include "dpgc/rewrite.hpp"

using namespace dpgc;

namespace {

std::mt19937_64 rng(5150);

// random MBQC[pi/4] pattern: preps, entanglers, corrections and measurements
// over a few wires with classical boundary plumbing
Graph random_m_graph(int max_wires, int depth) {
  std::vector<Vertex> verts;
  std::vector<Wire> h, v;
  std::vector<Endpoint> open;
  int id = 0, k = 0, l = 0;
  int wires = 1 + int(rng() % std::uint64_t(max_wires));
  for (int i = 0; i < wires; ++i) {
    std::string nid = "n" + std::to_string(id++);
    verts.push_back({nid, make_label("NX")});
    open.push_back(Endpoint::at_vertex(nid, 1));
  }
  const Angle alphas[3] = {Angle(0, 1), Angle(1, 4), Angle(-1, 4)};
  for (int d = 0; d < depth; ++d) {
    int roll = int(rng() % 4);
    int w = int(rng() % open.size());
    std::string vid = "g" + std::to_string(id++);
    if (roll == 0 && open.size() >= 2) {
      int w2 = (w + 1) % int(open.size());
      verts.push_back({vid, make_label("E")});
      h.push_back({open[w], Endpoint::at_vertex(vid, 1)});
      h.push_back({open[w2], Endpoint::at_vertex(vid, 2)});
      open[w] = Endpoint::at_vertex(vid, 1);
      open[w2] = Endpoint::at_vertex(vid, 2);
    } else if (roll == 1) {
      verts.push_back({vid, make_label(rng() % 2 ? "CX" : "CZ")});
      ++k;
      v.push_back({Endpoint::at_boundary(k), Endpoint::at_vertex(vid, 1)});
      h.push_back({open[w], Endpoint::at_vertex(vid, 1)});
      open[w] = Endpoint::at_vertex(vid, 1);
    } else if (roll == 2 && open.size() > 1) {
      verts.push_back({vid, make_m_label(alphas[rng() % 3])});
      ++k;
      ++l;
      v.push_back({Endpoint::at_boundary(k), Endpoint::at_vertex(vid, 1)});
      v.push_back({Endpoint::at_vertex(vid, 1), Endpoint::at_boundary(l)});
      h.push_back({open[w], Endpoint::at_vertex(vid, 1)});
      open.erase(open.begin() + w);
    }
    // roll == 3: skip
  }
  int n = int(open.size());
  for (int i = 0; i < n; ++i) h.push_back({open[i], Endpoint::at_boundary(i + 1)});
  return Graph::build(0, n, k, l, std::move(verts), std::move(h), std::move(v));
}

}  // namespace

TEST_CASE("the six standard rules are semantics-preserving at all three angles") {
  // make_rule itself verifies lhs == rhs within 1e-9 and throws otherwise
  for (Angle a : {Angle(0, 1), Angle(1, 4), Angle(-1, 4)}) {
    auto rules = standard_rules(a);
    CHECK(rules.size() == 6);
    for (const auto& r : rules) {
      CHECK(instrument_equal(evaluate(r.lhs, r.check_model), evaluate(r.rhs, r.check_model), 1e-9));
    }
  }
}

TEST_CASE("the MBPC correction-vs-measurement rules hold") {
  for (const char* corr : {"CX", "CS"}) {
    RewriteRule r = rule_corr_vs_xy_measurement(corr);
    CHECK(instrument_equal(evaluate(r.lhs, Model::PTilde), evaluate(r.rhs, Model::PTilde), 1e-9));
  }
}

TEST_CASE("a broken rule is rejected at registration") {
  Graph lhs = single_vertex(make_label("H"));
  Graph rhs = single_vertex(make_label("T"));
  CHECK_THROWS_WITH_AS(make_rule("bogus", lhs, rhs, Model::C),
                       doctest::Contains("not semantics-preserving"), validation_error);
}

TEST_CASE("apply_rewrite replaces one occurrence") {
  // X-correction before the entangler on port 1
  GraphBuilder gb(2, 2, 1, 0);
  std::string c = gb.add("corr", make_label("CX"), {gb.bh(1)}, {gb.bv(1)});
  std::string e = gb.add("ent", make_label("E"), {gb.ho(c), gb.bh(2)});
  gb.out_h(1, gb.ho(e, 1));
  gb.out_h(2, gb.ho(e, 2));
  Graph g = std::move(gb).done();

  RewriteRule rule = rule_corr_vs_entangling("CX", 1);
  auto occs = find_occurrences(g, rule);
  REQUIRE(occs.size() == 1);
  Graph rewritten = apply_rewrite(g, rule, occs[0]);
  CHECK(rewritten.vertices().size() == 4);  // E, copy, CX, CZ
  CHECK(instrument_equal(evaluate(rewritten, Model::M), evaluate(g, Model::M), 1e-9));
  CHECK(is_isomorphic(rewritten, rule.rhs));

  // a bad occurrence is rejected
  Occurrence bogus;
  bogus.vertex_map["c"] = "ent";
  bogus.vertex_map["e"] = "corr";
  CHECK_THROWS_AS(apply_rewrite(g, rule, bogus), validation_error);
}

TEST_CASE("find_occurrences sees every redex") {
  // two corrections, both before the same entangler chain
  GraphBuilder gb(2, 2, 2, 0);
  std::string c1 = gb.add("c1", make_label("CX"), {gb.bh(1)}, {gb.bv(1)});
  std::string c2 = gb.add("c2", make_label("CX"), {gb.bh(2)}, {gb.bv(2)});
  std::string e = gb.add("e", make_label("E"), {gb.ho(c1), gb.ho(c2)});
  gb.out_h(1, gb.ho(e, 1));
  gb.out_h(2, gb.ho(e, 2));
  Graph g = std::move(gb).done();
  CHECK(find_occurrences(g, rule_corr_vs_entangling("CX", 1)).size() == 1);
  CHECK(find_occurrences(g, rule_corr_vs_entangling("CX", 2)).size() == 1);
}

TEST_CASE("standard form of the T pattern") {
  Graph t = compose_h(gadget_j(Angle(1, 4)), gadget_j(Angle(0, 1)));
  StandardForm sf = standard_form(t);

  // layer label sets
  for (const Vertex& v : sf.prep.vertices())
    CHECK((v.label.name == "NX" || v.label.name == "E"));
  for (const Vertex& v : sf.meas.vertices()) {
    CHECK(v.label.name != "CX");
    CHECK(v.label.name != "CZ");
    CHECK(v.label.name != "E");
    CHECK(v.label.name != "NX");
  }
  for (const Vertex& v : sf.corr.vertices())
    CHECK((v.label.name == "CX" || v.label.name == "CZ"));

  // semantics preserved through the layered graph and through the reglue
  AdaptiveInstrument original = evaluate(t, Model::M);
  CHECK(instrument_equal(evaluate(sf.layered, Model::M), original, 1e-9));
  CHECK(instrument_equal(evaluate(reglue_standard_form(sf), Model::M), original, 1e-9));
  CHECK(sf.crossings > 0);  // outcomes drive the trailing corrections
}

TEST_CASE("standard form on random MBQC graphs") {
  int done = 0;
  for (int trial = 0; trial < 60 && done < 30; ++trial) {
    Graph g = random_m_graph(3, 6);
    StandardForm sf = standard_form(g);
    for (const Vertex& v : sf.prep.vertices())
      CHECK((v.label.name == "NX" || v.label.name == "E"));
    for (const Vertex& v : sf.corr.vertices())
      CHECK((v.label.name == "CX" || v.label.name == "CZ"));
    for (const Vertex& v : sf.meas.vertices())
      CHECK((v.label.name == "M" || v.label.name == "one" || v.label.name == "zero" ||
             v.label.name == "xor" || v.label.name == "c" || v.label.name == "not" ||
             v.label.name == "d"));
    AdaptiveInstrument original = evaluate(g, Model::M);
    CHECK(instrument_equal(evaluate(sf.layered, Model::M), original, 1e-9));
    CHECK(instrument_equal(evaluate(reglue_standard_form(sf), Model::M), original, 1e-9));
    ++done;
  }
  CHECK(done == 30);
}

TEST_CASE("standard form rejects foreign labels") {
  CHECK_THROWS_AS(standard_form(single_vertex(make_label("NT"))), validation_error);
}
