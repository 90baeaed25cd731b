#include <string>

#include "doctest.h"
#include "dpgc.h"

namespace {

struct Str {
  char* s = nullptr;
  ~Str() { dpgc_string_free(s); }
};

const char* kHGraph = R"({
  "model": "C", "m": 1, "n": 1, "k": 0, "l": 0,
  "vertices": [{"id": "h", "label": "H"}],
  "h_wires": [
    {"from": {"boundary": 1}, "to": {"vertex": "h", "port": 1}},
    {"from": {"vertex": "h", "port": 1}, "to": {"boundary": 1}}
  ],
  "v_wires": []
})";

}  // namespace

TEST_CASE("version and error plumbing") {
  CHECK(std::string(dpgc_version()) == "0.1.0");
  dpgc_graph* g = nullptr;
  CHECK(dpgc_graph_parse("{", &g) == DPGC_ERR_INVALID);
  CHECK(std::string(dpgc_last_error()).find("JSON") != std::string::npos);
  CHECK(dpgc_graph_parse(nullptr, &g) == DPGC_ERR_INVALID);
}

TEST_CASE("parse, digest, compose, eval") {
  dpgc_graph* g = nullptr;
  REQUIRE(dpgc_graph_parse(kHGraph, &g) == DPGC_OK);

  Str model;
  REQUIRE(dpgc_graph_model(g, &model.s) == DPGC_OK);
  CHECK(std::string(model.s) == "C");

  Str digest;
  REQUIRE(dpgc_graph_digest(g, &digest.s) == DPGC_OK);
  CHECK(std::string(digest.s).size() > 4);

  dpgc_graph* hh = nullptr;
  REQUIRE(dpgc_graph_compose(g, g, 0, &hh) == DPGC_OK);

  // H o H is the identity channel
  dpgc_instrument* phi = nullptr;
  REQUIRE(dpgc_graph_eval(hh, &phi) == DPGC_OK);
  Str js;
  REQUIRE(dpgc_instrument_to_json(phi, &js.s) == DPGC_OK);
  CHECK(std::string(js.s).find("superoperator") != std::string::npos);
  dpgc_instrument_free(phi);

  int iso = 0;
  REQUIRE(dpgc_graph_isomorphic(g, g, &iso) == DPGC_OK);
  CHECK(iso == 1);
  REQUIRE(dpgc_graph_isomorphic(g, hh, &iso) == DPGC_OK);
  CHECK(iso == 0);

  dpgc_graph_free(hh);
  dpgc_graph_free(g);
}

TEST_CASE("convert and born through the C surface") {
  dpgc_graph* g = nullptr;
  REQUIRE(dpgc_graph_parse(kHGraph, &g) == DPGC_OK);
  dpgc_graph* m = nullptr;
  REQUIRE(dpgc_graph_convert(g, "qc-to-mbqc", &m) == DPGC_OK);
  Str model;
  REQUIRE(dpgc_graph_model(m, &model.s) == DPGC_OK);
  CHECK(std::string(model.s) == "M[pi/4]");

  Str born;
  REQUIRE(dpgc_born(g, "zero:1", "", &born.s) == DPGC_ERR_INVALID);  // n != 0
  dpgc_graph_free(m);
  dpgc_graph_free(g);

  dpgc_graph* tele = nullptr;
  REQUIRE(dpgc_gadget("teleport", &tele) == DPGC_OK);
  dpgc_instrument* phi = nullptr;
  REQUIRE(dpgc_graph_eval(tele, &phi) == DPGC_OK);
  dpgc_instrument_free(phi);
  dpgc_graph_free(tele);
  CHECK(dpgc_gadget("nope", &tele) == DPGC_ERR_INVALID);
}

TEST_CASE("scenario and bound check through the C surface") {
  const char* uniform = R"({"m":1,"rows":{"0":{"0":0.5,"1":0.5},"1":{"0":0.5,"1":0.5}}})";
  dpgc_scenario* sc = nullptr;
  REQUIRE(dpgc_scenario_parse(uniform, &sc) == DPGC_OK);
  Str rep;
  REQUIRE(dpgc_ncf(sc, 1, &rep.s) == DPGC_OK);
  CHECK(std::string(rep.s).find("\"ncf\": \"1\"") != std::string::npos);
  dpgc_scenario_free(sc);

  const char* bound = R"({
    "state": "maxmixed:2",
    "bell": {"m": 2, "bases": ["xy", "xy"], "adaptivity": [{}, {}]},
    "h": {"in": 2, "out": 1, "rows": ["11"], "const": "0"},
    "f": {"in": 2, "out": 1, "table": ["0", "1", "1", "1"]}
  })";
  Str out;
  REQUIRE(dpgc_bound_check(bound, &out.s) == DPGC_OK);
  CHECK(std::string(out.s).find("\"holds\": true") != std::string::npos);
}
