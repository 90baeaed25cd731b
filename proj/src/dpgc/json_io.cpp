#include "json_io.hpp"

#include <json.hpp>

#include "canonical.hpp"

namespace dpgc {

using nlohmann::json;

namespace {

json require(const json& j, const char* key) {
  if (!j.contains(key)) throw validation_error(std::string("missing field: ") + key);
  return j.at(key);
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw validation_error("malformed JSON");
  return j;
}

Endpoint endpoint_from_json(const json& j) {
  if (j.contains("boundary")) return Endpoint::at_boundary(j.at("boundary").get<int>());
  if (j.contains("vertex"))
    return Endpoint::at_vertex(j.at("vertex").get<std::string>(), require(j, "port").get<int>());
  throw validation_error("endpoint needs a boundary index or a vertex/port pair");
}

json endpoint_to_json(const Endpoint& e) {
  if (e.boundary) return json{{"boundary", e.index}};
  return json{{"vertex", e.vertex}, {"port", e.index}};
}

std::vector<Wire> wires_from_json(const json& j) {
  std::vector<Wire> out;
  for (const json& w : j)
    out.push_back({endpoint_from_json(require(w, "from")), endpoint_from_json(require(w, "to"))});
  return out;
}

json wires_to_json(const std::vector<Wire>& wires) {
  json out = json::array();
  for (const Wire& w : wires)
    out.push_back(json{{"from", endpoint_to_json(w.from)}, {"to", endpoint_to_json(w.to)}});
  return out;
}

Label label_from_json(const json& v) {
  Label lb = make_label(require(v, "label").get<std::string>());
  if (v.contains("params")) {
    for (auto it = v.at("params").begin(); it != v.at("params").end(); ++it) {
      const json& a = it.value();
      lb.params[it.key()] =
          Angle(require(a, "pi_num").get<std::int64_t>(), require(a, "pi_den").get<std::int64_t>());
    }
  }
  if (lb.name == "M" && !lb.params.count("alpha"))
    throw validation_error("measurement label M needs an alpha parameter");
  return lb;
}

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw validation_error("matrix must be a nonempty array");
  Eigen::Index rows = Eigen::Index(j.size());
  Eigen::Index cols = Eigen::Index(j.at(0).size());
  Mat m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j.at(r);
    if (Eigen::Index(row.size()) != cols) throw validation_error("ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const json& e = row.at(c);
      if (!e.is_array() || e.size() != 2)
        throw validation_error("matrix entries are [re, im] pairs");
      m(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return m;
}

AffineMap affine_from_json(const json& j) {
  AffineMap h;
  h.in_bits = require(j, "in").get<int>();
  h.out_bits = require(j, "out").get<int>();
  for (const json& row : require(j, "rows"))
    h.rows.push_back(parse_bits(row.get<std::string>(), h.in_bits));
  if (int(h.rows.size()) != h.out_bits)
    throw validation_error("affine map needs one row per output bit");
  h.constant = parse_bits(require(j, "const").get<std::string>(), h.out_bits);
  return h;
}

}  // namespace

std::uint32_t parse_bits(const std::string& text, int expected_len) {
  if (int(text.size()) != expected_len)
    throw validation_error("bit string '" + text + "' should have length " +
                           std::to_string(expected_len));
  std::uint32_t v = 0;
  for (char c : text) {
    if (c != '0' && c != '1') throw validation_error("bit strings use characters 0 and 1");
    v = (v << 1) | std::uint32_t(c - '0');
  }
  return v;
}

std::string bits_to_string(std::uint32_t value, int len) {
  std::string out(std::size_t(len), '0');
  for (int i = 0; i < len; ++i)
    if ((value >> (len - 1 - i)) & 1) out[std::size_t(i)] = '1';
  return out;
}

GraphFile parse_graph_file(const std::string& text) {
  json j = parse_text(text);
  GraphFile out;
  out.model = model_from_string(require(j, "model").get<std::string>());

  std::vector<Vertex> verts;
  for (const json& v : require(j, "vertices"))
    verts.push_back({require(v, "id").get<std::string>(), label_from_json(v)});

  out.graph = Graph::build(require(j, "m").get<int>(), require(j, "n").get<int>(),
                           require(j, "k").get<int>(), require(j, "l").get<int>(),
                           std::move(verts), wires_from_json(require(j, "h_wires")),
                           wires_from_json(require(j, "v_wires")));

  // labels must belong to the declared model, or be expandable gadget names
  LabelSemantics sem(out.model);
  for (const Vertex& v : out.graph.vertices()) {
    const std::string& n = v.label.name;
    bool gadget_name = n == "J" || n == "teleport" || n == "T-gadget" || n == "H-mbpc" ||
                       (n.rfind("GHZ", 0) == 0 && n.size() > 3);
    if (!gadget_name && !sem.resolvable(v.label))
      throw validation_error("label " + v.label.key() + " is not in model " +
                             model_to_string(out.model));
  }
  return out;
}

std::string serialize_graph_file(const Graph& g, Model model) {
  json j;
  j["model"] = model_to_string(model);
  j["m"] = g.m();
  j["n"] = g.n();
  j["k"] = g.k();
  j["l"] = g.l();
  json verts = json::array();
  for (const Vertex& v : g.vertices()) {
    json jv;
    jv["id"] = v.id;
    jv["label"] = v.label.name;
    if (!v.label.params.empty()) {
      json params;
      for (const auto& [name, a] : v.label.params)
        params[name] = json{{"pi_num", a.num}, {"pi_den", a.den}};
      jv["params"] = std::move(params);
    }
    verts.push_back(std::move(jv));
  }
  j["vertices"] = std::move(verts);
  j["h_wires"] = wires_to_json(g.h_wires());
  j["v_wires"] = wires_to_json(g.v_wires());
  return j.dump(2);
}

std::string instrument_to_json(const AdaptiveInstrument& phi) {
  json j;
  j["k"] = phi.k;
  j["l"] = phi.l;
  j["m"] = phi.m;
  j["n"] = phi.n;
  json entries = json::array();
  for (const auto& [key, cp] : phi.table) {
    json e;
    e["a"] = bits_to_string(key.first, phi.k);
    e["b"] = bits_to_string(key.second, phi.l);
    e["superoperator"] = matrix_to_json(cp.sop);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j.dump(2);
}

std::string distribution_to_json(const Distribution& d, int bits) {
  json out;
  for (std::size_t b = 0; b < d.size(); ++b)
    out[bits_to_string(std::uint32_t(b), bits)] = d[b];
  return json{{"distribution", out}}.dump(2);
}

BellScenario parse_scenario(const std::string& text) {
  json j = parse_text(text);
  BellScenario sc;
  sc.m = require(j, "m").get<int>();
  if (sc.m < 1 || sc.m > 8) throw validation_error("scenario needs 1 <= m <= 8");
  std::uint32_t ni = 1u << sc.m;
  sc.rows.assign(ni, std::vector<double>(ni, 0.0));
  json rows = require(j, "rows");
  for (auto it = rows.begin(); it != rows.end(); ++it) {
    std::uint32_t i = parse_bits(it.key(), sc.m);
    for (auto st = it.value().begin(); st != it.value().end(); ++st)
      sc.rows[i][parse_bits(st.key(), sc.m)] = st.value().get<double>();
  }
  return sc;
}

std::string serialize_scenario(const BellScenario& sc) {
  json rows;
  for (std::uint32_t i = 0; i < (1u << sc.m); ++i) {
    json row;
    for (std::uint32_t s = 0; s < (1u << sc.m); ++s)
      if (sc.rows[i][s] != 0.0) row[bits_to_string(s, sc.m)] = sc.rows[i][s];
    rows[bits_to_string(i, sc.m)] = std::move(row);
  }
  return json{{"m", sc.m}, {"rows", rows}}.dump(2);
}

std::string ncf_report_json(const BellScenario& sc, bool exact) {
  json j;
  if (exact) {
    Rational v = ncf_exact(sc);
    j["ncf"] = rational_to_string(v);
    j["cf"] = rational_to_string(Rational(1) - v);
    j["strong"] = (v == 0);
  } else {
    double v = ncf(sc);
    j["ncf"] = v;
    j["cf"] = 1.0 - v;
    j["strong"] = is_strongly_contextual(sc);
  }
  return j.dump(2);
}

DensityMatrix parse_state_spec(const std::string& spec) {
  auto with_count = [&](const std::string& prefix) -> int {
    return std::stoi(spec.substr(prefix.size()));
  };
  if (spec.rfind("ghz:", 0) == 0) return ghz_density(with_count("ghz:"));
  if (spec.rfind("zero:", 0) == 0) return zero_density(with_count("zero:"));
  if (spec.rfind("maxmixed:", 0) == 0) return max_mixed_density(with_count("maxmixed:"));
  json j = parse_text(spec);
  int qubits = require(j, "qubits").get<int>();
  return make_density(qubits, matrix_from_json(require(j, "matrix")));
}

std::string bound_check_json(const std::string& spec_text) {
  json j = parse_text(spec_text);

  DensityMatrix rho = parse_state_spec(require(j, "state").is_string()
                                           ? j.at("state").get<std::string>()
                                           : j.at("state").dump());

  json bj = require(j, "bell");
  BellInstrumentSpec spec;
  spec.m = require(bj, "m").get<int>();
  for (const json& b : require(bj, "bases")) spec.bases.push_back(b.get<std::string>());
  for (const json& a : require(bj, "adaptivity")) {
    AdaptiveTerm at;
    at.constant = a.value("const", 0);
    if (a.contains("outcomes"))
      for (const json& t : a.at("outcomes")) at.outcomes.push_back(t.get<int>());
    spec.adaptivity.push_back(at);
  }

  AffineMap h = affine_from_json(require(j, "h"));
  AffineMap tau = j.contains("tau") ? affine_from_json(j.at("tau")) : AffineMap::identity(spec.m);

  json fj = require(j, "f");
  TruthTable f;
  f.in_bits = require(fj, "in").get<int>();
  f.out_bits = require(fj, "out").get<int>();
  for (const json& v : require(fj, "table"))
    f.values.push_back(parse_bits(v.get<std::string>(), f.out_bits));
  if (int(f.values.size()) != (1 << f.in_bits))
    throw validation_error("truth table needs 2^in entries");

  bool exact = j.value("exact", false);
  BoundReport rep = bound_check(rho, spec, h, f, tau, exact);

  json out;
  out["lhs"] = rep.lhs;
  out["rhs"] = rep.rhs;
  out["ncf"] = rep.ncf_value;
  out["nu"] = rational_to_string(rep.nu_value);
  out["nu_float"] = double(rep.nu_value);
  out["holds"] = rep.holds;
  out["compatible"] = rep.compatible;
  out["exact"] = rep.exact;
  return out.dump(2);
}

StandardFormFiles standard_form_files(const Graph& g) {
  StandardForm sf = standard_form(g);
  StandardFormFiles out;
  out.prep = serialize_graph_file(sf.prep, Model::M);
  out.meas = serialize_graph_file(sf.meas, Model::M);
  out.corr = serialize_graph_file(sf.corr, Model::M);

  AdaptiveInstrument original = evaluate(g, Model::M);
  AdaptiveInstrument reglued = evaluate(reglue_standard_form(sf), Model::M);
  double diff = instrument_distance(original, reglued);

  json rep;
  rep["semantic_max_abs_diff"] = diff;
  rep["equal"] = diff <= 1e-9;
  rep["crossings"] = sf.crossings;
  rep["vin_of_meas"] = sf.vin_of_meas;
  rep["vin_of_corr"] = sf.vin_of_corr;
  rep["layers"] = json{{"prep_vertices", sf.prep.vertices().size()},
                       {"meas_vertices", sf.meas.vertices().size()},
                       {"corr_vertices", sf.corr.vertices().size()}};
  out.report = rep.dump(2);
  return out;
}

}  // namespace dpgc
