#include "dpgc.h"

#include <cstring>
#include <string>

#include "dpgc/canonical.hpp"
#include "dpgc/json_io.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
dpgc_status guarded(Fn&& fn) {
  try {
    fn();
    return DPGC_OK;
  } catch (const dpgc::validation_error& e) {
    g_last_error = e.what();
    return DPGC_ERR_INVALID;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DPGC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return DPGC_ERR_INTERNAL;
  }
}

}  // namespace

struct dpgc_graph {
  dpgc::GraphFile file;
};

struct dpgc_instrument {
  dpgc::AdaptiveInstrument phi;
};

struct dpgc_scenario {
  dpgc::BellScenario sc;
};

extern "C" {

const char* dpgc_version(void) { return "0.1.0"; }

const char* dpgc_last_error(void) { return g_last_error.c_str(); }

void dpgc_string_free(char* s) { std::free(s); }

dpgc_status dpgc_graph_parse(const char* json, dpgc_graph** out) {
  if (!json || !out) return DPGC_ERR_INVALID;
  return guarded([&] { *out = new dpgc_graph{dpgc::parse_graph_file(json)}; });
}

dpgc_status dpgc_graph_to_json(const dpgc_graph* g, char** out_json) {
  if (!g || !out_json) return DPGC_ERR_INVALID;
  return guarded(
      [&] { *out_json = dup_string(dpgc::serialize_graph_file(g->file.graph, g->file.model)); });
}

void dpgc_graph_free(dpgc_graph* g) { delete g; }

dpgc_status dpgc_graph_model(const dpgc_graph* g, char** out_model) {
  if (!g || !out_model) return DPGC_ERR_INVALID;
  return guarded([&] { *out_model = dup_string(dpgc::model_to_string(g->file.model)); });
}

dpgc_status dpgc_graph_digest(const dpgc_graph* g, char** out_digest) {
  if (!g || !out_digest) return DPGC_ERR_INVALID;
  return guarded([&] { *out_digest = dup_string(dpgc::canonical_digest(g->file.graph)); });
}

dpgc_status dpgc_graph_isomorphic(const dpgc_graph* a, const dpgc_graph* b, int* out) {
  if (!a || !b || !out) return DPGC_ERR_INVALID;
  return guarded([&] { *out = dpgc::is_isomorphic(a->file.graph, b->file.graph) ? 1 : 0; });
}

dpgc_status dpgc_graph_compose(const dpgc_graph* a, const dpgc_graph* b, int vertical,
                               dpgc_graph** out) {
  if (!a || !b || !out) return DPGC_ERR_INVALID;
  return guarded([&] {
    if (a->file.model != b->file.model)
      throw dpgc::validation_error("cannot compose graphs of different models");
    dpgc::Graph composed = vertical ? dpgc::compose_v(a->file.graph, b->file.graph)
                                    : dpgc::compose_h(a->file.graph, b->file.graph);
    *out = new dpgc_graph{{std::move(composed), a->file.model}};
  });
}

dpgc_status dpgc_graph_convert(const dpgc_graph* g, const char* converter, dpgc_graph** out) {
  if (!g || !converter || !out) return DPGC_ERR_INVALID;
  return guarded([&] {
    dpgc::GadgetDictionary dict = dpgc::converter(converter);
    dpgc::Graph converted = dpgc::convert(g->file.graph, dict);
    *out = new dpgc_graph{{std::move(converted), dpgc::converter_target(converter)}};
  });
}

dpgc_status dpgc_graph_expand_gadgets(const dpgc_graph* g, dpgc_graph** out) {
  if (!g || !out) return DPGC_ERR_INVALID;
  return guarded([&] {
    *out = new dpgc_graph{{dpgc::expand_gadget_labels(g->file.graph), g->file.model}};
  });
}

dpgc_status dpgc_gadget(const char* name, dpgc_graph** out) {
  if (!name || !out) return DPGC_ERR_INVALID;
  return guarded([&] {
    dpgc::Graph g = dpgc::gadget(name);
    // pick the owning model by name
    std::string n = name;
    dpgc::Model model = dpgc::Model::P;
    if (n == "teleport" || n.rfind("J(", 0) == 0) model = dpgc::Model::M;
    if (n == "T-gadget") model = dpgc::Model::Q;
    if (n == "NOT" || n == "ZERO") model = dpgc::Model::BAff;
    if (n == "AND") model = dpgc::Model::B;
    if (n.rfind("teleported-J", 0) == 0) model = dpgc::Model::PTilde;
    *out = new dpgc_graph{{std::move(g), model}};
  });
}

dpgc_status dpgc_graph_eval(const dpgc_graph* g, dpgc_instrument** out) {
  if (!g || !out) return DPGC_ERR_INVALID;
  return guarded([&] {
    *out = new dpgc_instrument{dpgc::evaluate(g->file.graph, g->file.model)};
  });
}

dpgc_status dpgc_instrument_to_json(const dpgc_instrument* phi, char** out_json) {
  if (!phi || !out_json) return DPGC_ERR_INVALID;
  return guarded([&] { *out_json = dup_string(dpgc::instrument_to_json(phi->phi)); });
}

void dpgc_instrument_free(dpgc_instrument* phi) { delete phi; }

dpgc_status dpgc_born(const dpgc_graph* g, const char* state_spec, const char* input_bits,
                      char** out_json) {
  if (!g || !state_spec || !out_json) return DPGC_ERR_INVALID;
  return guarded([&] {
    dpgc::AdaptiveInstrument phi = dpgc::evaluate(g->file.graph, g->file.model);
    dpgc::DensityMatrix rho = dpgc::parse_state_spec(state_spec);
    std::uint32_t a = dpgc::parse_bits(input_bits ? input_bits : "", phi.k);
    dpgc::Distribution d = dpgc::born_at(rho, phi, a);
    *out_json = dup_string(dpgc::distribution_to_json(d, phi.l));
  });
}

dpgc_status dpgc_standard_form(const dpgc_graph* g, char** out_prep, char** out_meas,
                               char** out_corr, char** out_report) {
  if (!g || !out_prep || !out_meas || !out_corr || !out_report) return DPGC_ERR_INVALID;
  return guarded([&] {
    dpgc::StandardFormFiles files = dpgc::standard_form_files(g->file.graph);
    *out_prep = dup_string(files.prep);
    *out_meas = dup_string(files.meas);
    *out_corr = dup_string(files.corr);
    *out_report = dup_string(files.report);
  });
}

dpgc_status dpgc_scenario_parse(const char* json, dpgc_scenario** out) {
  if (!json || !out) return DPGC_ERR_INVALID;
  return guarded([&] { *out = new dpgc_scenario{dpgc::parse_scenario(json)}; });
}

void dpgc_scenario_free(dpgc_scenario* sc) { delete sc; }

dpgc_status dpgc_ncf(const dpgc_scenario* sc, int exact, char** out_json) {
  if (!sc || !out_json) return DPGC_ERR_INVALID;
  return guarded([&] { *out_json = dup_string(dpgc::ncf_report_json(sc->sc, exact != 0)); });
}

dpgc_status dpgc_bound_check(const char* spec_json, char** out_json) {
  if (!spec_json || !out_json) return DPGC_ERR_INVALID;
  return guarded([&] { *out_json = dup_string(dpgc::bound_check_json(spec_json)); });
}

}  // extern "C"
