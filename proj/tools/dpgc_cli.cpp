// Command line front end. Talks to the library exclusively through the C API.
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dpgc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInvalid = 2;

int exit_code(dpgc_status st) {
  if (st == DPGC_OK) return kExitOk;
  return st == DPGC_ERR_INVALID ? kExitInvalid : kExitInternal;
}

int fail(dpgc_status st) {
  std::cerr << "error: " << dpgc_last_error() << "\n";
  return exit_code(st);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text << "\n";
}

struct GraphHandle {
  dpgc_graph* g = nullptr;
  ~GraphHandle() { dpgc_graph_free(g); }
};

struct StringHandle {
  char* s = nullptr;
  ~StringHandle() { dpgc_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

int load_graph(const std::string& path, bool expand_gadgets, GraphHandle& out) {
  dpgc_status st = dpgc_graph_parse(read_input(path).c_str(), &out.g);
  if (st != DPGC_OK) return fail(st);
  if (expand_gadgets) {
    dpgc_graph* expanded = nullptr;
    st = dpgc_graph_expand_gadgets(out.g, &expanded);
    if (st != DPGC_OK) return fail(st);
    dpgc_graph_free(out.g);
    out.g = expanded;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"double port graph compiler for adaptive quantum computation"};
  app.require_subcommand(1);

  std::string file, file_b, out_path, convert_to, state_spec, input_bits, out_dir;
  bool vertical_flag = false;
  bool horizontal = false;
  bool exact = false;
  bool as_json = false;
  bool expand_gadgets = false;

  auto* validate = app.add_subcommand("validate", "validate a graph file, print its digest");
  validate->add_option("FILE", file)->required();

  auto* compose = app.add_subcommand("compose", "compose two graph files");
  compose->set_help_flag("--help", "print help");  // frees --h for the direction flag
  compose->add_flag("--h", horizontal, "compose horizontally (left then right)");
  compose->add_flag("--v", vertical_flag, "compose vertically (top then bottom)");
  compose->add_option("A", file)->required();
  compose->add_option("B", file_b)->required();
  compose->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* convert = app.add_subcommand("convert", "convert a graph between models");
  convert->add_option("--to", convert_to, "target model: mbqc, qcm or mbpc")->required();
  convert->add_option("FILE", file)->required();
  convert->add_option("-o,--output", out_path);

  auto* eval = app.add_subcommand("eval", "evaluate a graph to its instrument");
  eval->add_option("FILE", file)->required();
  eval->add_flag("--json", as_json, "emit the instrument as JSON (default)");
  eval->add_flag("--expand-gadgets", expand_gadgets, "expand gadget-named labels first");

  auto* born = app.add_subcommand("born", "outcome distribution on a state");
  born->add_option("FILE", file)->required();
  born->add_option("--state", state_spec, "ghz:N | zero:N | maxmixed:N | file.json")->required();
  born->add_option("--input", input_bits, "classical input bits (may be empty)");
  born->add_flag("--expand-gadgets", expand_gadgets);

  auto* sform = app.add_subcommand("standard-form", "split an MBQC graph into layers");
  sform->add_option("FILE", file)->required();
  sform->add_option("-o,--output", out_dir, "output directory")->required();

  auto* ncf_cmd = app.add_subcommand("ncf", "noncontextual fraction of a scenario");
  ncf_cmd->add_option("SCENARIO", file)->required();
  ncf_cmd->add_flag("--exact", exact, "exact rational LP");

  auto* bound = app.add_subcommand("bound-check", "computational-power bound report");
  bound->add_option("SPEC", file)->required();

  auto* gadget_cmd = app.add_subcommand("gadget", "write a named gadget graph");
  gadget_cmd->add_option("NAME", file)->required();
  gadget_cmd->add_option("-o,--output", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      GraphHandle g;
      if (int rc = load_graph(file, false, g)) return rc;
      StringHandle digest;
      dpgc_status st = dpgc_graph_digest(g.g, &digest.s);
      if (st != DPGC_OK) return fail(st);
      std::cout << digest.str() << "\n";
      return kExitOk;
    }

    if (compose->parsed()) {
      if (horizontal == vertical_flag) {
        std::cerr << "error: pass exactly one of --h or --v\n";
        return kExitInvalid;
      }
      GraphHandle a, b;
      if (int rc = load_graph(file, false, a)) return rc;
      if (int rc = load_graph(file_b, false, b)) return rc;
      GraphHandle out;
      dpgc_status st = dpgc_graph_compose(a.g, b.g, vertical_flag ? 1 : 0, &out.g);
      if (st != DPGC_OK) return fail(st);
      StringHandle js;
      st = dpgc_graph_to_json(out.g, &js.s);
      if (st != DPGC_OK) return fail(st);
      write_output(out_path, js.str());
      return kExitOk;
    }

    if (convert->parsed()) {
      GraphHandle g;
      if (int rc = load_graph(file, false, g)) return rc;
      StringHandle model_s;
      dpgc_status st = dpgc_graph_model(g.g, &model_s.s);
      if (st != DPGC_OK) return fail(st);
      std::string model = model_s.str();
      std::string converter;
      if (convert_to == "mbqc") converter = "qc-to-mbqc";
      else if (convert_to == "mbpc") converter = "qc-to-mbpc";
      else if (convert_to == "qcm") converter = (model == "P~") ? "mbpc-to-qcm" : "qc-to-qcm";
      else {
        std::cerr << "error: unknown conversion target " << convert_to << "\n";
        return kExitInvalid;
      }
      GraphHandle out;
      st = dpgc_graph_convert(g.g, converter.c_str(), &out.g);
      if (st != DPGC_OK) return fail(st);
      StringHandle js;
      st = dpgc_graph_to_json(out.g, &js.s);
      if (st != DPGC_OK) return fail(st);
      write_output(out_path, js.str());
      return kExitOk;
    }

    if (eval->parsed()) {
      GraphHandle g;
      if (int rc = load_graph(file, expand_gadgets, g)) return rc;
      dpgc_instrument* phi = nullptr;
      dpgc_status st = dpgc_graph_eval(g.g, &phi);
      if (st != DPGC_OK) return fail(st);
      StringHandle js;
      st = dpgc_instrument_to_json(phi, &js.s);
      dpgc_instrument_free(phi);
      if (st != DPGC_OK) return fail(st);
      std::cout << js.str() << "\n";
      return kExitOk;
    }

    if (born->parsed()) {
      GraphHandle g;
      if (int rc = load_graph(file, expand_gadgets, g)) return rc;
      std::string state =
          (state_spec.find(':') == std::string::npos) ? read_input(state_spec) : state_spec;
      StringHandle js;
      dpgc_status st = dpgc_born(g.g, state.c_str(), input_bits.c_str(), &js.s);
      if (st != DPGC_OK) return fail(st);
      std::cout << js.str() << "\n";
      return kExitOk;
    }

    if (sform->parsed()) {
      GraphHandle g;
      if (int rc = load_graph(file, false, g)) return rc;
      StringHandle prep, meas, corr, report;
      dpgc_status st = dpgc_standard_form(g.g, &prep.s, &meas.s, &corr.s, &report.s);
      if (st != DPGC_OK) return fail(st);
      write_output(out_dir + "/prep.json", prep.str());
      write_output(out_dir + "/meas.json", meas.str());
      write_output(out_dir + "/corr.json", corr.str());
      write_output(out_dir + "/report.json", report.str());
      std::cout << report.str() << "\n";
      return kExitOk;
    }

    if (ncf_cmd->parsed()) {
      dpgc_scenario* sc = nullptr;
      dpgc_status st = dpgc_scenario_parse(read_input(file).c_str(), &sc);
      if (st != DPGC_OK) return fail(st);
      StringHandle js;
      st = dpgc_ncf(sc, exact ? 1 : 0, &js.s);
      dpgc_scenario_free(sc);
      if (st != DPGC_OK) return fail(st);
      std::cout << js.str() << "\n";
      return kExitOk;
    }

    if (bound->parsed()) {
      StringHandle js;
      dpgc_status st = dpgc_bound_check(read_input(file).c_str(), &js.s);
      if (st != DPGC_OK) return fail(st);
      std::cout << js.str() << "\n";
      return kExitOk;
    }

    if (gadget_cmd->parsed()) {
      GraphHandle g;
      dpgc_status st = dpgc_gadget(file.c_str(), &g.g);
      if (st != DPGC_OK) return fail(st);
      StringHandle js;
      st = dpgc_graph_to_json(g.g, &js.s);
      if (st != DPGC_OK) return fail(st);
      write_output(out_path, js.str());
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInternal;
}
