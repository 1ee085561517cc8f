// Command line front end; talks to the core exclusively through the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eorient.h"

namespace {

struct GraphHandle {
  eo_graph* g = nullptr;
  ~GraphHandle() { eo_graph_free(g); }
};

struct StringOut {
  char* s = nullptr;
  ~StringOut() { eo_string_free(s); }
};

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out.push_back('\\');
      out.push_back(c);
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out.push_back(c);
    }
  }
  return out;
}

[[noreturn]] void die(eo_status st) {
  std::string kind = eo_last_error_kind();
  if (kind.empty()) kind = "Error";
  std::cerr << "{\"error\":\"" << json_escape(eo_last_error()) << "\",\"type\":\"" << kind
            << "\",\"status\":" << static_cast<int>(st) << "}\n";
  std::exit(1);
}

void check(eo_status st) {
  if (st != EO_OK) die(st);
}

GraphHandle load(const std::string& path) {
  GraphHandle h;
  check(eo_graph_load(path.c_str(), &h.g));
  return h;
}

void emit(const std::string& out_path, const char* payload, bool newline = true) {
  if (out_path.empty()) {
    std::cout << payload;
    if (newline) std::cout << '\n';
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "{\"error\":\"cannot write " << json_escape(out_path)
                << "\",\"type\":\"IoError\",\"status\":1}\n";
      std::exit(1);
    }
    f << payload;
    if (newline) f << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Eulerian orientation counting, root measures and gauge checks"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph from a named family");
  std::string g_family, g_params, g_base, g_base_params, g_out;
  std::uint64_t g_seed = 0;
  bool g_has_seed = false;
  gen->add_option("--family", g_family, "family name")->required();
  gen->add_option("--params", g_params, "comma separated parameters");
  gen->add_option("--seed", g_seed, "seed for random_even")->each([&](std::string) {
    g_has_seed = true;
  });
  gen->add_option("--base", g_base, "base family for iterated_subdivision");
  gen->add_option("--base-params", g_base_params, "base family parameters");
  gen->add_option("-o,--output", g_out, "output file (default stdout)");

  // count
  auto* count = app.add_subcommand("count", "count Eulerian orientations");
  std::string c_file, c_method = "dp", c_out;
  int c_cap = 0, c_threads = 1;
  count->add_option("graph", c_file, "graph file")->required();
  count->add_option("--method", c_method, "brute|dp|cycles")
      ->check(CLI::IsMember({"brute", "dp", "cycles"}));
  count->add_option("--cap", c_cap, "enumeration cap override");
  count->add_option("--threads", c_threads, "partition width for brute enumeration");
  count->add_option("-o,--output", c_out, "output file");

  // poly
  auto* poly = app.add_subcommand("poly", "subgraph counting polynomial P_G");
  std::string p_file, p_out;
  poly->add_option("graph", p_file, "graph file")->required();
  poly->add_option("-o,--output", p_out, "output file");

  // roots
  auto* roots = app.add_subcommand("roots", "numeric roots of P_G as CSV");
  std::string r_file, r_out;
  double r_tol = 1e-12;
  roots->add_option("graph", r_file, "graph file")->required();
  roots->add_option("--tol", r_tol, "residual tolerance");
  roots->add_option("-o,--output", r_out, "output file");

  // moments
  auto* mom = app.add_subcommand("moments", "exact moments of the root measure");
  std::string m_file, m_out;
  int m_k = 12;
  mom->add_option("graph", m_file, "graph file")->required();
  mom->add_option("-k,--kmax", m_k, "highest moment");
  mom->add_option("-o,--output", m_out, "output file");

  // entropy
  auto* ent = app.add_subcommand("entropy", "normalized log-count report");
  std::string e_file, e_out;
  ent->add_option("graph", e_file, "graph file")->required();
  ent->add_option("-o,--output", e_out, "output file");

  // pcurve
  auto* pcv = app.add_subcommand("pcurve", "(1/v) ln P_G(u) table");
  std::string pc_file, pc_us = "1/2,3/4,1,4/3,2", pc_out;
  pcv->add_option("graph", pc_file, "graph file")->required();
  pcv->add_option("--u", pc_us, "comma separated positive rationals");
  pcv->add_option("-o,--output", pc_out, "output file");

  // sequence
  auto* seq = app.add_subcommand("sequence", "entropy report along a graph family");
  std::string s_family, s_sizes, s_curve, s_out;
  seq->add_option("--family", s_family, "family name or JSON template")->required();
  seq->add_option("--sizes", s_sizes, "comma separated increasing sizes")->required();
  seq->add_option("--curve", s_curve, "u grid lo:hi:steps");
  seq->add_option("-o,--output", s_out, "output file");

  // local
  auto* loc = app.add_subcommand("local", "neighborhood profile");
  std::string l_file, l_out;
  int l_r = 1;
  loc->add_option("graph", l_file, "graph file")->required();
  loc->add_option("-r,--radius", l_r, "ball radius");
  loc->add_option("-o,--output", l_out, "output file");

  // tv
  auto* tv = app.add_subcommand("tv", "total variation distance of two profiles");
  std::string t_a, t_b, t_out;
  int t_r = 1;
  tv->add_option("graphA", t_a, "first graph file")->required();
  tv->add_option("graphB", t_b, "second graph file")->required();
  tv->add_option("-r,--radius", t_r, "ball radius");
  tv->add_option("-o,--output", t_out, "output file");

  // nfg
  auto* nfg = app.add_subcommand("nfg", "normal factor graph checks");
  auto* nfg_verify = nfg->add_subcommand("verify", "gauge invariance certificate");
  std::string n_file, n_out;
  nfg_verify->add_option("graph", n_file, "graph file")->required();
  nfg_verify->add_option("-o,--output", n_out, "output file");
  nfg->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  if (*gen) {
    std::string spec = "{\"family\":\"" + g_family + "\"";
    if (!g_params.empty()) spec += ",\"params\":[" + g_params + "]";
    if (g_has_seed) spec += ",\"seed\":" + std::to_string(g_seed);
    if (!g_base.empty()) {
      spec += ",\"base\":{\"family\":\"" + g_base + "\"";
      if (!g_base_params.empty()) spec += ",\"params\":[" + g_base_params + "]";
      spec += "}";
    }
    spec += "}";
    GraphHandle h;
    check(eo_graph_generate(spec.c_str(), &h.g));
    StringOut text;
    check(eo_graph_to_text(h.g, &text.s));
    emit(g_out, text.s, false);
  } else if (*count) {
    GraphHandle h = load(c_file);
    StringOut json;
    double ms = 0;
    check(eo_count(h.g, c_method.c_str(), c_cap, c_threads, &json.s, &ms));
    emit(c_out, json.s);
    std::fprintf(stderr, "{\"elapsed_ms\":%.3f}\n", ms);
  } else if (*poly) {
    GraphHandle h = load(p_file);
    StringOut json;
    check(eo_poly(h.g, &json.s));
    emit(p_out, json.s);
  } else if (*roots) {
    GraphHandle h = load(r_file);
    StringOut csv;
    check(eo_roots(h.g, r_tol, &csv.s));
    emit(r_out, csv.s, false);
  } else if (*mom) {
    GraphHandle h = load(m_file);
    StringOut json;
    check(eo_moments(h.g, m_k, &json.s));
    emit(m_out, json.s);
  } else if (*ent) {
    GraphHandle h = load(e_file);
    StringOut json;
    check(eo_entropy(h.g, &json.s));
    emit(e_out, json.s);
  } else if (*pcv) {
    GraphHandle h = load(pc_file);
    StringOut csv;
    check(eo_pcurve(h.g, pc_us.c_str(), &csv.s));
    emit(pc_out, csv.s, false);
  } else if (*seq) {
    StringOut json;
    check(eo_sequence(s_family.c_str(), s_sizes.c_str(), s_curve.c_str(), &json.s));
    emit(s_out, json.s);
  } else if (*loc) {
    GraphHandle h = load(l_file);
    StringOut json;
    check(eo_local_profile(h.g, l_r, &json.s));
    emit(l_out, json.s);
  } else if (*tv) {
    GraphHandle a = load(t_a), b = load(t_b);
    StringOut json;
    check(eo_tv_distance(a.g, b.g, t_r, &json.s));
    emit(t_out, json.s);
  } else if (*nfg) {
    GraphHandle h = load(n_file);
    StringOut json;
    check(eo_nfg_verify(h.g, &json.s));
    emit(n_out, json.s);
  }
  return 0;
}
