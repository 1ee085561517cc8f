#include "eorient.h"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include <json.hpp>

#include "eo/entropy.hpp"
#include "eo/errors.hpp"
#include "eo/generators.hpp"
#include "eo/graph.hpp"
#include "eo/io.hpp"
#include "eo/local_stats.hpp"
#include "eo/nfg.hpp"
#include "eo/orient.hpp"
#include "eo/poly.hpp"
#include "eo/spectral.hpp"

struct eo_graph {
  eo::Graph g;
};

namespace {

thread_local std::string g_error;
thread_local std::string g_error_kind;

eo_status status_of(eo::Errc c) {
  switch (c) {
    case eo::Errc::parse: return EO_ERR_PARSE;
    case eo::Errc::loop: return EO_ERR_LOOP;
    case eo::Errc::index: return EO_ERR_INDEX;
    case eo::Errc::param: return EO_ERR_PARAM;
    case eo::Errc::cap_exceeded: return EO_ERR_CAP;
    case eo::Errc::not_eulerian: return EO_ERR_NOT_EULERIAN;
    case eo::Errc::state_blowup: return EO_ERR_STATE_BLOWUP;
    case eo::Errc::parity: return EO_ERR_PARITY;
    case eo::Errc::shape: return EO_ERR_SHAPE;
    case eo::Errc::regularity: return EO_ERR_REGULARITY;
    case eo::Errc::convergence: return EO_ERR_CONVERGENCE;
    case eo::Errc::domain: return EO_ERR_DOMAIN;
    case eo::Errc::size: return EO_ERR_SIZE;
    case eo::Errc::radius_mismatch: return EO_ERR_RADIUS;
    case eo::Errc::gauge_invalid: return EO_ERR_GAUGE;
  }
  return EO_ERR_INTERNAL;
}

template <typename Fn>
eo_status wrap(Fn&& fn) {
  try {
    fn();
    g_error.clear();
    g_error_kind.clear();
    return EO_OK;
  } catch (const eo::Error& e) {
    g_error = e.what();
    g_error_kind = eo::errc_name(e.code());
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_error = e.what();
    g_error_kind = "InternalError";
    return EO_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string dbl(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

int default_cap(int requested, int fallback) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("EO_CAP")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return fallback;
}

eo::FamilySpec parse_family_spec(const nlohmann::json& j) {
  if (!j.contains("family")) eo::fail(eo::Errc::param, "spec needs a 'family' key");
  eo::FamilySpec spec;
  spec.family = eo::family_from_name(j["family"].get<std::string>());
  if (j.contains("params"))
    for (auto& p : j["params"]) spec.params.push_back(p.get<long>());
  if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("base"))
    spec.base = std::make_shared<eo::FamilySpec>(parse_family_spec(j["base"]));
  return spec;
}

std::vector<long> parse_long_list(const std::string& csv) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t next = csv.find(',', pos);
    if (next == std::string::npos) next = csv.size();
    out.push_back(std::stol(csv.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

std::vector<eo::Rat> parse_rat_list(const std::string& csv) {
  std::vector<eo::Rat> out;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t next = csv.find(',', pos);
    if (next == std::string::npos) next = csv.size();
    out.push_back(eo::parse_rat(csv.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

std::string entropy_json(const eo::EntropyReport& r) {
  std::string s = "{\"vertices\":" + std::to_string(r.vertices) +
                  ",\"edges\":" + std::to_string(r.edges) + ",\"count\":\"" +
                  r.eulerian_count.get_str() + "\",\"entropy\":" + dbl(r.entropy) +
                  ",\"schrijver_bound\":" + dbl(r.schrijver_bound);
  s += ",\"pauling_reference\":";
  s += r.pauling_reference ? dbl(*r.pauling_reference) : "null";
  s += ",\"girth\":";
  s += r.girth ? std::to_string(*r.girth) : "null";
  s += "}";
  return s;
}

}  // namespace

extern "C" {

const char* eo_last_error(void) { return g_error.c_str(); }
const char* eo_last_error_kind(void) { return g_error_kind.c_str(); }

void eo_string_free(char* s) { delete[] s; }

eo_status eo_graph_parse(const char* text, eo_graph** out) {
  return wrap([&] { *out = new eo_graph{eo::parse_graph(text ? text : "")}; });
}

eo_status eo_graph_load(const char* path, eo_graph** out) {
  return wrap([&] { *out = new eo_graph{eo::load_graph(path)}; });
}

eo_status eo_graph_generate(const char* spec_json, eo_graph** out) {
  return wrap([&] {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(spec_json ? spec_json : "");
    } catch (const nlohmann::json::exception& e) {
      eo::fail(eo::Errc::parse, std::string("bad spec JSON: ") + e.what());
    }
    *out = new eo_graph{eo::generate(parse_family_spec(j))};
  });
}

void eo_graph_free(eo_graph* g) { delete g; }

int32_t eo_graph_vertices(const eo_graph* g) { return g->g.vertex_count(); }
int32_t eo_graph_edges(const eo_graph* g) { return g->g.edge_count(); }
int eo_graph_is_eulerian(const eo_graph* g) { return g->g.is_eulerian() ? 1 : 0; }

int32_t eo_graph_girth(const eo_graph* g) {
  auto gi = g->g.girth();
  return gi ? *gi : -1;
}

eo_status eo_graph_to_text(const eo_graph* g, char** out) {
  return wrap([&] { *out = dup_string(eo::graph_to_text(g->g)); });
}

eo_status eo_graph_to_json(const eo_graph* g, char** out) {
  return wrap([&] { *out = dup_string(eo::graph_to_json(g->g)); });
}

eo_status eo_count(const eo_graph* g, const char* method, int cap, int threads, char** json,
                   double* elapsed_ms) {
  return wrap([&] {
    std::string name = method ? method : "dp";
    eo::CountResult r;
    if (name == "brute") {
      r = eo::count_eulerian_brute(g->g, default_cap(cap, 24), threads > 0 ? threads : 1);
    } else if (name == "dp") {
      r = eo::count_eulerian_frontier_dp(g->g);
    } else if (name == "cycles") {
      auto t0 = std::chrono::steady_clock::now();
      eo::Int v = eo::count_eulerian_cycle_space(g->g, default_cap(cap, 30));
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
      r = {v, eo::CountMethod::cycle_space, ms};
    } else {
      eo::fail(eo::Errc::param, "unknown method: " + name);
    }
    *json = dup_string("{\"value\":\"" + r.value.get_str() + "\",\"method\":\"" +
                       eo::count_method_name(r.method) + "\"}");
    if (elapsed_ms) *elapsed_ms = r.elapsed_ms;
  });
}

eo_status eo_poly(const eo_graph* g, char** json) {
  return wrap([&] {
    eo::RationalPoly p = eo::poly_P(g->g, default_cap(0, 30));
    std::string s = "{\"degree\":" + std::to_string(2 * g->g.edge_count()) + ",\"coeffs\":{";
    bool first = true;
    for (std::size_t k = 0; k < p.coeff.size(); ++k) {
      if (p.coeff[k] == 0) continue;
      if (!first) s += ',';
      first = false;
      s += "\"" + std::to_string(k) + "\":\"" + eo::rat_str(p.coeff[k]) + "\"";
    }
    s += "}}";
    *json = dup_string(s);
  });
}

eo_status eo_roots(const eo_graph* g, double tol, char** csv) {
  return wrap([&] {
    auto roots = eo::find_roots(eo::poly_P(g->g, default_cap(0, 30)),
                                tol > 0 ? tol : 1e-12);
    std::string s = "re,im,abs\n";
    for (auto& z : roots)
      s += dbl(z.real()) + "," + dbl(z.imag()) + "," + dbl(std::abs(z)) + "\n";
    *csv = dup_string(s);
  });
}

eo_status eo_moments(const eo_graph* g, int k_max, char** json) {
  return wrap([&] {
    if (k_max < 1) eo::fail(eo::Errc::param, "k_max must be >= 1");
    auto ms = eo::moments(g->g, k_max, default_cap(0, 30));
    std::string s = "[";
    for (std::size_t i = 0; i < ms.size(); ++i) {
      if (i) s += ',';
      s += "\"" + eo::rat_str(ms[i]) + "\"";
    }
    s += "]";
    *json = dup_string(s);
  });
}

eo_status eo_entropy(const eo_graph* g, char** json) {
  return wrap([&] { *json = dup_string(entropy_json(eo::entropy_report(g->g))); });
}

eo_status eo_pcurve(const eo_graph* g, const char* u_list, char** csv) {
  return wrap([&] {
    auto us = parse_rat_list(u_list ? u_list : "");
    if (us.empty()) eo::fail(eo::Errc::param, "u list is empty");
    auto rows = eo::p_curve(g->g, us, default_cap(0, 30));
    std::string s = "u,log_p_over_v\n";
    for (auto& [u, val] : rows) s += eo::rat_str(u) + "," + dbl(val) + "\n";
    *csv = dup_string(s);
  });
}

eo_status eo_sequence(const char* family, const char* sizes, const char* curve, char** json) {
  return wrap([&] {
    eo::FamilySpec tmpl;
    std::string fam = family ? family : "";
    if (!fam.empty() && fam.front() == '{') {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(fam);
      } catch (const nlohmann::json::exception& e) {
        eo::fail(eo::Errc::parse, std::string("bad template JSON: ") + e.what());
      }
      tmpl = parse_family_spec(j);
    } else {
      tmpl.family = eo::family_from_name(fam);
    }
    std::vector<eo::Rat> us;
    if (curve && *curve) {
      std::string c = curve;
      auto c1 = c.find(':');
      auto c2 = c.find(':', c1 == std::string::npos ? c.size() : c1 + 1);
      if (c1 == std::string::npos || c2 == std::string::npos)
        eo::fail(eo::Errc::param, "curve must be lo:hi:steps");
      eo::Rat lo = eo::parse_rat(c.substr(0, c1));
      eo::Rat hi = eo::parse_rat(c.substr(c1 + 1, c2 - c1 - 1));
      long steps = std::stol(c.substr(c2 + 1));
      if (steps < 2) eo::fail(eo::Errc::param, "curve needs at least 2 steps");
      for (long i = 0; i < steps; ++i)
        us.push_back(lo + (hi - lo) * eo::make_rat(i, steps - 1));
    }
    auto rep = eo::sequence_report(tmpl, parse_long_list(sizes ? sizes : ""), us);

    std::string s = "{\"family\":\"" + rep.family + "\",\"reference_constant\":";
    s += rep.reference_constant ? dbl(*rep.reference_constant) : "null";
    s += ",\"reference_note\":\"" + rep.reference_note + "\",\"entries\":[";
    for (std::size_t i = 0; i < rep.entries.size(); ++i) {
      const auto& e = rep.entries[i];
      if (i) s += ',';
      s += "{\"size\":" + std::to_string(e.size) + ",\"report\":" + entropy_json(e.report) +
           ",\"girth_formula\":" + dbl(e.girth_formula) + ",\"diff_prev\":";
      s += e.diff_prev ? dbl(*e.diff_prev) : "null";
      if (!e.curve.empty()) {
        s += ",\"curve\":[";
        for (std::size_t k = 0; k < e.curve.size(); ++k) {
          if (k) s += ',';
          s += "[\"" + eo::rat_str(e.curve[k].first) + "\"," + dbl(e.curve[k].second) + "]";
        }
        s += "]";
      }
      s += "}";
    }
    s += "]}";
    *json = dup_string(s);
  });
}

eo_status eo_local_profile(const eo_graph* g, int radius, char** json) {
  return wrap([&] {
    auto prof = eo::profile(g->g, radius);
    std::string s = "{";
    bool first = true;
    for (auto& [key, p] : prof.probs) {
      if (!first) s += ',';
      first = false;
      s += "\"" + eo::key_hex(key) + "\":\"" + eo::rat_str(p) + "\"";
    }
    s += "}";
    *json = dup_string(s);
  });
}

eo_status eo_tv_distance(const eo_graph* a, const eo_graph* b, int radius, char** json) {
  return wrap([&] {
    eo::Rat d = eo::tv_distance(eo::profile(a->g, radius), eo::profile(b->g, radius));
    *json = dup_string("\"" + eo::rat_str(d) + "\"");
  });
}

eo_status eo_nfg_verify(const eo_graph* g, char** json) {
  return wrap([&] {
    eo::NfgCertificate c = eo::nfg_verify(g->g);
    std::string s = "{\"z_original\":\"" + c.z_original.str() + "\",\"z_gauged\":\"" +
                    c.z_gauged.str() + "\",\"epsilon\":\"" + c.epsilon.get_str() +
                    "\",\"pass\":" + (c.pass ? "true" : "false") + "}";
    *json = dup_string(s);
  });
}

}  // extern "C"
