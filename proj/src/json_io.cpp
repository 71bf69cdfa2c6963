#include "json_io.hpp"

#include <algorithm>

namespace critmono {

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail_invalid("complex values must be [re, im] number pairs");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Json cvec_json(const CVec& v) {
  Json out = Json::array();
  for (Complex z : v) out.push_back(complex_json(z));
  return out;
}

CVec cvec_from_json(const Json& j) {
  if (!j.is_array()) fail_invalid("expected an array of [re, im] pairs");
  CVec v;
  for (const auto& e : j) v.push_back(complex_from_json(e));
  return v;
}

CVec point_from_json(const Json& j) {
  if (j.is_object()) {
    if (!j.contains("point")) fail_invalid("point object needs a \"point\" field");
    return cvec_from_json(j["point"]);
  }
  return cvec_from_json(j);
}

std::vector<CVec> points_from_json(const Json& j) {
  const Json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("points")) fail_invalid("points object needs a \"points\" field");
    arr = &j["points"];
  }
  if (!arr->is_array() || arr->empty()) fail_invalid("expected a nonempty array of points");
  std::vector<CVec> pts;
  for (const auto& e : *arr) pts.push_back(cvec_from_json(e));
  return pts;
}

std::vector<MPoly> pmap_from_json(const Json& j, int var_count) {
  const Json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("map")) fail_invalid("parameter map object needs a \"map\" field");
    arr = &j["map"];
  }
  if (!arr->is_array()) fail_invalid("parameter map must be an array of polynomials");
  std::vector<MPoly> out;
  for (const auto& entry : *arr) {
    std::vector<MTerm> terms;
    const Json* tl = &entry;
    if (entry.is_object()) {
      if (!entry.contains("terms")) fail_invalid("map polynomial needs a \"terms\" field");
      tl = &entry["terms"];
    }
    if (!tl->is_array()) fail_invalid("map polynomial terms must form an array");
    for (const auto& t : *tl) {
      if (!t.is_object() || !t.contains("c") || !t.contains("e"))
        fail_invalid("terms need \"c\" and \"e\" fields");
      MTerm term;
      term.coeff = complex_from_json(t["c"]);
      if (!t["e"].is_array() || static_cast<int>(t["e"].size()) != var_count)
        fail_invalid("term exponents must list one entry per parameter");
      for (const auto& e : t["e"]) {
        if (!e.is_number_integer() || e.get<int>() < 0)
          fail_invalid("term exponents must be nonnegative integers");
        term.exponents.push_back(e.get<int>());
      }
      terms.push_back(std::move(term));
    }
    out.push_back(MPoly(var_count, std::move(terms)));
  }
  return out;
}

std::vector<std::vector<int>> blocks_from_json(const Json& j) {
  const Json* arr = &j;
  if (j.is_object() && j.contains("blocks")) arr = &j["blocks"];
  if (!arr->is_array()) fail_invalid("blocks must be an array of index arrays");
  std::vector<std::vector<int>> blocks;
  for (const auto& b : *arr) {
    if (!b.is_array()) fail_invalid("each block must be an array of indices");
    std::vector<int> block;
    for (const auto& i : b) {
      if (!i.is_number_integer()) fail_invalid("block entries must be integers");
      block.push_back(i.get<int>());
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

Json config_json(const RunConfig& config) {
  Json tol;
  tol["residual"] = config.tol.residual;
  tol["cluster"] = config.tol.cluster;
  tol["safety"] = config.tol.safety;
  Json out;
  out["seed"] = config.seed;
  out["tolerances"] = tol;
  return out;
}

namespace {

Json perm_json(const Permutation& p) { return Json(p.images()); }

Json perms_json(const std::vector<Permutation>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(perm_json(p));
  return out;
}

Json cycle_type_json(const CycleType& ct) { return Json(ct.parts()); }

Json blocks_json(const std::vector<std::vector<int>>& blocks) {
  Json out = Json::array();
  for (const auto& b : blocks) out.push_back(Json(b));
  return out;
}

}  // namespace

Json group_json(const PermGroup& g) {
  Json out;
  out["degree"] = g.degree;
  out["order"] = g.order;
  out["transitive"] = g.transitive;
  out["generators"] = perms_json(g.generators);
  out["orbits"] = blocks_json(g.orbits);
  out["materialized"] = g.materialized;
  return out;
}

Json bound_report(int n, GroupKind kind, const RunConfig& config) {
  ChainCertificate cert = max_chain(n, kind);
  Json witness = Json::array();
  for (const auto& c : cert.chain) witness.push_back(cycle_type_json(c));
  Json out;
  out["n"] = n;
  out["s"] = cert.length();
  out["witness"] = witness;
  out["kind"] = to_string(kind);
  if (kind == GroupKind::alternating && cert.length() != lower_bound_s(n))
    fail_numeric("chain length disagrees with the closed-form bound");
  out["config"] = config_json(config);
  return out;
}

Json table_report(const RunConfig& config) {
  Json ns = Json::array();
  Json computed = Json::array();
  for (int n = 5; n <= 9; ++n) {
    ns.push_back(n);
    computed.push_back(lower_bound_s(n));
  }
  Json out;
  out["n"] = ns;
  out["tschebotarow"] = computed;
  out["hilbert"] = Json::array({1, 2, 3, 4, 4});
  Json notes;
  notes["hilbert_intro"] = Json::array({1, 2, 3, 4, 4});
  notes["wiman"] = "for n >= 9 the literature gives resolvents with s <= n-5";
  out["annotations"] = notes;
  out["config"] = config_json(config);
  return out;
}

Json monodromy_report(const MonodromyResult& r, const RunConfig& config) {
  Json out = group_json(r.group);
  out["seed"] = r.seed;
  out["basepoint"] = cvec_json(r.basepoint);
  out["base_roots"] = cvec_json(r.base_roots.roots);
  out["loop_permutations"] = perms_json(r.loop_perms);
  out["loop_count"] = r.loops.size();
  out["auto"] = r.auto_mode;
  out["config"] = config_json(config);
  return out;
}

Json inertia_report_json(const InertiaReport& r, const RunConfig& config) {
  Json probes = Json::array();
  for (const auto& p : r.probes) {
    Json pj;
    pj["direction"] = cvec_json(p.direction);
    pj["rho"] = p.rho;
    pj["perm"] = perm_json(p.perm);
    probes.push_back(pj);
  }
  Json out;
  out["point"] = cvec_json(r.point);
  out["pattern"] = blocks_json(r.pattern.blocks);
  out["class"] = cycle_type_json(r.cls);
  out["order"] = r.group.order;
  out["generators"] = perms_json(r.group.generators);
  out["probes"] = probes;
  out["orbits"] = blocks_json(r.group.orbits);
  out["anchor"] = cvec_json(r.anchor);
  out["anchor_roots"] = cvec_json(r.anchor_roots.roots);
  out["limit_values"] = cvec_json(r.pattern.centers);
  out["seed"] = r.seed;
  out["config"] = config_json(config);
  return out;
}

Json phi_report_json(const PhiReport& r, const RunConfig& config) {
  Json out;
  out["vanishes"] = r.vanishes;
  out["class"] = cycle_type_json(r.cls);
  out["blocks"] = blocks_json(r.blocks);
  out["max_abs"] = r.max_abs;
  out["min_abs"] = r.min_abs;
  out["samples"] = r.samples;
  out["group_order"] = r.group_order;
  out["symmetric_fallback"] = r.symmetric_fallback;
  out["point"] = cvec_json(r.point);
  out["basepoint"] = cvec_json(r.basepoint);
  out["limit_values"] = cvec_json(r.limit_values);
  out["seed"] = r.seed;
  out["config"] = config_json(config);
  return out;
}

Json chain_report_json(const ChainReport& r, const RunConfig& config) {
  Json chain = Json::array();
  for (const auto& c : r.certificate.chain) chain.push_back(cycle_type_json(c));
  Json patterns = Json::array();
  for (const auto& p : r.patterns) patterns.push_back(blocks_json(p.blocks));
  Json points = Json::array();
  for (const auto& p : r.points) points.push_back(cvec_json(p));
  Json out;
  out["length"] = r.certificate.length();
  out["lower_bound"] = r.lower_bound;
  out["kind"] = to_string(r.certificate.kind);
  out["chain"] = chain;
  out["patterns"] = patterns;
  out["points"] = points;
  out["config"] = config_json(config);
  return out;
}

Json transform_report_json(const TransformReport& r, const RunConfig& config) {
  Json out;
  out["transformable"] = r.transformable;
  out["alphas"] = cvec_json(r.alphas);
  out["residual"] = r.residual;
  out["invariant_ok"] = r.invariant_ok;
  if (r.alignment)
    out["alignment"] = perm_json(*r.alignment);
  else
    out["alignment"] = nullptr;
  out["u_drift"] = r.u_drift;
  out["seed"] = r.seed;
  out["config"] = config_json(config);
  return out;
}

}  // namespace critmono
