#include "critmono.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <optional>
#include <string>

#include "atlas.hpp"
#include "common.hpp"
#include "family.hpp"
#include "json_io.hpp"
#include "monodromy.hpp"
#include "path.hpp"
#include "perm.hpp"
#include "resolvent.hpp"

struct critmono_family {
  critmono::ParametricFamily fam;
};

namespace {

using critmono::Json;

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void set_msg(char** errmsg, const std::string& s) {
  if (errmsg) *errmsg = dup_string(s);
}

critmono::RunConfig run_config(const critmono_config* cfg) {
  critmono::RunConfig rc;
  if (cfg) {
    rc.seed = cfg->seed;
    rc.tol.residual = cfg->tol_residual;
    rc.tol.cluster = cfg->tol_cluster;
    rc.tol.safety = cfg->tol_safety;
  }
  return rc;
}

// Runs fn, stores its JSON result, and maps exceptions onto status codes.
template <typename Fn>
critmono_status guarded(char** report_json, char** errmsg, Fn&& fn) {
  if (report_json) *report_json = nullptr;
  if (errmsg) *errmsg = nullptr;
  try {
    Json out = fn();
    if (report_json) *report_json = dup_string(out.dump(2));
    return CRITMONO_OK;
  } catch (const critmono::Error& e) {
    set_msg(errmsg, e.what());
    return e.code() == critmono::ErrorCode::invalid_argument ? CRITMONO_ERR_INVALID
                                                        : CRITMONO_ERR_NUMERIC;
  } catch (const Json::exception& e) {
    set_msg(errmsg, std::string("invalid JSON: ") + e.what());
    return CRITMONO_ERR_INVALID;
  } catch (const std::exception& e) {
    set_msg(errmsg, e.what());
    return CRITMONO_ERR_NUMERIC;
  } catch (...) {
    set_msg(errmsg, "unknown error");
    return CRITMONO_ERR_NUMERIC;
  }
}

Json parse_text(const char* text, const char* what) {
  if (!text) critmono::fail_invalid(std::string(what) + " is required");
  return Json::parse(text);
}

}  // namespace

extern "C" {

critmono_config critmono_default_config(void) {
  critmono::RunConfig rc;
  critmono_config cfg;
  cfg.seed = rc.seed;
  cfg.tol_residual = rc.tol.residual;
  cfg.tol_cluster = rc.tol.cluster;
  cfg.tol_safety = rc.tol.safety;
  return cfg;
}

const char* critmono_version(void) { return "0.1.0"; }

void critmono_free(char* p) { std::free(p); }

critmono_status critmono_family_parse(const char* json_text, critmono_family** out,
                                      char** errmsg) {
  if (out) *out = nullptr;
  if (errmsg) *errmsg = nullptr;
  if (!out) {
    set_msg(errmsg, "output handle pointer is required");
    return CRITMONO_ERR_INVALID;
  }
  try {
    Json j = parse_text(json_text, "family JSON");
    auto fam = critmono::ParametricFamily::from_json(j);
    *out = new critmono_family{std::move(fam)};
    return CRITMONO_OK;
  } catch (const critmono::Error& e) {
    set_msg(errmsg, e.what());
    return e.code() == critmono::ErrorCode::invalid_argument ? CRITMONO_ERR_INVALID
                                                        : CRITMONO_ERR_NUMERIC;
  } catch (const Json::exception& e) {
    set_msg(errmsg, std::string("invalid JSON: ") + e.what());
    return CRITMONO_ERR_INVALID;
  } catch (const std::exception& e) {
    set_msg(errmsg, e.what());
    return CRITMONO_ERR_NUMERIC;
  }
}

void critmono_family_destroy(critmono_family* fam) { delete fam; }

int critmono_family_degree(const critmono_family* fam) { return fam ? fam->fam.degree() : 0; }

int critmono_family_param_count(const critmono_family* fam) {
  return fam ? fam->fam.param_count() : 0;
}

critmono_status critmono_bound(int n, const char* kind, const critmono_config* cfg,
                               char** report_json, char** errmsg) {
  return guarded(report_json, errmsg, [&]() {
    critmono::GroupKind k = critmono::GroupKind::alternating;
    if (kind) k = critmono::parse_group_kind(kind);
    return critmono::bound_report(n, k, run_config(cfg));
  });
}

critmono_status critmono_table(const critmono_config* cfg, char** report_json, char** errmsg) {
  return guarded(report_json, errmsg, [&]() { return critmono::table_report(run_config(cfg)); });
}

critmono_status critmono_monodromy(const critmono_family* fam, const char* basepoint_json,
                                   const char* loops_json, const critmono_config* cfg,
                                   char** report_json, char** errmsg) {
  return guarded(report_json, errmsg, [&]() {
    if (!fam) critmono::fail_invalid("family handle is required");
    critmono::MonodromyOptions opt(run_config(cfg));
    critmono::CVec base =
        critmono::point_from_json(parse_text(basepoint_json, "basepoint JSON"));
    critmono::MonodromyResult res;
    if (loops_json) {
      auto loops = critmono::loops_from_json(Json::parse(loops_json));
      res = critmono::monodromy_with_loops(fam->fam, base, loops, opt);
    } else {
      res = critmono::monodromy_auto(fam->fam, base, opt);
    }
    return critmono::monodromy_report(res, opt.config);
  });
}

critmono_status critmono_inertia(const critmono_family* fam, const char* point_json, int probes,
                                 const critmono_config* cfg, char** report_json,
                                 char** errmsg) {
  return guarded(report_json, errmsg, [&]() {
    if (!fam) critmono::fail_invalid("family handle is required");
    critmono::InertiaOptions opt(run_config(cfg));
    if (probes > 0) opt.probes = probes;
    critmono::CVec point = critmono::point_from_json(parse_text(point_json, "point JSON"));
    auto rep = critmono::inertia_group(fam->fam, point, opt);
    return critmono::inertia_report_json(rep, opt.config);
  });
}

critmono_status critmono_phi_test(const critmono_family* fam, const char* point_json,
                                  const char* class_text, int samples, const char* blocks_json,
                                  const char* basepoint_json, const critmono_config* cfg,
                                  char** report_json, char** errmsg) {
  return guarded(report_json, errmsg, [&]() {
    if (!fam) critmono::fail_invalid("family handle is required");
    if (!class_text) critmono::fail_invalid("cycle class text is required");
    critmono::PhiOptions opt(run_config(cfg));
    if (samples > 0) opt.samples = samples;
    if (blocks_json)
      opt.layout = critmono::blocks_from_json(Json::parse(blocks_json));
    if (basepoint_json)
      opt.basepoint = critmono::point_from_json(Json::parse(basepoint_json));
    critmono::CVec point = critmono::point_from_json(parse_text(point_json, "point JSON"));
    critmono::CycleType cls = critmono::CycleType::parse(class_text);
    auto rep = critmono::phi_s_test(fam->fam, point, cls, opt);
    return critmono::phi_report_json(rep, opt.config);
  });
}

critmono_status critmono_chain(const critmono_family* fam, const char* points_json,
                               const critmono_config* cfg, char** report_json, char** errmsg) {
  return guarded(report_json, errmsg, [&]() {
    if (!fam) critmono::fail_invalid("family handle is required");
    auto points = critmono::points_from_json(parse_text(points_json, "points JSON"));
    auto rep = critmono::chain_certificate(fam->fam, points, run_config(cfg));
    return critmono::chain_report_json(rep, run_config(cfg));
  });
}

critmono_status critmono_transform(const critmono_family* from_fam,
                                   const critmono_family* to_fam, const char* pmap_json,
                                   const char* basepoint_json, const char* loops_json,
                                   const critmono_config* cfg, char** report_json,
                                   char** errmsg) {
  return guarded(report_json, errmsg, [&]() {
    if (!from_fam || !to_fam) critmono::fail_invalid("both family handles are required");
    critmono::TransformOptions opt(run_config(cfg));
    auto pmap = critmono::pmap_from_json(parse_text(pmap_json, "parameter map JSON"),
                                         from_fam->fam.param_count());
    critmono::CVec base =
        critmono::point_from_json(parse_text(basepoint_json, "basepoint JSON"));
    std::vector<critmono::ParamLoop> loops;
    if (loops_json) loops = critmono::loops_from_json(Json::parse(loops_json));
    auto rep =
        critmono::transformability_test(from_fam->fam, to_fam->fam, pmap, base, loops, opt);
    return critmono::transform_report_json(rep, opt.config);
  });
}

}  // extern "C"
