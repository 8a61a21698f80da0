#include "tverberg/tverberg.h"

#include <cstring>
#include <string>

#include "core/errors.hpp"
#include "core/json_doc.hpp"
#include "core/model.hpp"
#include "core/oracle.hpp"
#include "core/solver.hpp"
#include "core/svg.hpp"

struct tv_instance {
  tverberg::Instance value;
};

struct tv_result {
  tverberg::SolveResult value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tv_status fail(tv_status st, const char* what) {
  g_last_error = what;
  return st;
}

template <class Fn>
tv_status wrap(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return TV_OK;
  } catch (const tverberg::ParseError& e) {
    return fail(TV_ERR_PARSE, e.what());
  } catch (const tverberg::UnsupportedError& e) {
    return fail(TV_ERR_UNSUPPORTED, e.what());
  } catch (const tverberg::SizeError& e) {
    return fail(TV_ERR_SIZE, e.what());
  } catch (const tverberg::ContractError& e) {
    return fail(TV_ERR_CONTRACT, e.what());
  } catch (const tverberg::DimensionError& e) {
    return fail(TV_ERR_CONTRACT, e.what());
  } catch (const tverberg::ConfigError& e) {
    return fail(TV_ERR_CONTRACT, e.what());
  } catch (const std::exception& e) {
    return fail(TV_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TV_ERR_INTERNAL, "unknown error");
  }
}

tv_status require(bool ok, const char* what) {
  if (ok) return TV_OK;
  return fail(TV_ERR_CONTRACT, what);
}

} // namespace

extern "C" {

const char* tv_version(void) { return "1.0.0"; }

const char* tv_last_error(void) { return g_last_error.c_str(); }

void tv_string_free(char* text) { delete[] text; }

tv_status tv_instance_parse(const char* json_text, int r_override, tv_instance** out) {
  if (tv_status st = require(json_text && out, "tv_instance_parse: null argument"))
    return st;
  *out = nullptr;
  return wrap([&] {
    std::optional<int> r;
    if (r_override != 0) r = r_override;
    *out = new tv_instance{tverberg::parse_instance_text(json_text, r)};
  });
}

tv_status tv_instance_generate(int d, int r, const char* distribution, uint64_t seed,
                               tv_instance** out) {
  if (tv_status st = require(distribution && out, "tv_instance_generate: null argument"))
    return st;
  *out = nullptr;
  return wrap([&] {
    std::string dist = distribution;
    tverberg::GenDistribution gd;
    if (dist == "grid") gd = tverberg::GenDistribution::grid;
    else if (dist == "cube") gd = tverberg::GenDistribution::cube;
    else throw tverberg::ContractError("tv_instance_generate: distribution must be "
                                       "\"grid\" or \"cube\", got \"" + dist + "\"");
    *out = new tv_instance{tverberg::generate_instance(d, r, gd, seed)};
  });
}

tv_status tv_instance_to_json(const tv_instance* inst, char** out_text) {
  if (tv_status st = require(inst && out_text, "tv_instance_to_json: null argument"))
    return st;
  *out_text = nullptr;
  return wrap([&] { *out_text = dup_string(tverberg::instance_to_text(inst->value)); });
}

int tv_instance_dim(const tv_instance* inst) { return inst ? inst->value.dim() : 0; }
int tv_instance_parts(const tv_instance* inst) { return inst ? inst->value.parts() : 0; }
int tv_instance_size(const tv_instance* inst) { return inst ? inst->value.size() : 0; }

void tv_instance_free(tv_instance* inst) { delete inst; }

tv_solve_options tv_solve_options_default(void) {
  tverberg::SolverConfig cfg;
  tv_solve_options opts;
  opts.perturb_exponent = cfg.perturb_exponent;
  opts.max_restarts = cfg.max_restarts;
  opts.seed = cfg.seed;
  opts.pivot_cap = cfg.pivot_cap;
  opts.certify_original = cfg.certify_original ? 1 : 0;
  return opts;
}

tv_status tv_solve(const tv_instance* inst, const tv_solve_options* opts, tv_result** out) {
  if (tv_status st = require(inst && out, "tv_solve: null argument")) return st;
  *out = nullptr;
  return wrap([&] {
    tverberg::SolverConfig cfg;
    if (opts) {
      cfg.perturb_exponent = opts->perturb_exponent;
      cfg.max_restarts = opts->max_restarts;
      cfg.seed = opts->seed;
      cfg.pivot_cap = opts->pivot_cap;
      cfg.certify_original = opts->certify_original != 0;
    }
    *out = new tv_result{tverberg::solve(inst->value, cfg)};
  });
}

tv_status tv_result_to_json(const tv_result* res, const char* trace_path,
                            char** out_text) {
  if (tv_status st = require(res && out_text, "tv_result_to_json: null argument"))
    return st;
  *out_text = nullptr;
  return wrap([&] {
    std::optional<std::string> trace;
    if (trace_path) trace = std::string(trace_path);
    *out_text = dup_string(tverberg::result_to_text(res->value, trace));
  });
}

tv_status tv_result_trace_jsonl(const tv_result* res, char** out_text) {
  if (tv_status st = require(res && out_text, "tv_result_trace_jsonl: null argument"))
    return st;
  *out_text = nullptr;
  return wrap([&] { *out_text = dup_string(tverberg::trace_to_jsonl(res->value.trace)); });
}

tv_status tv_result_svg(const tv_instance* inst, const tv_result* res, char** out_text) {
  if (tv_status st = require(inst && res && out_text, "tv_result_svg: null argument"))
    return st;
  *out_text = nullptr;
  return wrap([&] {
    const tverberg::SolveResult& r = res->value;
    const tverberg::Instance& base = inst->value;
    // Draw the point set the certificate actually refers to, so z sits in
    // every rendered hull.
    tverberg::Instance shown =
        r.certified_for == tverberg::CertifiedFor::perturbed
            ? tverberg::Instance(base.dim(), base.parts(), r.perturbed_points)
            : base;
    *out_text = dup_string(tverberg::render_svg(shown, r.partition, r.certificate.z));
  });
}

void tv_result_free(tv_result* res) { delete res; }

tv_status tv_verify(const tv_instance* inst, const char* partition_json, int* verdict,
                    char** out_doc) {
  if (tv_status st =
          require(inst && partition_json && verdict && out_doc, "tv_verify: null argument"))
    return st;
  *out_doc = nullptr;
  return wrap([&] {
    tverberg::Partition part =
        tverberg::parse_partition_text(partition_json, inst->value.size());
    tverberg::VerifyDoc doc = tverberg::verify_partition_doc(inst->value, part);
    *verdict = doc.ok ? 1 : 0;
    *out_doc = dup_string(doc.text);
  });
}

tv_status tv_oracle(const tv_instance* inst, int strict, char** out_report) {
  if (tv_status st = require(inst && out_report, "tv_oracle: null argument")) return st;
  *out_report = nullptr;
  return wrap([&] {
    tverberg::OracleReport report = tverberg::enumerate_tverberg(inst->value, strict != 0);
    *out_report = dup_string(tverberg::oracle_report_to_text(report));
  });
}

} // extern "C"
