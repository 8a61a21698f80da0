#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tverberg/tverberg.h"

namespace {

// Exit codes: 0 ok, 1 verification negative, 2 input error, 3 internal error.
constexpr int kExitVerifyNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { tv_string_free(p); }
};

struct OwnedInstance {
  tv_instance* p = nullptr;
  ~OwnedInstance() { tv_instance_free(p); }
};

struct OwnedResult {
  tv_result* p = nullptr;
  ~OwnedResult() { tv_result_free(p); }
};

int status_exit(tv_status st) {
  std::cerr << "error: " << tv_last_error() << "\n";
  return st == TV_ERR_INTERNAL ? kExitInternal : kExitInput;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return out.good();
}

int emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  if (!write_file(out_path, text)) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kExitInput;
  }
  return 0;
}

int load_instance(const std::string& path, int r, OwnedInstance& inst) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error: cannot read " << path << "\n";
    return kExitInput;
  }
  if (tv_status st = tv_instance_parse(text.c_str(), r, &inst.p)) return status_exit(st);
  return 0;
}

int cmd_solve(const std::string& in_path, int r, const tv_solve_options& opts,
              const std::string& out_path, const std::string& trace_path,
              const std::string& svg_path) {
  OwnedInstance inst;
  if (int rc = load_instance(in_path, r, inst)) return rc;

  if (!svg_path.empty() && tv_instance_dim(inst.p) != 2) {
    std::cerr << "error: --svg needs a d = 2 instance, got d = "
              << tv_instance_dim(inst.p) << "\n";
    return kExitInput;
  }

  OwnedResult res;
  if (tv_status st = tv_solve(inst.p, &opts, &res.p)) return status_exit(st);

  OwnedString doc;
  if (tv_status st = tv_result_to_json(
          res.p, trace_path.empty() ? nullptr : trace_path.c_str(), &doc.p))
    return status_exit(st);

  if (!trace_path.empty()) {
    OwnedString trace;
    if (tv_status st = tv_result_trace_jsonl(res.p, &trace.p)) return status_exit(st);
    if (!write_file(trace_path, trace.p)) {
      std::cerr << "error: cannot write " << trace_path << "\n";
      return kExitInput;
    }
  }
  if (!svg_path.empty()) {
    OwnedString svg;
    if (tv_status st = tv_result_svg(inst.p, res.p, &svg.p)) return status_exit(st);
    if (!write_file(svg_path, svg.p)) {
      std::cerr << "error: cannot write " << svg_path << "\n";
      return kExitInput;
    }
  }
  return emit(out_path, doc.p);
}

int cmd_verify(const std::string& in_path, const std::string& part_path, int r) {
  OwnedInstance inst;
  if (int rc = load_instance(in_path, r, inst)) return rc;

  std::string part_text;
  if (!read_file(part_path, part_text)) {
    std::cerr << "error: cannot read " << part_path << "\n";
    return kExitInput;
  }
  int verdict = 0;
  OwnedString doc;
  if (tv_status st = tv_verify(inst.p, part_text.c_str(), &verdict, &doc.p))
    return status_exit(st);
  std::cout << doc.p;
  return verdict ? 0 : kExitVerifyNegative;
}

int cmd_oracle(const std::string& in_path, int r, bool strict,
               const std::string& out_path) {
  OwnedInstance inst;
  if (int rc = load_instance(in_path, r, inst)) return rc;
  OwnedString report;
  if (tv_status st = tv_oracle(inst.p, strict ? 1 : 0, &report.p))
    return status_exit(st);
  return emit(out_path, report.p);
}

int cmd_gen(int d, int r, const std::string& dist, std::uint64_t seed,
            const std::string& out_path) {
  OwnedInstance inst;
  if (tv_status st = tv_instance_generate(d, r, dist.c_str(), seed, &inst.p))
    return status_exit(st);
  OwnedString doc;
  if (tv_status st = tv_instance_to_json(inst.p, &doc.p)) return status_exit(st);
  return emit(out_path, doc.p);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Tverberg partitions: certified solver, verifier, and brute-force "
               "enumerator over rational point sets"};
  app.require_subcommand(1);

  tv_solve_options opts = tv_solve_options_default();
  std::string in_path, part_path, out_path, trace_path, svg_path;
  std::string dist = "grid";
  int r = 0, gen_d = 0, gen_r = 0;
  std::uint64_t seed = 0;
  bool no_certify = false, strict = false;

  CLI::App* solve = app.add_subcommand("solve", "compute a partition with an exact certificate");
  solve->add_option("input", in_path, "instance JSON file")->required();
  solve->add_option("--r", r, "number of parts (overrides the document)");
  solve->add_option("--seed", seed, "seed for perturbation and restarts");
  solve->add_option("--perturb-exponent", opts.perturb_exponent,
                    "perturbation radius = bounding extent / 2^this");
  solve->add_option("--pivot-cap", opts.pivot_cap, "abort after this many pivots (0 = auto)");
  solve->add_flag("--no-certify-original", no_certify,
                  "keep the certificate on the perturbed points");
  solve->add_option("--trace", trace_path, "write one JSON line per singular event here");
  solve->add_option("--svg", svg_path, "write an SVG rendering here (d = 2 only)");
  solve->add_option("--out", out_path, "write the result document here instead of stdout");

  CLI::App* verify = app.add_subcommand("verify", "check a partition document exactly");
  verify->add_option("input", in_path, "instance JSON file")->required();
  verify->add_option("partition", part_path, "partition or result document")->required();
  verify->add_option("--r", r, "number of parts (overrides the document)");

  CLI::App* oracle = app.add_subcommand("oracle", "enumerate every proper partition (small n)");
  oracle->add_option("input", in_path, "instance JSON file")->required();
  oracle->add_option("--r", r, "number of parts (overrides the document)");
  oracle->add_flag("--strict", strict, "demand alpha > 0 instead of alpha >= 0");
  oracle->add_option("--out", out_path, "write the report here instead of stdout");

  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--d", gen_d, "dimension")->required();
  gen->add_option("--r", gen_r, "number of parts")->required();
  gen->add_option("--dist", dist, "grid (integers) or cube (rationals in [0,1])");
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--out", out_path, "write the instance here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  opts.seed = seed;
  opts.certify_original = no_certify ? 0 : 1;

  if (solve->parsed()) return cmd_solve(in_path, r, opts, out_path, trace_path, svg_path);
  if (verify->parsed()) return cmd_verify(in_path, part_path, r);
  if (oracle->parsed()) return cmd_oracle(in_path, r, strict, out_path);
  return cmd_gen(gen_d, gen_r, dist, seed, out_path);
}
