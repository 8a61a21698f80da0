#include "core/json_doc.hpp"

#include <algorithm>
#include <cstdint>

#include "json.hpp"

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace tverberg {

namespace {

using ordered_json = nlohmann::ordered_json;

Rat coord_from_json(const ordered_json& v) {
  if (v.is_number_integer()) return Rat(static_cast<long long>(v.get<std::int64_t>()));
  if (v.is_number_unsigned()) {
    if (v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
      throw ParseError("coordinate too large for a JSON integer; quote it as a string");
    return Rat(static_cast<long long>(v.get<std::uint64_t>()));
  }
  if (v.is_string()) return Rat::from_string(v.get<std::string>());
  if (v.is_number_float())
    throw ParseError("decimal coordinates must be quoted strings (binary doubles are "
                     "not exact); got " + v.dump());
  throw ParseError("coordinate must be an integer or a string; got " + v.dump());
}

ordered_json parse_json(const std::string& text, const char* what) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": invalid JSON: " + e.what());
  }
}

ordered_json rat_vector_json(const RatVector& v) {
  ordered_json out = ordered_json::array();
  for (const Rat& x : v) out.push_back(x.str());
  return out;
}

ordered_json points_json(const std::vector<Point>& pts) {
  ordered_json out = ordered_json::array();
  for (const Point& p : pts) out.push_back(rat_vector_json(p));
  return out;
}

ordered_json blocks_json(const std::vector<std::vector<int>>& blocks) {
  ordered_json out = ordered_json::array();
  for (const auto& b : blocks) out.push_back(b);
  return out;
}

ordered_json certificate_json(const Certificate& cert) {
  ordered_json out = ordered_json::object();
  out["z"] = rat_vector_json(cert.z);
  out["alpha"] = rat_vector_json(cert.alpha);
  out["strict"] = cert.strict;
  return out;
}

} // namespace

Instance parse_instance_text(const std::string& text, std::optional<int> r_override) {
  ordered_json doc = parse_json(text, "instance");
  if (!doc.is_object()) throw ParseError("instance: top level must be a JSON object");
  if (!doc.contains("d") || !doc["d"].is_number_integer())
    throw ParseError("instance: missing integer field \"d\"");
  const int d = doc["d"].get<int>();
  if (d < 1) throw ParseError("instance: d must be >= 1");

  if (!doc.contains("points") || !doc["points"].is_array() || doc["points"].empty())
    throw ParseError("instance: missing non-empty array field \"points\"");
  const auto& jpts = doc["points"];

  std::vector<Point> pts;
  pts.reserve(jpts.size());
  for (std::size_t i = 0; i < jpts.size(); ++i) {
    const auto& jp = jpts[i];
    if (!jp.is_array() || static_cast<int>(jp.size()) != d)
      throw ParseError("instance: point " + std::to_string(i) + " must be an array of " +
                       std::to_string(d) + " coordinates");
    Point p;
    p.reserve(static_cast<std::size_t>(d));
    for (const auto& c : jp) p.push_back(coord_from_json(c));
    pts.push_back(std::move(p));
  }

  const int n = static_cast<int>(pts.size());
  int r;
  if (r_override) {
    r = *r_override;
  } else if (doc.contains("r")) {
    if (!doc["r"].is_number_integer())
      throw ParseError("instance: field \"r\" must be an integer");
    r = doc["r"].get<int>();
  } else {
    if ((n - 1) % (d + 1) != 0)
      throw ParseError("instance: cannot infer r: no r >= 2 gives (r-1)(d+1)+1 = " +
                       std::to_string(n) + " points; add an \"r\" field");
    r = (n - 1) / (d + 1) + 1;
    if (r < 2)
      throw ParseError("instance: too few points for any r >= 2");
  }

  try {
    return Instance(d, r, std::move(pts));
  } catch (const ContractError& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
}

std::string instance_to_text(const Instance& inst) {
  ordered_json doc = ordered_json::object();
  doc["d"] = inst.dim();
  doc["r"] = inst.parts();
  doc["points"] = points_json(inst.points());
  return doc.dump(2) + "\n";
}

Instance generate_instance(int d, int r, GenDistribution dist, std::uint64_t seed) {
  if (d < 1) throw ContractError("generate_instance: d must be >= 1");
  if (r < 2) throw ContractError("generate_instance: r must be >= 2");
  const int n = Instance::expected_size(d, r);
  Rng rng(mix_seed(seed, 77));
  const long grid = 1L << 30;

  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  while (static_cast<int>(pts.size()) < n) {
    bool placed = false;
    for (int tries = 0; tries < 1000 && !placed; ++tries) {
      Point p(static_cast<std::size_t>(d));
      for (int c = 0; c < d; ++c)
        p[static_cast<std::size_t>(c)] =
            dist == GenDistribution::grid
                ? Rat(rng.uniform_int(-1000, 1000))
                : Rat(static_cast<long>(rng.uniform_int(0, grid)), grid);
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) {
        pts.push_back(std::move(p));
        placed = true;
      }
    }
    if (!placed) throw InternalError("generate_instance: cannot place a distinct point");
  }
  return Instance(d, r, std::move(pts));
}

std::string result_to_text(const SolveResult& res,
                           const std::optional<std::string>& trace_path) {
  ordered_json doc = ordered_json::object();
  doc["partition"] = blocks_json(res.partition.canonical_blocks());
  doc["z"] = rat_vector_json(res.certificate.z);
  doc["alpha"] = rat_vector_json(res.certificate.alpha);
  doc["strict"] = res.certificate.strict;
  doc["certified_for"] =
      res.certified_for == CertifiedFor::original ? "original" : "perturbed";
  doc["perturbation_used"] = res.perturbation_used.str();
  ordered_json stats = ordered_json::object();
  stats["restarts"] = res.stats.restarts;
  stats["pivots_per_stage"] = res.stats.pivots_per_stage;
  long total = 0;
  for (int k : res.stats.pivots_per_stage) total += k;
  stats["total_pivots"] = total;
  doc["stats"] = stats;
  if (res.certified_for == CertifiedFor::perturbed)
    doc["perturbed_points"] = points_json(res.perturbed_points);
  if (trace_path) doc["trace"] = *trace_path;
  return doc.dump(2) + "\n";
}

std::string trace_to_jsonl(const std::vector<TraceRecord>& trace) {
  std::string out;
  for (const TraceRecord& rec : trace) {
    ordered_json line = ordered_json::object();
    line["stage"] = rec.stage;
    line["event"] = rec.event;
    line["t1"] = rec.t1.str();
    line["h"] = rec.h;
    line["q"] = rec.q;
    line["j"] = rec.j;
    out += line.dump();
    out += '\n';
  }
  return out;
}

std::string oracle_report_to_text(const OracleReport& report) {
  ordered_json doc = ordered_json::object();
  doc["total_proper_partitions"] = report.total_proper_partitions;
  doc["singular_partitions"] = report.singular_partitions;
  doc["strict"] = report.strict;
  ordered_json list = ordered_json::array();
  for (const OracleEntry& entry : report.valid_partitions) {
    ordered_json e = ordered_json::object();
    e["partition"] = blocks_json(entry.partition.canonical_blocks());
    e["z"] = rat_vector_json(entry.certificate.z);
    e["alpha"] = rat_vector_json(entry.certificate.alpha);
    list.push_back(e);
  }
  doc["valid_partitions"] = list;
  return doc.dump(2) + "\n";
}

Partition parse_partition_text(const std::string& text, int n) {
  ordered_json doc = parse_json(text, "partition");
  const ordered_json* jblocks = nullptr;
  if (doc.is_object()) {
    if (!doc.contains("partition") || !doc["partition"].is_array())
      throw ParseError("partition: object documents need an array field \"partition\"");
    jblocks = &doc["partition"];
  } else if (doc.is_array()) {
    jblocks = &doc;
  } else {
    throw ParseError("partition: expected an array of index blocks or a result document");
  }

  std::vector<std::vector<int>> blocks;
  for (const auto& jb : *jblocks) {
    if (!jb.is_array()) throw ParseError("partition: each block must be an array of indices");
    std::vector<int> b;
    for (const auto& ji : jb) {
      if (!ji.is_number_integer())
        throw ParseError("partition: indices must be integers; got " + ji.dump());
      b.push_back(ji.get<int>());
    }
    blocks.push_back(std::move(b));
  }
  try {
    return Partition(std::move(blocks), n);
  } catch (const ContractError& e) {
    throw ParseError(std::string("partition: ") + e.what());
  }
}

VerifyDoc verify_partition_doc(const Instance& inst, const Partition& part) {
  VerifyDoc out;
  ordered_json doc = ordered_json::object();
  doc["partition"] = blocks_json(part.canonical_blocks());
  try {
    Certificate cert = solve_partition(inst, part);
    bool nonneg = true;
    for (const Rat& a : cert.alpha)
      if (a.sign() < 0) { nonneg = false; break; }
    if (nonneg) {
      VerifyResult vr = verify_certificate(inst, part, cert, false);
      if (!vr.ok)
        throw InternalError("verify: exact solve failed its own re-check: " + vr.reason);
      out.ok = true;
      doc["ok"] = true;
      doc["certificate"] = certificate_json(cert);
    } else {
      doc["ok"] = false;
      doc["reason"] = "no convex certificate: some alpha_i is negative";
      doc["certificate"] = certificate_json(cert);
    }
  } catch (const SingularSystemError& e) {
    out.singular = true;
    doc["ok"] = false;
    doc["reason"] = std::string("singular system: ") + e.what();
  }
  out.text = doc.dump(2) + "\n";
  return out;
}

} // namespace tverberg
