// Copyright 2026 The sumprod Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command-line front end. Reports go to stdout (or --out) as JSON or CSV;
// warnings and summaries go to the diagnostic stream.

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sumprod/error.hpp"
#include "sumprod/growth.hpp"
#include "sumprod/harness.hpp"
#include "sumprod/incidence.hpp"
#include "sumprod/io.hpp"

namespace sumprod::cli {
namespace {

struct Globals {
  std::uint64_t seed = 42;
  std::size_t threads = 1;
  std::optional<std::size_t> group_cap;
  std::optional<std::uint64_t> work_cap;
  std::string out;
  std::string format;
};

std::size_t default_threads() {
  if (char const* env = std::getenv("SUMPROD_THREADS")) {
    try {
      std::size_t const n = std::stoul(env);
      if (n > 0) return n;
    } catch (std::exception const&) {
    }
  }
  return 1;
}

Caps resolve_caps(Globals const& g, std::ostream& err) {
  Caps caps;
  if (g.group_cap) {
    err << "warning: group-order cap overridden to " << *g.group_cap << " (default " << kDefaultGroupCap << ")\n";
    caps.group = *g.group_cap;
  }
  if (g.work_cap) {
    err << "warning: product-work cap overridden to " << *g.work_cap << " (default " << kDefaultWorkCap << ")\n";
    caps.work = *g.work_cap;
  }
  return caps;
}

Json caps_json(Caps const& c) { return Json{{"group", c.group}, {"work", c.work}}; }

void write_output(Globals const& g, std::string const& text, std::ostream& out) {
  if (g.out.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
  } else {
    write_text_file(g.out, text.back() == '\n' ? text : text + "\n");
  }
}

std::string envelope(Json config, Json body, std::string const& key) {
  Json doc;
  doc["config"] = std::move(config);
  doc[key] = std::move(body);
  return doc.dump(2);
}

ReportFormat parse_format(std::string const& f, ReportFormat fallback) {
  if (f.empty()) return fallback;
  if (f == "json") return ReportFormat::kJson;
  if (f == "csv") return ReportFormat::kCsv;
  throw Error(ErrorCode::kConfig, "unknown format '" + f + "'");
}

std::string suite_text(Json const& config, std::vector<ClaimReport> const& reports, ReportFormat format) {
  if (format == ReportFormat::kCsv) return "# config " + config.dump() + "\n" + emit_report(reports, format);
  Json arr = Json::array();
  for (ClaimReport const& r : reports) arr.push_back(to_json(r));
  return envelope(config, std::move(arr), "reports");
}

void summarize(std::vector<ClaimReport> const& reports, std::ostream& err) {
  for (ClaimReport const& r : reports) {
    err << r.claim_id << " p=" << r.p << " trials=" << r.trials;
    if (r.mode == ClaimMode::kExactConstant) {
      err << " violations=" << r.violations;
      if (r.violations) err << " witness: " << r.witness;
    } else if (r.exponent) {
      err << " exponent=" << double_string(*r.exponent);
    }
    if (r.params.contains("skipped")) err << " skipped: " << r.params["skipped"].get<std::string>();
    err << '\n';
  }
}

// verify / scan ------------------------------------------------------------

struct SuiteFlags {
  std::string suite;
  std::vector<std::string> claims;
  std::vector<std::uint64_t> primes;
  std::optional<std::uint64_t> trials;
  std::string config_path;
};

// default_suite applies when neither --suite, --claims nor --config is given.
SuiteConfig resolve_suite(SuiteFlags const& f, Globals const& g, CLI::App const& sub, std::ostream& err,
                          std::string const& default_suite = "") {
  SuiteConfig cfg;
  if (!f.config_path.empty()) {
    std::ifstream in(f.config_path);
    if (!in) throw Error(ErrorCode::kIo, "cannot read " + f.config_path);
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (Json::exception const& e) {
      throw Error(ErrorCode::kConfig, std::string("config is not JSON: ") + e.what());
    }
    cfg = parse_suite_config(doc);
  }
  if (sub.count("--suite")) {
    cfg.suite = f.suite;
  } else if (f.claims.empty() && f.config_path.empty()) {
    cfg.suite = default_suite;
  }
  for (std::string const& id : f.claims) {
    if (!find_claim(id)) throw Error(ErrorCode::kConfig, "unknown claim '" + id + "'");
    cfg.claims.push_back(id);
  }
  suite_claims(cfg.suite);  // validates the suite name
  if (!f.primes.empty()) {
    for (std::uint64_t p : f.primes) {
      if (p != 0 && (p < 3 || !is_prime(p))) throw Error(ErrorCode::kConfig, std::to_string(p) + " is not an odd prime");
    }
    cfg.options.p_list = f.primes;
  }
  if (f.trials) cfg.options.trials = f.trials;
  if (sub.get_parent()->count("--seed") || f.config_path.empty()) cfg.options.seed = g.seed;
  cfg.options.threads = g.threads;
  Caps const caps = resolve_caps(g, err);
  if (g.group_cap) cfg.options.caps.group = caps.group;
  if (g.work_cap) cfg.options.caps.work = caps.work;
  return cfg;
}

int run_verify(SuiteFlags const& f, Globals const& g, CLI::App const& sub, std::ostream& out, std::ostream& err) {
  SuiteConfig const cfg = resolve_suite(f, g, sub, err);
  SuiteReport const rep = run_suite(cfg);
  write_output(g, suite_text(to_json(cfg), rep.reports, parse_format(g.format, ReportFormat::kJson)), out);
  summarize(rep.reports, err);
  err << "total violations: " << rep.violations << '\n';
  return rep.violations ? kExitViolation : kExitOk;
}

int run_scan(SuiteFlags const& f, Globals const& g, CLI::App const& sub, std::ostream& out, std::ostream& err) {
  SuiteConfig const cfg = resolve_suite(f, g, sub, err, "scan");
  std::vector<std::string> ids = suite_claims(cfg.suite);
  for (std::string const& id : cfg.claims) ids.push_back(id);
  for (std::string const& id : ids) {
    if (find_claim(id)->mode != ClaimMode::kScalingReport) {
      throw Error(ErrorCode::kConfig, "'" + id + "' is not a scaling claim");
    }
  }
  SuiteReport const rep = run_suite(cfg);
  write_output(g, suite_text(to_json(cfg), rep.reports, parse_format(g.format, ReportFormat::kCsv)), out);
  summarize(rep.reports, err);
  return kExitOk;
}

// Single-set subcommands ---------------------------------------------------

Json base_config(std::string const& command, Globals const& g, Caps const& caps) {
  return Json{{"command", command}, {"seed", g.seed}, {"caps", caps_json(caps)}};
}

Json size_profile(std::vector<std::size_t> const& profile) { return Json(profile); }

template <class E>
Json group_growth(ElementSet<E> const& a, unsigned kmax, Caps const& caps) {
  DoublingStats const d = doubling_stats(a, kmax, caps.work);
  Json j;
  j["size"] = a.size();
  j["symmetric"] = d.symmetric;
  j["has_identity"] = d.has_identity;
  j["profile"] = size_profile(d.profile);
  j["tripling"] = mpq_string(d.tripling);
  j["tripling_decimal"] = decimal_string(d.tripling);
  if (kmax >= 3) {
    RuzsaCheck const r = ruzsa_check(a, kmax, caps.work);
    j["ruzsa_holds"] = r.holds;
    if (!r.holds) j["ruzsa_failing_k"] = r.failing_k;
  }
  return j;
}

int run_growth(std::string const& in, unsigned kmax, Globals const& g, std::ostream& out, std::ostream& err) {
  Caps const caps = resolve_caps(g, err);
  AnySet const set = read_set_file(in);
  Json result;
  if (auto const* s = std::get_if<Sl2Set>(&set)) {
    result = group_growth(*s, kmax, caps);
    result["generates"] = generates_sl2(*s, caps.group);
  } else if (auto const* a = std::get_if<AffSet>(&set)) {
    result = group_growth(*a, kmax, caps);
  } else if (auto const* x = std::get_if<ScalarSet>(&set)) {
    if (x->empty()) throw Error(ErrorCode::kBadArguments, "empty set");
    result["size"] = x->size();
    result["sumset"] = product_set(*x, *x, ScalarOp::kAdd, caps.work).size();
    result["difference_set"] = product_set(*x, *x, ScalarOp::kSub, caps.work).size();
    result["product_set"] = product_set(*x, *x, ScalarOp::kMul, caps.work).size();
    result["ratio_set"] = product_set(*x, *x, ScalarOp::kDiv, caps.work).size();
  } else {
    throw Error(ErrorCode::kKindMismatch, "growth needs an SL2, AFF or SCALAR set");
  }
  Json cfg = base_config("growth", g, caps);
  cfg["in"] = in;
  cfg["kind"] = kind_name(set);
  cfg["kmax"] = kmax;
  write_output(g, envelope(cfg, result, "result"), out);
  return kExitOk;
}

GroupOp group_op(std::string const& op) {
  if (op == "mul") return GroupOp::kMul;
  if (op == "lquot") return GroupOp::kLeftQuotient;
  if (op == "rquot") return GroupOp::kRightQuotient;
  throw Error(ErrorCode::kConfig, "group operation must be mul, lquot or rquot");
}

ScalarOp scalar_op(std::string const& op) {
  if (op == "add") return ScalarOp::kAdd;
  if (op == "sub") return ScalarOp::kSub;
  if (op == "mul") return ScalarOp::kMul;
  if (op == "div") return ScalarOp::kDiv;
  throw Error(ErrorCode::kConfig, "scalar operation must be add, sub, mul or div");
}

int run_energy(std::string const& in, std::string const& with, std::string op, unsigned k, Globals const& g,
               std::ostream& out, std::ostream& err) {
  Caps const caps = resolve_caps(g, err);
  AnySet const x = read_set_file(in);
  AnySet const y = with.empty() ? x : read_set_file(with);
  if (x.index() != y.index()) throw Error(ErrorCode::kKindMismatch, "input sets have different kinds");
  if (k < 2) throw Error(ErrorCode::kBadArguments, "energy order must be at least 2");
  mpz_class e;
  if (auto const* s = std::get_if<ScalarSet>(&x)) {
    if (op.empty()) op = "add";
    e = energy(*s, std::get<ScalarSet>(y), scalar_op(op), k, caps.work);
  } else if (auto const* s = std::get_if<Sl2Set>(&x)) {
    if (op.empty()) op = "lquot";
    e = energy(*s, std::get<Sl2Set>(y), group_op(op), k, caps.work);
  } else if (auto const* s = std::get_if<AffSet>(&x)) {
    if (op.empty()) op = "lquot";
    e = energy(*s, std::get<AffSet>(y), group_op(op), k, caps.work);
  } else {
    throw Error(ErrorCode::kKindMismatch, "energy needs SCALAR, SL2 or AFF sets");
  }
  Json cfg = base_config("energy", g, caps);
  cfg["in"] = in;
  cfg["with"] = with.empty() ? in : with;
  cfg["op"] = op;
  cfg["k"] = k;
  write_output(g, envelope(cfg, Json{{"energy", mpz_string(e)}}, "result"), out);
  return kExitOk;
}

int run_incidence(std::string const& pts_path, std::string const& lines_path, Globals const& g, std::ostream& out,
                  std::ostream& err) {
  Caps const caps = resolve_caps(g, err);
  AnySet const ps = read_set_file(pts_path), ls = read_set_file(lines_path);
  auto const* pts = std::get_if<PointSet>(&ps);
  auto const* lines = std::get_if<LineSet>(&ls);
  if (!pts || !lines) throw Error(ErrorCode::kKindMismatch, "incidence needs a points file and a lines file");
  Json result;
  result["points"] = pts->size();
  result["lines"] = lines->size();
  result["incidences"] = count_incidences_lines(*pts, *lines);
  result["szemeredi_trotter_main_term"] = double_string(szemeredi_trotter_main_term(pts->size(), lines->size()));
  if (field_of(ps).is_prime()) {
    VinhResult const v = vinh_deviation(*pts, *lines);
    result["vinh"] = Json{{"deviation", mpq_string(v.deviation)},
                          {"deviation_sq", mpq_string(v.deviation_sq)},
                          {"bound_sq", mpz_string(v.bound_sq)},
                          {"holds", v.holds}};
  }
  Json cfg = base_config("incidence", g, caps);
  cfg["points"] = pts_path;
  cfg["lines"] = lines_path;
  write_output(g, envelope(cfg, result, "result"), out);
  if (result.contains("vinh") && !result["vinh"]["holds"].get<bool>()) {
    err << "violation: incidence deviation exceeds the bound\n";
    return kExitViolation;
  }
  return kExitOk;
}

int run_directions(std::string const& in, Globals const& g, std::ostream& out, std::ostream& err) {
  Caps const caps = resolve_caps(g, err);
  AnySet const set = read_set_file(in);
  auto const* pts = std::get_if<PointSet>(&set);
  if (!pts) throw Error(ErrorCode::kKindMismatch, "directions needs a points file");
  DirectionResult const d = directions(*pts);
  Json list = Json::array();
  for (Direction const& dir : d.directions) list.push_back(dir.to_string());
  Json result{{"points", pts->size()}, {"count", d.directions.size()}, {"collinear", d.collinear}, {"directions", list}};
  Json cfg = base_config("directions", g, caps);
  cfg["in"] = in;
  write_output(g, envelope(cfg, result, "result"), out);
  if (d.collinear) err << "points are collinear\n";
  return kExitOk;
}

Json bfs_json(BfsResult const& b) {
  return Json{{"diameter", b.diameter},
              {"layers", b.layers},
              {"growth", b.growth},
              {"group_order", b.group_order},
              {"generated", b.generated}};
}

int run_diameter(std::string const& in, bool cross_check, Globals const& g, std::ostream& out, std::ostream& err) {
  Caps const caps = resolve_caps(g, err);
  AnySet const set = read_set_file(in);
  BfsResult first, second;
  if (auto const* s = std::get_if<Sl2Set>(&set)) {
    first = cayley_bfs(*s, caps.group);
    if (cross_check) second = cayley_bfs_layered(*s, caps.group);
  } else if (auto const* a = std::get_if<AffSet>(&set)) {
    first = cayley_bfs(*a, caps.group);
    if (cross_check) second = cayley_bfs_layered(*a, caps.group);
  } else {
    throw Error(ErrorCode::kKindMismatch, "diameter needs SL2 or AFF generators");
  }
  Json result = bfs_json(first);
  bool agree = true;
  if (cross_check) {
    agree = first.layers == second.layers && first.diameter == second.diameter;
    result["cross_check_agrees"] = agree;
  }
  Json cfg = base_config("diameter", g, caps);
  cfg["in"] = in;
  cfg["cross_check"] = cross_check;
  write_output(g, envelope(cfg, result, "result"), out);
  if (!first.generated) err << "generators do not generate the group\n";
  if (!agree) {
    err << "violation: the two searches disagree\n";
    return kExitViolation;
  }
  return kExitOk;
}

}  // namespace

int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact sum-product and growth computations"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  g.threads = default_threads();
  app.add_option("--seed", g.seed, "seed for all randomness");
  app.add_option("--threads", g.threads, "worker threads (default $SUMPROD_THREADS or 1)")->check(CLI::PositiveNumber);
  app.add_option("--group-cap", g.group_cap, "override the group-order cap");
  app.add_option("--work-cap", g.work_cap, "override the product-work cap");
  app.add_option("--out", g.out, "write the report here instead of stdout");
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  SuiteFlags verify_flags, scan_flags;
  auto add_suite_flags = [](CLI::App* sub, SuiteFlags& f) {
    sub->add_option("--suite", f.suite, "core, scan, all or none");
    sub->add_option("--claims", f.claims, "claim ids")->delimiter(',');
    sub->add_option("--p", f.primes, "primes (0 for the rationals)")->delimiter(',');
    sub->add_option("--trials", f.trials, "trials per claim and prime");
    sub->add_option("--config", f.config_path, "JSON suite config");
  };
  CLI::App* verify = app.add_subcommand("verify", "run exact-constant claims");
  add_suite_flags(verify, verify_flags);
  CLI::App* scan = app.add_subcommand("scan", "run scaling reports and emit CSV");
  add_suite_flags(scan, scan_flags);

  std::string in, with, op, lines_path;
  unsigned kmax = 6, k = 2;
  bool cross_check = false;
  CLI::App* growth = app.add_subcommand("growth", "doubling profile of a set");
  growth->add_option("--in", in, "input set")->required();
  growth->add_option("--kmax", kmax, "largest power")->check(CLI::Range(1u, 12u));
  CLI::App* energy_cmd = app.add_subcommand("energy", "multiplicative or additive energy");
  energy_cmd->add_option("--in", in, "first set")->required();
  energy_cmd->add_option("--with", with, "second set (default: the first)");
  energy_cmd->add_option("--op", op, "mul, lquot, rquot for groups; add, sub, mul, div for scalars");
  energy_cmd->add_option("--k", k, "energy order");
  CLI::App* incidence = app.add_subcommand("incidence", "point-line incidences");
  incidence->add_option("--points", in, "points file")->required();
  incidence->add_option("--lines", lines_path, "lines file")->required();
  CLI::App* dirs = app.add_subcommand("directions", "directions determined by a point set");
  dirs->add_option("--in", in, "points file")->required();
  CLI::App* diam = app.add_subcommand("diameter", "Cayley graph search from the identity");
  diam->add_option("--in", in, "generators file")->required();
  diam->add_flag("--cross-check", cross_check, "also run the layered search and compare");

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (CLI::ParseError const& e) {
    std::ostringstream o, d;
    int const code = app.exit(e, o, d);
    out << o.str();
    err << d.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) return run_verify(verify_flags, g, *verify, out, err);
    if (*scan) return run_scan(scan_flags, g, *scan, out, err);
    if (*growth) return run_growth(in, kmax, g, out, err);
    if (*energy_cmd) return run_energy(in, with, op, k, g, out, err);
    if (*incidence) return run_incidence(in, lines_path, g, out, err);
    if (*dirs) return run_directions(in, g, out, err);
    if (*diam) return run_diameter(in, cross_check, g, out, err);
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (std::exception const& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sumprod::cli
