// Command-line front end: every verification is a subcommand with JSON (or
// CSV/text) output. Exit codes: 0 pass, 1 theorem-check failure, 2 usage
// error, 3 search cap exceeded.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "parabola/bounds.hpp"
#include "parabola/char_sums.hpp"
#include "parabola/errors.hpp"
#include "parabola/point_sets.hpp"
#include "parabola/projections.hpp"
#include "parabola/symmetry.hpp"
#include "parabola/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace parabola;

enum ExitCode { kPass = 0, kCheckFailed = 1, kUsage = 2, kCapExceeded = 3 };

struct SetArgs {
  std::string primes;
  std::int64_t alpha = 1;
  std::int64_t beta = 0;
  std::int64_t gamma = 0;
  std::string variant = "lt";
  bool diagonal = false;
};

struct Output {
  std::string format = "json";
  std::string path;
};

void add_set_options(CLI::App* cmd, SetArgs& a, bool with_diagonal) {
  cmd->add_option("-p,--prime", a.primes, "odd prime")->required();
  cmd->add_option("--alpha", a.alpha, "leading coefficient (reduced mod p)");
  cmd->add_option("--beta", a.beta, "linear coefficient");
  cmd->add_option("--gamma", a.gamma, "constant term");
  cmd->add_option("--variant", a.variant, "lt, le, gt or ge")
      ->check(CLI::IsMember({"lt", "le", "gt", "ge"}));
  if (with_diagonal) cmd->add_flag("--diagonal", a.diagonal, "use {(x,y) : y < x} instead");
}

void add_output_options(CLI::App* cmd, Output& o, std::vector<std::string> formats) {
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
  cmd->add_option("-o,--output", o.path, "write to file instead of stdout");
}

std::uint64_t single_prime(const std::string& spec) {
  const auto ps = parse_prime_spec(spec);
  if (ps.size() != 1) throw std::invalid_argument("expected a single prime, got '" + spec + "'");
  return ps.front();
}

QuadraticPoly make_poly(const PrimeModulus& m, const SetArgs& a) {
  return QuadraticPoly(m.elem(a.alpha), m.elem(a.beta), m.elem(a.gamma));
}

ColumnIntervalSet make_set(const PrimeModulus& m, const SetArgs& a) {
  if (a.diagonal) return build_diagonal_set(m);
  return build_parabola_set(m, make_poly(m, a), parse_variant(a.variant));
}

json poly_json(const QuadraticPoly& f) {
  return {{"alpha", f.alpha().value()}, {"beta", f.beta().value()}, {"gamma", f.gamma().value()}};
}

json set_json(const ColumnIntervalSet& s) {
  json j = to_json(s);
  j.erase("columns");
  return j;
}

void flatten_text(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten_text(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten_text(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << ": " << j.dump() << '\n';
  }
}

void emit(const Output& o, const std::string& body) {
  if (o.path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(o.path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + o.path);
  f << body;
}

void emit_json(const Output& o, const json& j) {
  if (o.format == "text") {
    std::ostringstream os;
    flatten_text(j, "", os);
    emit(o, os.str());
  } else {
    emit(o, j.dump(2) + "\n");
  }
}

int cmd_project(const SetArgs& a, const std::string& dir, const Output& o) {
  const PrimeModulus m(single_prime(a.primes));
  const auto s = make_set(m, a);
  std::vector<ProjectionTable> tables;
  if (dir == "all") {
    tables = projection_all(s);
  } else if (dir == "inf") {
    tables.push_back(projection(s, Direction::infinity()));
  } else {
    tables.push_back(projection(s, Direction::slope(m.elem(std::stoll(dir)))));
  }

  if (o.format == "csv") {
    std::string body = "d,b,count\n";
    for (const auto& t : tables) {
      for (std::size_t b = 0; b < t.counts.size(); ++b) {
        body += t.direction.to_string() + "," + std::to_string(b) + "," + std::to_string(t.counts[b]) + "\n";
      }
    }
    emit(o, body);
    return kPass;
  }
  json j;
  j["schema"] = kReportSchema;
  j["command"] = "project";
  j["set"] = set_json(s);
  json arr = json::array();
  for (const auto& t : tables) arr.push_back({{"d", t.direction.to_string()}, {"counts", t.counts}});
  j["tables"] = std::move(arr);
  emit_json(o, j);
  return kPass;
}

int cmd_size(const SetArgs& a, const Output& o) {
  const PrimeModulus m(single_prime(a.primes));
  const auto f = make_poly(m, a);
  const SizeReport r = verify_size_theorem(m, f);
  const Enclosure e = sqrt_p_ln_p(m.p());
  json j;
  j["schema"] = kReportSchema;
  j["command"] = "size";
  j["p"] = m.p();
  j["f"] = poly_json(f);
  j["size"] = r.size;
  j["binomial"] = r.binomial;
  j["divisible"] = r.divisible;
  j["within_bound"] = r.within_bound;
  j["c_p"] = {{"num", r.c_p.num}, {"den", r.c_p.den}};
  j["sqrt_p_ln_p"] = {{"lo", format_bound(e.lo)}, {"hi", format_bound(e.hi)}, {"rounding", "outward"}};
  if (f.beta().value() == 0) j["decomposition"] = size_via_decomposition(m, f);
  emit_json(o, j);
  return r.divisible && r.within_bound ? kPass : kCheckFailed;
}

int cmd_shift(const SetArgs& a, const Output& o) {
  const PrimeModulus m(single_prime(a.primes));
  const auto f = make_poly(m, a);
  const ShiftCheck r = verify_shift(m, f);
  json j;
  j["schema"] = kReportSchema;
  j["command"] = "shift-check";
  j["p"] = m.p();
  j["f"] = poly_json(f);
  j["ok"] = r.ok;
  j["cases"] = r.cases;
  json offsets = json::array();
  for (std::uint64_t d = 1; d < m.p(); ++d) {
    offsets.push_back({{"d", d}, {"offset", shift_offset(m, f, Elem{d}).value()}});
  }
  j["offsets"] = std::move(offsets);
  if (r.failure) {
    j["failure"] = {{"d", r.failure->d.value()}, {"b", r.failure->b.value()},
                    {"expected", r.failure->expected}, {"actual", r.failure->actual}};
  }
  emit_json(o, j);
  return r.ok ? kPass : kCheckFailed;
}

int cmd_special(const SetArgs& a, const Output& o) {
  const PrimeModulus m(single_prime(a.primes));
  const auto s = make_set(m, a);
  json j;
  j["schema"] = kReportSchema;
  j["command"] = "special-dirs";
  j["set"] = set_json(s);
  j["size"] = s.size();
  json special = json::array();
  json dirs = json::array();
  for (const auto& t : projection_all(s)) {
    const auto c = classify_direction(t, s.size());
    if (c.special) special.push_back(t.direction.to_string());
    const auto ii = image_interval(t);
    dirs.push_back({{"d", t.direction.to_string()},
                    {"kind", c.special ? "special" : "equidistributed"},
                    {"min", ii.min},
                    {"max", ii.max},
                    {"contiguous", ii.contiguous}});
  }
  j["special"] = std::move(special);
  j["directions"] = std::move(dirs);
  emit_json(o, j);
  return kPass;
}

int cmd_charsum(const std::string& primes, bool with_prefix, const Output& o) {
  json arr = json::array();
  bool ok = true;
  for (std::uint64_t p : parse_prime_spec(primes)) {
    const PrimeModulus m(p);
    const auto prof = char_sum_profile(m);
    const Enclosure e = sqrt_p_ln_p(p);
    const bool pv = verify_polya_vinogradov(m, prof);
    json pj = {{"p", p},
               {"max_abs_interval", prof.max_abs_interval},
               {"sqrt_p_ln_p", {{"lo", format_bound(e.lo)}, {"hi", format_bound(e.hi)}}},
               {"polya_vinogradov_ok", pv}};
    try {
      const auto w = csikvari_witness(m);
      pj["csikvari"] = {{"b", w.b.value()}, {"sum", w.sum}, {"ok", true}};
    } catch (const BoundViolated&) {
      pj["csikvari"] = {{"ok", false}};
      ok = false;
    }
    if (with_prefix) pj["prefix"] = prof.prefix;
    ok = ok && pv;
    arr.push_back(std::move(pj));
  }
  emit_json(o, {{"schema", kReportSchema}, {"command", "charsum"}, {"results", arr}, {"ok", ok}});
  return ok ? kPass : kCheckFailed;
}

int cmd_lebesgue(const std::string& primes, const Output& o) {
  json arr = json::array();
  bool ok = true;
  for (std::uint64_t p : parse_prime_spec(primes)) {
    const auto d = lebesgue_data(PrimeModulus(p));
    const auto formula = lebesgue_formula(p, d.n);
    const bool id = verify_lebesgue_identity(d);
    const bool cor = verify_lebesgue_corollary(d);
    ok = ok && id && cor;
    arr.push_back({{"p", p},
                   {"case", to_string(d.which)},
                   {"n", d.n},
                   {"square_nu_sum", d.square_nu_sum},
                   {"formula", formula ? json(*formula) : json(nullptr)},
                   {"identity_ok", id},
                   {"corollary_ok", cor}});
  }
  emit_json(o, {{"schema", kReportSchema}, {"command", "lebesgue"}, {"results", arr}, {"ok", ok}});
  return ok ? kPass : kCheckFailed;
}

int cmd_stabilizer(const SetArgs& a, const std::string& method, std::uint64_t seed, const Output& o) {
  const PrimeModulus m(single_prime(a.primes));
  const auto s = make_set(m, a);
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<Projectivity> stab;
  if (method == "brute") {
    SearchOptions so = SearchOptions::pgl_defaults();
    so.seed = seed;
    stab = stabilizer_bruteforce(m, s.to_bitset(), so);
  } else {
    stab = stabilizer_structured(m, s);
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  json j;
  j["schema"] = kReportSchema;
  j["command"] = "stabilizer";
  j["p"] = m.p();
  if (a.diagonal) {
    j["f"] = nullptr;
  } else {
    j["f"] = poly_json(make_poly(m, a));
  }
  j["variant"] = a.diagonal ? "diagonal" : a.variant;
  j["method"] = method;
  j["stabilizer_order"] = stab.size();
  json elems = json::array();
  for (const auto& g : stab) elems.push_back(to_json(g));
  j["stabilizer_elements"] = std::move(elems);
  j["elapsed_ms"] = ms.count();
  emit_json(o, j);
  return kPass;
}

int cmd_classify(const std::string& primes, bool oracle, const Output& o) {
  const PrimeModulus m(single_prime(primes));
  ClassifyOptions opts;
  opts.run_oracle = oracle;
  json j{{"schema", kReportSchema}, {"command", "classify"}};
  j.update(to_json(classify_family(m, opts)));
  emit_json(o, j);
  return kPass;
}

int cmd_verify(const std::string& primes, bool all, const std::vector<std::string>& names, bool observe,
               int threads, std::uint64_t seed, const Output& o) {
  VerifyConfig cfg;
  cfg.primes = parse_prime_spec(primes);
  if (all || names.empty()) {
    cfg.checks = all_checks();
  } else {
    for (const auto& n : names) cfg.checks.push_back(parse_check(n));
  }
  cfg.observations = all || observe;
  cfg.threads = threads;
  cfg.seed = seed;
  const VerifyReport rep = run_verify(cfg);
  const json j = to_json(rep);
  if (o.format == "text") {
    emit(o, to_text(j));
  } else {
    emit(o, j.dump(2) + "\n");
  }
  if (!rep.ok()) {
    for (const auto& f : j.at("summary").at("failures")) std::cerr << "FAILED " << f.dump() << '\n';
  }
  return rep.ok() ? kPass : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Point sets below parabolas in AG(2,p): constructions and exact checks"};
  app.require_subcommand(1);

  SetArgs set;
  Output out;
  std::string direction = "all";
  std::string method = "structured";
  std::string primes;
  std::vector<std::string> checks;
  bool all = false, observe = false, oracle = false, prefix = false;
  int threads = 0;
  std::uint64_t seed = kDefaultProbeSeed;

  auto* project = app.add_subcommand("project", "projection tables pr_{S,d}");
  add_set_options(project, set, true);
  project->add_option("-d,--direction", direction, "slope, 'inf' or 'all'");
  Output project_out{"csv", ""};
  add_output_options(project, project_out, {"csv", "json", "text"});

  auto* size = app.add_subcommand("size", "set size, divisibility and deviation bound");
  add_set_options(size, set, false);
  add_output_options(size, out, {"json", "text"});

  auto* shift = app.add_subcommand("shift-check", "shift identity between directions");
  add_set_options(shift, set, false);
  add_output_options(shift, out, {"json", "text"});

  auto* special = app.add_subcommand("special-dirs", "special and equidistributed directions");
  add_set_options(special, set, true);
  add_output_options(special, out, {"json", "text"});

  auto* charsum = app.add_subcommand("charsum", "character sum bounds");
  charsum->add_option("-p,--prime", primes, "prime, list or range")->required();
  charsum->add_flag("--prefix", prefix, "include the prefix sums");
  add_output_options(charsum, out, {"json", "text"});

  auto* lebesgue = app.add_subcommand("lebesgue", "sum of squares identity and bounds");
  lebesgue->add_option("-p,--prime", primes, "prime, list or range")->required();
  add_output_options(lebesgue, out, {"json", "text"});

  auto* stabilizer = app.add_subcommand("stabilizer", "setwise stabilizer in PGL(3,p)");
  add_set_options(stabilizer, set, true);
  stabilizer->add_option("--method", method, "brute or structured")
      ->check(CLI::IsMember({"brute", "structured"}));
  stabilizer->add_option("--seed", seed, "probe selection seed");
  add_output_options(stabilizer, out, {"json", "text"});

  auto* classify = app.add_subcommand("classify", "isomorphism classes of the parabola family");
  classify->add_option("-p,--prime", primes, "odd prime")->required();
  classify->add_flag("--oracle", oracle, "also run the exhaustive AGL(2,p) oracle");
  add_output_options(classify, out, {"json", "text"});

  auto* verify = app.add_subcommand("verify", "run theorem checks over a prime range");
  verify->add_option("-p,--prime", primes, "prime, list or range, e.g. 3..199")->required();
  verify->add_flag("--all", all, "every check plus observations");
  verify->add_option("--check", checks, "named check (repeatable)");
  verify->add_flag("--observe", observe, "include stabilizer and class-count observations");
  verify->add_option("--threads", threads, "parallel width (0 = runtime default)");
  verify->add_option("--seed", seed, "probe selection seed");
  add_output_options(verify, out, {"json", "text"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  }

  try {
    if (*project) return cmd_project(set, direction, project_out);
    if (*size) return cmd_size(set, out);
    if (*shift) return cmd_shift(set, out);
    if (*special) return cmd_special(set, out);
    if (*charsum) return cmd_charsum(primes, prefix, out);
    if (*lebesgue) return cmd_lebesgue(primes, out);
    if (*stabilizer) return cmd_stabilizer(set, method, seed, out);
    if (*classify) return cmd_classify(primes, oracle, out);
    if (*verify) return cmd_verify(primes, all, checks, observe, threads, seed, out);
  } catch (const TooLarge& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
