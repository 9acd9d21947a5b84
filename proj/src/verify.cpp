#include "parabola/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "parabola/bounds.hpp"
#include "parabola/char_sums.hpp"
#include "parabola/errors.hpp"
#include "parabola/point_sets.hpp"
#include "parabola/projections.hpp"
#include "parabola/projective.hpp"
#include "parabola/reference.hpp"

namespace parabola {

using json = nlohmann::ordered_json;

namespace {

constexpr std::uint64_t kNaivePvMaxP = 199;
constexpr std::uint64_t kReversalMapMaxP = 31;

json poly_json(const QuadraticPoly& f) {
  return {{"alpha", f.alpha().value()}, {"beta", f.beta().value()}, {"gamma", f.gamma().value()}};
}

json locus(std::uint64_t p, const QuadraticPoly& f) { return {{"p", p}, {"f", poly_json(f)}}; }

void fail(CheckOutcome& out, json where) {
  if (!out.ok) return;  // keep the first locus
  out.ok = false;
  out.failure = std::move(where);
}

void check_shift(const PrimeModulus& m, CheckOutcome& out) {
  for (const auto& f : sweep_grid(m)) {
    const ShiftCheck r = verify_shift(m, f, Exec::serial);
    out.cases += r.cases;
    if (!r.ok) {
      json w = locus(m.p(), f);
      w["d"] = r.failure->d.value();
      w["b"] = r.failure->b.value();
      w["expected"] = r.failure->expected;
      w["actual"] = r.failure->actual;
      fail(out, std::move(w));
    }
  }
}

void check_interval(const PrimeModulus& m, CheckOutcome& out) {
  const Enclosure upper = sqrt_p_ln_p(m.p());
  const Enclosure lower = sqrt_p_over_two_pi(m.p());
  for (const auto& f : sweep_grid(m)) {
    const auto tables = projection_all(build_parabola_set(m, f, Variant::lt), Exec::serial);
    for (std::uint64_t d = 1; d < m.p(); ++d) {
      ++out.cases;
      const ImageInterval ii = image_interval(tables[d]);
      const auto len = static_cast<double>(ii.length());
      if (!ii.contiguous || !certainly_ge(len, lower) || !certainly_le(len, upper)) {
        json w = locus(m.p(), f);
        w["d"] = d;
        w["min"] = ii.min;
        w["max"] = ii.max;
        w["contiguous"] = ii.contiguous;
        fail(out, std::move(w));
      }
    }
  }
}

void check_step(const PrimeModulus& m, CheckOutcome& out) {
  for (const auto& f : sweep_grid(m)) {
    const auto t = projection(build_parabola_set(m, f, Variant::lt), Direction::slope(Elem{1}));
    const std::uint64_t p = m.p();
    for (std::uint64_t b = 0; b < p; ++b) {
      ++out.cases;
      const std::int64_t diff = t.counts[(b + 1) % p] - t.counts[b];
      const int step = projection_step(m, f, Elem{b});
      if (diff != step) {
        json w = locus(p, f);
        w["b"] = b;
        w["difference"] = diff;
        w["formula"] = step;
        fail(out, std::move(w));
      }
    }
  }
}

void check_size(const PrimeModulus& m, CheckOutcome& out) {
  for (const auto& f : sweep_grid(m)) {
    ++out.cases;
    const SizeReport r = verify_size_theorem(m, f);
    // gamma of the beta = 0 normal form: gamma - beta^2 / (4 alpha)
    const Elem normal_gamma =
        m.sub(f.gamma(), m.div(m.mul(f.beta(), f.beta()), m.mul(Elem{4}, f.alpha())));
    const bool exact_case = normal_gamma.value() == 0 && m.p() % 4 == 1;
    std::optional<std::int64_t> decomposed;
    if (f.beta().value() == 0) decomposed = size_via_decomposition(m, f);
    const bool ok = r.divisible && r.within_bound && (!exact_case || r.size == r.binomial) &&
                    (!decomposed || *decomposed == r.size);
    if (!ok) {
      json w = locus(m.p(), f);
      w["size"] = r.size;
      w["divisible"] = r.divisible;
      w["within_bound"] = r.within_bound;
      if (decomposed) w["decomposition"] = *decomposed;
      fail(out, std::move(w));
    }
  }
}

void check_lebesgue(const PrimeModulus& m, CheckOutcome& out) {
  const LebesgueData d = lebesgue_data(m);
  out.cases = 2;
  if (!verify_lebesgue_identity(d) || !verify_lebesgue_corollary(d)) {
    const auto formula = lebesgue_formula(d.p, d.n);
    fail(out, {{"p", d.p},
               {"case", to_string(d.which)},
               {"n", d.n},
               {"square_nu_sum", d.square_nu_sum},
               {"formula", formula ? json(*formula) : json(nullptr)}});
  }
}

void check_pv(const PrimeModulus& m, CheckOutcome& out) {
  const CharSumProfile prof = char_sum_profile(m);
  out.cases = 1;
  const bool bound_ok = verify_polya_vinogradov(m, prof);
  std::optional<std::int64_t> naive;
  if (m.p() <= kNaivePvMaxP) {
    ++out.cases;
    naive = reference::max_abs_interval_naive(m);
  }
  if (!bound_ok || (naive && *naive != prof.max_abs_interval)) {
    json w = {{"p", m.p()}, {"max_abs_interval", prof.max_abs_interval}};
    if (naive) w["naive"] = *naive;
    fail(out, std::move(w));
  }
}

void check_csikvari(const PrimeModulus& m, CheckOutcome& out) {
  out.cases = 1;
  try {
    (void)csikvari_witness(m);
  } catch (const BoundViolated& e) {
    fail(out, {{"p", m.p()}, {"error", e.what()}});
  }
}

void check_jacobsthal(const PrimeModulus& m, CheckOutcome& out) {
  const auto p = static_cast<std::int64_t>(m.p());
  const auto q = m.squares();
  const auto n = m.nonsquares();
  out.cases = 2;
  const std::int64_t cq = consecutive_pairs(m, q);
  const std::int64_t cn = consecutive_pairs(m, n);
  if (cq != (p - 3) / 4 || cn != (p - 1) / 4) {
    fail(out, {{"p", p}, {"squares", cq}, {"nonsquares", cn}});
  }
  for (const auto& f : sweep_grid(m)) {
    ++out.cases;
    if (!verify_quadratic_image_pairs(m, f)) {
      json w = locus(m.p(), f);
      w["image_pairs"] = consecutive_pairs(f.image_mask(m));
      fail(out, std::move(w));
    }
  }
}

void check_diagonal(const PrimeModulus& m, CheckOutcome& out) {
  out.cases = 1;
  const auto special = special_directions(build_diagonal_set(m), Exec::serial);
  const std::vector<Direction> expected{Direction::slope(Elem{0}), Direction::slope(Elem{1}),
                                        Direction::infinity()};
  if (special != expected) {
    json dirs = json::array();
    for (const auto& d : special) dirs.push_back(d.to_string());
    fail(out, {{"p", m.p()}, {"special_directions", dirs}});
  }
}

void check_order_reversal(const PrimeModulus& m, CheckOutcome& out) {
  out.cases = 1;
  if (!verify_order_reversal_lemma(m)) fail(out, {{"p", m.p()}, {"lemma", false}});
  if (m.p() > kReversalMapMaxP) return;

  const auto p = static_cast<std::uint32_t>(m.p());
  AffineMap flip;  // (X, Y) -> (X, -Y-1)
  flip.a = {1, 0, 0, p - 1};
  flip.t = {0, p - 1};
  for (const auto& f : sweep_grid(m)) {
    ++out.cases;
    const QuadraticPoly g(m.neg(f.alpha()), m.neg(f.beta()), m.order_reversal(f.gamma()));
    const auto image = apply_affine(build_parabola_set(m, f, Variant::lt).to_bitset(), flip);
    if (!(image == build_parabola_set(m, g, Variant::gt).to_bitset())) {
      fail(out, locus(m.p(), f));
    }
  }
}

void check_reflection(const PrimeModulus& m, CheckOutcome& out) {
  const Projectivity r = Projectivity::reflection(m);
  for (const auto& f : sweep_grid(m)) {
    if (f.beta().value() != 0) continue;
    for (Variant v : {Variant::lt, Variant::le, Variant::gt, Variant::ge}) {
      ++out.cases;
      const auto s = build_parabola_set(m, f, v).to_bitset();
      const auto img = apply_projectivity(m, s, r);
      if (!img || !(*img == s)) {
        json w = locus(m.p(), f);
        w["variant"] = to_string(v);
        fail(out, std::move(w));
      }
    }
  }
}

json observe(const PrimeModulus& m, const VerifyConfig& cfg) {
  json o;
  json structured = json::array();
  for (Elem alpha : {Elem{1}, m.least_nonsquare()}) {
    const QuadraticPoly f(alpha, Elem{0}, Elem{0});
    const auto stab = stabilizer_structured(m, build_parabola_set(m, f, Variant::lt), Exec::serial);
    structured.push_back({{"f", poly_json(f)}, {"order", stab.size()}});
  }
  o["structured_stabilizer"] = std::move(structured);
  if (m.p() <= cfg.brute_observe_max_p) {
    SearchOptions so;
    so.exec = Exec::serial;
    so.max_p = cfg.brute_observe_max_p;
    so.seed = cfg.seed;
    const QuadraticPoly f(Elem{1}, Elem{0}, Elem{0});
    const auto stab = stabilizer_bruteforce(m, build_parabola_set(m, f, Variant::lt).to_bitset(), so);
    o["bruteforce_stabilizer"] = {{"f", poly_json(f)}, {"order", stab.size()}};
  }
  const auto cls = classify_family(m);
  o["class_count"] = {{"invariant", cls.class_count}, {"expected", cls.expected_count}};
  return o;
}

}  // namespace

const char* to_string(Check c) {
  switch (c) {
    case Check::shift: return "shift";
    case Check::interval: return "interval";
    case Check::step: return "step";
    case Check::size: return "size";
    case Check::lebesgue: return "lebesgue";
    case Check::pv: return "pv";
    case Check::csikvari: return "csikvari";
    case Check::jacobsthal: return "jacobsthal";
    case Check::diagonal_special: return "diagonal-special";
    case Check::order_reversal: return "order-reversal";
    case Check::reflection: return "reflection";
  }
  return "?";
}

std::vector<Check> all_checks() {
  return {Check::shift,    Check::interval, Check::step,       Check::size,
          Check::lebesgue, Check::pv,       Check::csikvari,   Check::jacobsthal,
          Check::diagonal_special, Check::order_reversal, Check::reflection};
}

Check parse_check(const std::string& name) {
  for (Check c : all_checks()) {
    if (name == to_string(c)) return c;
  }
  throw std::invalid_argument("unknown check '" + name + "'");
}

std::vector<std::uint64_t> parse_prime_spec(const std::string& spec) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(spec);
  std::string item;
  auto number = [](const std::string& s) -> std::uint64_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad prime specification '" + s + "'");
    }
    return std::stoull(s);
  };
  while (std::getline(ss, item, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      const std::uint64_t p = number(item);
      if (!is_odd_prime(p)) throw NotOddPrime(std::to_string(p) + " is not an odd prime");
      out.push_back(p);
      continue;
    }
    const std::uint64_t lo = number(item.substr(0, dots));
    const std::uint64_t hi = number(item.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty prime range '" + item + "'");
    for (std::uint64_t n = lo; n <= hi; ++n) {
      if (is_odd_prime(n)) out.push_back(n);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw std::invalid_argument("no odd primes in '" + spec + "'");
  return out;
}

std::vector<std::uint64_t> gamma_grid(std::uint64_t p) {
  std::vector<std::uint64_t> g;
  if (p <= 50) {
    for (std::uint64_t x = 0; x < p; ++x) g.push_back(x);
    return g;
  }
  g = {0, 1, (p - 1) / 2};
  for (std::uint64_t i = 1; i <= 13; ++i) {
    g.push_back(static_cast<std::uint64_t>(std::llround(static_cast<double>(i * (p - 1)) / 13.0)));
  }
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

std::vector<QuadraticPoly> sweep_grid(const PrimeModulus& m) {
  std::vector<QuadraticPoly> out;
  for (Elem alpha : {Elem{1}, m.least_nonsquare()}) {
    for (std::uint64_t beta : {0, 1}) {
      for (std::uint64_t gamma : gamma_grid(m.p())) out.emplace_back(alpha, Elem{beta}, Elem{gamma});
    }
  }
  return out;
}

CheckOutcome run_check(const PrimeModulus& m, Check c, const VerifyConfig&) {
  CheckOutcome out;
  out.check = c;
  out.failure = nullptr;
  switch (c) {
    case Check::shift: check_shift(m, out); break;
    case Check::interval: check_interval(m, out); break;
    case Check::step: check_step(m, out); break;
    case Check::size: check_size(m, out); break;
    case Check::lebesgue: check_lebesgue(m, out); break;
    case Check::pv: check_pv(m, out); break;
    case Check::csikvari: check_csikvari(m, out); break;
    case Check::jacobsthal: check_jacobsthal(m, out); break;
    case Check::diagonal_special: check_diagonal(m, out); break;
    case Check::order_reversal: check_order_reversal(m, out); break;
    case Check::reflection: check_reflection(m, out); break;
  }
  return out;
}

bool VerifyReport::ok() const {
  for (const auto& pr : primes) {
    for (const auto& o : pr.outcomes) {
      if (!o.ok) return false;
    }
  }
  return true;
}

VerifyReport run_verify(const VerifyConfig& cfg) {
  set_parallel_width(cfg.threads);
  VerifyReport rep;
  rep.config = cfg;
  rep.primes.resize(cfg.primes.size());
  const auto n = static_cast<std::int64_t>(cfg.primes.size());

  // Large primes first so the dynamic schedule balances; results land by index.
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = n - 1; i >= 0; --i) {
    const auto idx = static_cast<std::size_t>(i);
    const PrimeModulus m(cfg.primes[idx]);
    PrimeReport pr;
    pr.p = m.p();
    for (Check c : cfg.checks) pr.outcomes.push_back(run_check(m, c, cfg));
    pr.observations = cfg.observations ? observe(m, cfg) : json(nullptr);
    rep.primes[idx] = std::move(pr);
  }
  return rep;
}

json to_json(const VerifyReport& r) {
  json j;
  j["schema"] = kReportSchema;
  j["command"] = "verify";

  json cfg;
  cfg["primes"] = r.config.primes;
  json checks = json::array();
  for (Check c : r.config.checks) checks.push_back(to_string(c));
  cfg["checks"] = std::move(checks);
  cfg["observations"] = r.config.observations;
  cfg["seed"] = r.config.seed;
  cfg["threads"] = r.config.threads;
  cfg["grid"] = "alpha in {1, least nonsquare}, beta in {0,1}, gamma all (p<=50) or 16-point sample";
  cfg["bound_rounding"] = "outward enclosure; a bound check passes only when certain";
  j["config"] = std::move(cfg);

  json results = json::array();
  json failures = json::array();
  std::int64_t total_cases = 0;
  for (const auto& pr : r.primes) {
    json pj;
    pj["p"] = pr.p;
    const Enclosure hi = sqrt_p_ln_p(pr.p);
    const Enclosure lo = sqrt_p_over_two_pi(pr.p);
    pj["bounds"] = {{"sqrt_p_ln_p", {{"lo", format_bound(hi.lo)}, {"hi", format_bound(hi.hi)}}},
                    {"sqrt_p_over_2pi", {{"lo", format_bound(lo.lo)}, {"hi", format_bound(lo.hi)}}}};
    json cj;
    for (const auto& o : pr.outcomes) {
      total_cases += o.cases;
      json one = {{"ok", o.ok}, {"cases", o.cases}};
      if (!o.ok) {
        one["failure"] = o.failure;
        failures.push_back({{"check", to_string(o.check)}, {"locus", o.failure}});
      }
      cj[to_string(o.check)] = std::move(one);
    }
    pj["checks"] = std::move(cj);
    if (!pr.observations.is_null()) pj["observations"] = pr.observations;
    results.push_back(std::move(pj));
  }
  j["results"] = std::move(results);
  j["summary"] = {{"ok", r.ok()},
                  {"primes", r.primes.size()},
                  {"cases", total_cases},
                  {"failures", std::move(failures)}};
  return j;
}

std::string to_text(const json& report) {
  std::ostringstream os;
  for (const auto& pr : report.at("results")) {
    os << "p=" << pr.at("p").get<std::uint64_t>();
    for (const auto& [name, c] : pr.at("checks").items()) {
      os << "  " << name << '=' << (c.at("ok").get<bool>() ? "ok" : "FAIL");
    }
    os << '\n';
  }
  const auto& s = report.at("summary");
  os << (s.at("ok").get<bool>() ? "PASS" : "FAIL") << ": " << s.at("primes").get<std::size_t>()
     << " primes, " << s.at("cases").get<std::int64_t>() << " cases, "
     << s.at("failures").size() << " failures\n";
  return os.str();
}

}  // namespace parabola
