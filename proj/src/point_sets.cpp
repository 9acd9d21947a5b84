#include "parabola/point_sets.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>

#include "parabola/bounds.hpp"
#include "parabola/errors.hpp"

namespace parabola {

const char* to_string(Variant v) {
  switch (v) {
    case Variant::lt: return "lt";
    case Variant::le: return "le";
    case Variant::gt: return "gt";
    case Variant::ge: return "ge";
  }
  return "?";
}

Variant parse_variant(const std::string& s) {
  if (s == "lt") return Variant::lt;
  if (s == "le") return Variant::le;
  if (s == "gt") return Variant::gt;
  if (s == "ge") return Variant::ge;
  throw std::invalid_argument("unknown variant '" + s + "' (expected lt, le, gt or ge)");
}

ColumnIntervalSet::ColumnIntervalSet(std::uint32_t p, std::vector<std::uint32_t> lo,
                                     std::vector<std::uint32_t> hi,
                                     std::optional<Construction> how)
    : p_(p), lo_(std::move(lo)), hi_(std::move(hi)), how_(std::move(how)) {
  if (lo_.size() != p_ || hi_.size() != p_) {
    throw std::invalid_argument("column arrays must have length p");
  }
  for (std::uint32_t x = 0; x < p_; ++x) {
    if (lo_[x] > hi_[x] || hi_[x] > p_) {
      throw std::invalid_argument("column " + std::to_string(x) + " is not an interval in [0, p]");
    }
  }
}

std::int64_t ColumnIntervalSet::size() const {
  std::int64_t n = 0;
  for (std::uint32_t x = 0; x < p_; ++x) n += hi_[x] - lo_[x];
  return n;
}

BitPointSet ColumnIntervalSet::to_bitset() const {
  BitPointSet out(p_);
  for (std::uint32_t x = 0; x < p_; ++x) {
    for (std::uint32_t y = lo_[x]; y < hi_[x]; ++y) out.insert(x, y);
  }
  return out;
}

BitPointSet ColumnIntervalSet::complement() const { return to_bitset().complement(); }

BitPointSet::BitPointSet(std::uint32_t p)
    : p_(p), words_((static_cast<std::size_t>(p) * p + 63) / 64, 0) {}

std::int64_t BitPointSet::size() const {
  std::int64_t n = 0;
  for (std::uint64_t w : words_) n += std::popcount(w);
  return n;
}

BitPointSet BitPointSet::complement() const {
  BitPointSet out(p_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  const std::size_t tail = (static_cast<std::size_t>(p_) * p_) % 64;
  if (tail != 0) out.words_.back() &= (std::uint64_t{1} << tail) - 1;
  return out;
}

std::vector<AffinePoint> BitPointSet::points() const {
  std::vector<AffinePoint> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint32_t x = 0; x < p_; ++x) {
    for (std::uint32_t y = 0; y < p_; ++y) {
      if (contains(x, y)) out.push_back({x, y});
    }
  }
  return out;
}

std::optional<ColumnIntervalSet> BitPointSet::to_column_intervals() const {
  std::vector<std::uint32_t> lo(p_, 0), hi(p_, 0);
  for (std::uint32_t x = 0; x < p_; ++x) {
    std::uint32_t y = 0;
    while (y < p_ && !contains(x, y)) ++y;
    if (y == p_) continue;
    lo[x] = y;
    while (y < p_ && contains(x, y)) ++y;
    hi[x] = y;
    for (; y < p_; ++y) {
      if (contains(x, y)) return std::nullopt;
    }
  }
  return ColumnIntervalSet(p_, std::move(lo), std::move(hi));
}

namespace {

std::uint32_t checked_prime(const PrimeModulus& m) {
  if (m.p() > kMaxPointSetPrime) {
    throw std::invalid_argument("point sets support p <= " + std::to_string(kMaxPointSetPrime));
  }
  return static_cast<std::uint32_t>(m.p());
}

}  // namespace

ColumnIntervalSet build_parabola_set(const PrimeModulus& m, const QuadraticPoly& f, Variant v) {
  const std::uint32_t p = checked_prime(m);
  std::vector<std::uint32_t> lo(p), hi(p);
  for (std::uint32_t x = 0; x < p; ++x) {
    const auto fx = static_cast<std::uint32_t>(f(m, Elem{x}).value());
    switch (v) {
      case Variant::lt: lo[x] = 0; hi[x] = fx; break;
      case Variant::le: lo[x] = 0; hi[x] = fx + 1; break;
      case Variant::gt: lo[x] = fx + 1; hi[x] = p; break;
      case Variant::ge: lo[x] = fx; hi[x] = p; break;
    }
  }
  return ColumnIntervalSet(p, std::move(lo), std::move(hi),
                           Construction{Construction::Kind::parabola, f, v});
}

ColumnIntervalSet build_diagonal_set(const PrimeModulus& m) {
  const std::uint32_t p = checked_prime(m);
  std::vector<std::uint32_t> lo(p, 0), hi(p);
  for (std::uint32_t x = 0; x < p; ++x) hi[x] = x;
  return ColumnIntervalSet(p, std::move(lo), std::move(hi),
                           Construction{Construction::Kind::diagonal, std::nullopt, Variant::lt});
}

ColumnIntervalSet build_full_plane(const PrimeModulus& m) {
  const std::uint32_t p = checked_prime(m);
  return ColumnIntervalSet(p, std::vector<std::uint32_t>(p, 0), std::vector<std::uint32_t>(p, p));
}

Rational size_constant(std::uint64_t p) {
  if (p % 4 == 1) return {1, 1};
  if (p % 8 == 7) return {2, 1};
  return {4, 3};
}

SizeReport verify_size_theorem(const PrimeModulus& m, const QuadraticPoly& f) {
  const auto sp = static_cast<std::int64_t>(m.p());
  SizeReport r;
  r.size = build_parabola_set(m, f, Variant::lt).size();
  r.binomial = sp * (sp - 1) / 2;
  r.divisible = r.size % sp == 0;
  r.c_p = size_constant(m.p());
  // den |S - binom| <= num p sqrt(p) ln(p)
  const std::int64_t dev = std::llabs(r.size - r.binomial) * r.c_p.den;
  const Enclosure bound =
      scaled(sqrt_p_ln_p(m.p()), static_cast<std::uint64_t>(r.c_p.num) * m.p());
  r.within_bound = certainly_le(static_cast<double>(dev), bound);
  return r;
}

std::int64_t size_via_decomposition(const PrimeModulus& m, const QuadraticPoly& f) {
  if (f.beta().value() != 0) throw BetaNonzero("decomposition assumes beta = 0");
  const auto sp = static_cast<std::int64_t>(m.p());
  const auto g = static_cast<std::int64_t>(f.gamma().value());

  // Nonzero values of alpha x^2 run twice over Q or twice over N.
  const int cls = m.chi(f.alpha());
  std::int64_t square_sum = 0;
  std::int64_t wrapped = 0;
  for (std::uint64_t y = 1; y < m.p(); ++y) {
    const int c = m.chi(Elem{y});
    if (c == 1) square_sum += static_cast<std::int64_t>(y);
    if (c == cls && static_cast<std::int64_t>(y) >= sp - g) ++wrapped;
  }
  const std::int64_t class_sum = cls == 1 ? square_sum : sp * (sp - 1) / 2 - square_sum;
  return 2 * class_sum + sp * (g - 2 * wrapped);
}

nlohmann::ordered_json to_json(const ColumnIntervalSet& s) {
  nlohmann::ordered_json j;
  j["p"] = s.p();
  const auto& how = s.construction();
  if (how && how->kind == Construction::Kind::parabola && how->poly) {
    j["kind"] = "parabola";
    j["alpha"] = how->poly->alpha().value();
    j["beta"] = how->poly->beta().value();
    j["gamma"] = how->poly->gamma().value();
    j["variant"] = to_string(how->variant);
  } else if (how && how->kind == Construction::Kind::diagonal) {
    j["kind"] = "diagonal";
  } else {
    j["kind"] = "columns";
  }
  auto cols = nlohmann::ordered_json::array();
  for (std::uint32_t x = 0; x < s.p(); ++x) cols.push_back({s.lo()[x], s.hi()[x]});
  j["columns"] = std::move(cols);
  return j;
}

ColumnIntervalSet column_set_from_json(const nlohmann::ordered_json& j) {
  const auto p = j.at("p").get<std::uint64_t>();
  const PrimeModulus m(p);
  std::vector<std::uint32_t> lo, hi;
  for (const auto& c : j.at("columns")) {
    lo.push_back(c.at(0).get<std::uint32_t>());
    hi.push_back(c.at(1).get<std::uint32_t>());
  }
  ColumnIntervalSet stored(static_cast<std::uint32_t>(p), std::move(lo), std::move(hi));

  const auto kind = j.at("kind").get<std::string>();
  if (kind == "columns") return stored;
  ColumnIntervalSet rebuilt = [&] {
    if (kind == "diagonal") return build_diagonal_set(m);
    if (kind != "parabola") throw std::invalid_argument("unknown set kind '" + kind + "'");
    const QuadraticPoly f(m.elem_u(j.at("alpha").get<std::uint64_t>()),
                          m.elem_u(j.at("beta").get<std::uint64_t>()),
                          m.elem_u(j.at("gamma").get<std::uint64_t>()));
    return build_parabola_set(m, f, parse_variant(j.at("variant").get<std::string>()));
  }();
  if (!(rebuilt == stored)) {
    throw std::invalid_argument("stored columns do not match the " + kind + " construction");
  }
  return rebuilt;
}

}  // namespace parabola
