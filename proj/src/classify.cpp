#include <algorithm>
#include <map>
#include <numeric>

#include "parabola/errors.hpp"
#include "parabola/symmetry.hpp"

namespace parabola {

const char* to_string(CoefficientClass c) {
  return c == CoefficientClass::square ? "square" : "nonsquare";
}

RecoveredParameters recover_parameters(const PrimeModulus& m, const ColumnIntervalSet& s) {
  const std::uint32_t p = s.p();
  const auto counts = projection(s, Direction::infinity()).counts;

  RecoveredParameters r;
  const bool has_zero = std::find(counts.begin(), counts.end(), 0) != counts.end();
  r.variant = has_zero ? Variant::lt : Variant::le;
  const std::int64_t offset = has_zero ? 0 : 1;

  // Values of f, one per column.
  std::vector<std::int64_t> multiplicity(p, 0);
  for (std::int64_t c : counts) {
    const std::int64_t v = c - offset;
    if (v < 0 || v >= static_cast<std::int64_t>(p)) {
      throw NotAParabolaSet("column count " + std::to_string(c) + " is out of range");
    }
    ++multiplicity[static_cast<std::size_t>(v)];
  }
  std::optional<std::uint32_t> singleton;
  for (std::uint32_t v = 0; v < p; ++v) {
    if (multiplicity[v] == 1) {
      if (singleton) throw NotAParabolaSet("more than one count occurs exactly once");
      singleton = v;
    }
  }
  if (!singleton) throw NotAParabolaSet("no count occurs exactly once");
  r.gamma = Elem{*singleton};

  // The image minus gamma must be Q ∪ {0} or N ∪ {0}.
  int cls = 0;
  for (std::uint32_t v = 0; v < p && cls == 0; ++v) {
    if (v != *singleton && multiplicity[v] != 0) cls = m.chi(m.sub(Elem{v}, r.gamma));
  }
  for (std::uint32_t v = 0; v < p; ++v) {
    if (v == *singleton) continue;
    const bool present = multiplicity[v] != 0;
    if (present && multiplicity[v] != 2) throw NotAParabolaSet("image value hit other than twice");
    if ((m.chi(m.sub(Elem{v}, r.gamma)) == cls) != present) {
      throw NotAParabolaSet("image is not a translate of Q or N with 0");
    }
  }
  r.coefficient = cls == 1 ? CoefficientClass::square : CoefficientClass::nonsquare;
  return r;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<std::size_t> first_appearance_labels(const std::vector<std::size_t>& keys) {
  std::map<std::size_t, std::size_t> seen;
  std::vector<std::size_t> out;
  for (std::size_t k : keys) out.push_back(seen.emplace(k, seen.size()).first->second);
  return out;
}

}  // namespace

ClassificationReport classify_family(const PrimeModulus& m, const ClassifyOptions& opts) {
  const auto p = static_cast<std::uint32_t>(m.p());
  ClassificationReport rep;
  rep.p = p;
  rep.nonsquare = m.least_nonsquare();
  rep.expected_count = 3 * static_cast<std::size_t>(p) + 1;

  std::vector<ColumnIntervalSet> sets;
  std::map<std::vector<std::int64_t>, std::size_t> labels;
  for (Elem alpha : {Elem{1}, rep.nonsquare}) {
    for (std::uint32_t g = 0; g < p; ++g) {
      for (Variant v : {Variant::lt, Variant::le}) {
        const QuadraticPoly f(alpha, Elem{0}, Elem{g});
        sets.push_back(build_parabola_set(m, f, v));
        const auto key = projection(sets.back(), Direction::infinity()).spectrum();
        const std::size_t label = labels.emplace(key, labels.size()).first->second;
        rep.members.push_back({alpha, Elem{g}, v, label, recover_parameters(m, sets.back())});
      }
    }
  }
  rep.class_count = labels.size();

  // lt(g + 1) = le(g) exactly when g never takes -1.
  std::size_t merges = 0;
  for (Elem alpha : {Elem{1}, rep.nonsquare}) {
    for (std::uint32_t g = 0; g < p; ++g) {
      const auto image = QuadraticPoly(alpha, Elem{0}, Elem{g}).image_mask(m);
      if (!image[p - 1]) ++merges;
    }
  }
  rep.merge_rule_count = 4 * static_cast<std::size_t>(p) - merges;

  if (opts.run_oracle) {
    const std::size_t n = sets.size();
    std::vector<BitPointSet> bits;
    for (const auto& s : sets) bits.push_back(s.to_bitset());
    UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (uf.find(i) == uf.find(j)) continue;
        if (isomorphic_affine(m, bits[i], bits[j], opts.search)) uf.unite(i, j);
      }
    }
    std::vector<std::size_t> roots(n);
    for (std::size_t i = 0; i < n; ++i) roots[i] = uf.find(i);

    OracleResult o;
    o.labels = first_appearance_labels(roots);
    o.class_count = *std::max_element(o.labels.begin(), o.labels.end()) + 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const bool same_oracle = o.labels[i] == o.labels[j];
        const bool same_invariant = rep.members[i].label == rep.members[j].label;
        if (same_oracle != same_invariant) o.discrepancies.emplace_back(i, j);
      }
    }
    o.agrees = o.discrepancies.empty();
    rep.oracle = std::move(o);
  }
  return rep;
}

nlohmann::ordered_json to_json(const ClassificationReport& r) {
  nlohmann::ordered_json j;
  j["p"] = r.p;
  j["nonsquare_alpha"] = r.nonsquare.value();
  j["class_count"] = r.class_count;
  j["expected_count"] = r.expected_count;
  j["merge_rule_count"] = r.merge_rule_count;
  auto classes = nlohmann::ordered_json::array();
  for (std::size_t label = 0; label < r.class_count; ++label) {
    nlohmann::ordered_json c;
    c["label"] = label;
    auto members = nlohmann::ordered_json::array();
    for (const auto& mem : r.members) {
      if (mem.label != label) continue;
      members.push_back({{"alpha", mem.alpha.value()},
                         {"beta", 0},
                         {"gamma", mem.gamma.value()},
                         {"variant", to_string(mem.variant)}});
    }
    const auto& rec = std::find_if(r.members.begin(), r.members.end(),
                                   [&](const ClassMember& mm) { return mm.label == label; })
                          ->recovered;
    c["recovered"] = {{"coefficient_class", to_string(rec.coefficient)},
                      {"gamma", rec.gamma.value()},
                      {"variant", to_string(rec.variant)}};
    c["members"] = std::move(members);
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  if (r.oracle) {
    nlohmann::ordered_json o;
    o["method"] = "exhaustive AGL(2,p)";
    o["class_count"] = r.oracle->class_count;
    o["agrees_with_invariant"] = r.oracle->agrees;
    auto d = nlohmann::ordered_json::array();
    for (auto [a, b] : r.oracle->discrepancies) d.push_back({a, b});
    o["discrepancies"] = std::move(d);
    j["oracle"] = std::move(o);
  }
  return j;
}

}  // namespace parabola
