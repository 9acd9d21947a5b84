#include "parabola/projective.hpp"

#include "parabola/errors.hpp"

namespace parabola {

std::string ProjectivePoint::to_string() const {
  if (z != 0) return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  if (x == 0) return "(inf)";
  return "(" + std::to_string(y) + ")";
}

ProjectivePoint canonical_point(const PrimeModulus& m, std::uint64_t x, std::uint64_t y,
                                std::uint64_t z) {
  const Elem ex = m.elem_u(x), ey = m.elem_u(y), ez = m.elem_u(z);
  Elem scale;
  if (ez.value() != 0) {
    scale = m.inv(ez);
  } else if (ex.value() != 0) {
    scale = m.inv(ex);
  } else if (ey.value() != 0) {
    scale = m.inv(ey);
  } else {
    throw SingularMatrix("zero vector is not a projective point");
  }
  return {static_cast<std::uint32_t>(m.mul(ex, scale).value()),
          static_cast<std::uint32_t>(m.mul(ey, scale).value()),
          static_cast<std::uint32_t>(m.mul(ez, scale).value())};
}

Elem determinant(const PrimeModulus& m, const Projectivity::Entries& a) {
  auto E = [&](int i) { return Elem{a[i]}; };
  auto minor = [&](int i, int j, int k, int l) {
    return m.sub(m.mul(E(i), E(j)), m.mul(E(k), E(l)));
  };
  const Elem t0 = m.mul(E(0), minor(4, 8, 5, 7));
  const Elem t1 = m.mul(E(1), minor(3, 8, 5, 6));
  const Elem t2 = m.mul(E(2), minor(3, 7, 4, 6));
  return m.add(m.sub(t0, t1), t2);
}

Projectivity Projectivity::from_matrix(const PrimeModulus& m, const std::array<std::int64_t, 9>& a) {
  Entries e{};
  for (int i = 0; i < 9; ++i) e[i] = static_cast<std::uint32_t>(m.elem(a[i]).value());
  if (determinant(m, e).value() == 0) throw SingularMatrix("matrix is not invertible");
  int lead = 0;
  while (e[lead] == 0) ++lead;
  const Elem s = m.inv(Elem{e[lead]});
  for (auto& v : e) v = static_cast<std::uint32_t>(m.mul(Elem{v}, s).value());
  return Projectivity(e);
}

Projectivity Projectivity::identity() { return Projectivity(Entries{1, 0, 0, 0, 1, 0, 0, 0, 1}); }

Projectivity Projectivity::reflection(const PrimeModulus& m) {
  return from_matrix(m, {-1, 0, 0, 0, 1, 0, 0, 0, 1});
}

Projectivity Projectivity::horizontal_affinity(const PrimeModulus& m, Elem a, Elem b) {
  return from_matrix(m, {static_cast<std::int64_t>(a.value()), 0,
                         static_cast<std::int64_t>(b.value()), 0, 1, 0, 0, 0, 1});
}

ProjectivePoint Projectivity::apply(const PrimeModulus& m, ProjectivePoint pt) const {
  const std::uint64_t p = m.p();
  std::uint64_t v[3];
  for (int r = 0; r < 3; ++r) {
    v[r] = (static_cast<std::uint64_t>(e_[3 * r]) * pt.x + static_cast<std::uint64_t>(e_[3 * r + 1]) * pt.y +
            static_cast<std::uint64_t>(e_[3 * r + 2]) * pt.z) % p;
  }
  return canonical_point(m, v[0], v[1], v[2]);
}

std::optional<AffinePoint> Projectivity::apply(const PrimeModulus& m, AffinePoint pt) const {
  const ProjectivePoint img = apply(m, ProjectivePoint::affine(pt));
  if (!img.is_affine()) return std::nullopt;
  return AffinePoint{img.x, img.y};
}

Projectivity Projectivity::compose(const PrimeModulus& m, const Projectivity& other) const {
  std::array<std::int64_t, 9> c{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Elem acc{0};
      for (int k = 0; k < 3; ++k) acc = m.add(acc, m.mul(Elem{e_[3 * i + k]}, Elem{other.e_[3 * k + j]}));
      c[3 * i + j] = static_cast<std::int64_t>(acc.value());
    }
  }
  return from_matrix(m, c);
}

Projectivity Projectivity::inverse(const PrimeModulus& m) const {
  // Adjugate; the scalar 1/det is absorbed by canonicalisation.
  auto E = [&](int i) { return Elem{e_[i]}; };
  auto cof = [&](int i, int j, int k, int l) {
    return static_cast<std::int64_t>(m.sub(m.mul(E(i), E(j)), m.mul(E(k), E(l))).value());
  };
  return from_matrix(m, {cof(4, 8, 5, 7), cof(2, 7, 1, 8), cof(1, 5, 2, 4),
                         cof(5, 6, 3, 8), cof(0, 8, 2, 6), cof(2, 3, 0, 5),
                         cof(3, 7, 4, 6), cof(1, 6, 0, 7), cof(0, 4, 1, 3)});
}

bool Projectivity::is_horizontal_affinity() const {
  return e_[1] == 0 && e_[3] == 0 && e_[5] == 0 && e_[6] == 0 && e_[7] == 0 && e_[4] != 0 &&
         e_[4] == e_[8];
}

std::string Projectivity::to_string() const {
  std::string s = "[";
  for (int r = 0; r < 3; ++r) {
    s += r == 0 ? "[" : ",[";
    for (int c = 0; c < 3; ++c) {
      if (c != 0) s += ",";
      s += std::to_string(e_[3 * r + c]);
    }
    s += "]";
  }
  return s + "]";
}

AffinePoint AffineMap::apply(std::uint32_t p, AffinePoint pt) const {
  const std::uint64_t P = p;
  return {static_cast<std::uint32_t>((std::uint64_t{a[0]} * pt.x + std::uint64_t{a[1]} * pt.y + t[0]) % P),
          static_cast<std::uint32_t>((std::uint64_t{a[2]} * pt.x + std::uint64_t{a[3]} * pt.y + t[1]) % P)};
}

Projectivity AffineMap::to_projectivity(const PrimeModulus& m) const {
  return Projectivity::from_matrix(m, {a[0], a[1], t[0], a[2], a[3], t[1], 0, 0, 1});
}

std::string AffineMap::to_string() const {
  return "A=[[" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "],[" + std::to_string(a[2]) +
         "," + std::to_string(a[3]) + "]] t=(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + ")";
}

std::optional<BitPointSet> apply_projectivity(const PrimeModulus& m, const BitPointSet& s,
                                              const Projectivity& M) {
  BitPointSet out(s.p());
  for (const AffinePoint& pt : s.points()) {
    const auto img = M.apply(m, pt);
    if (!img) return std::nullopt;
    out.insert(img->x, img->y);
  }
  return out;
}

BitPointSet apply_affine(const BitPointSet& s, const AffineMap& f) {
  BitPointSet out(s.p());
  for (const AffinePoint& pt : s.points()) {
    const AffinePoint img = f.apply(s.p(), pt);
    out.insert(img.x, img.y);
  }
  return out;
}

}  // namespace parabola
