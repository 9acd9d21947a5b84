#include "parabola/poly.hpp"

#include "parabola/errors.hpp"

namespace parabola {

QuadraticPoly::QuadraticPoly(Elem alpha, Elem beta, Elem gamma)
    : alpha_(alpha), beta_(beta), gamma_(gamma) {
  if (alpha.value() == 0) throw ZeroLeadingCoefficient("quadratic needs alpha != 0");
}

Elem QuadraticPoly::operator()(const PrimeModulus& m, Elem x) const {
  // Horner: (alpha x + beta) x + gamma
  return m.add(m.mul(m.add(m.mul(alpha_, x), beta_), x), gamma_);
}

std::vector<Elem> QuadraticPoly::values(const PrimeModulus& m) const {
  std::vector<Elem> out;
  out.reserve(m.p());
  for (std::uint64_t x = 0; x < m.p(); ++x) out.push_back((*this)(m, Elem{x}));
  return out;
}

std::vector<std::uint8_t> QuadraticPoly::image_mask(const PrimeModulus& m) const {
  std::vector<std::uint8_t> mask(m.p(), 0);
  for (std::uint64_t x = 0; x < m.p(); ++x) mask[(*this)(m, Elem{x}).value()] = 1;
  return mask;
}

std::string QuadraticPoly::to_string() const {
  return std::to_string(alpha_.value()) + "X^2+" + std::to_string(beta_.value()) + "X+" +
         std::to_string(gamma_.value());
}

}  // namespace parabola
