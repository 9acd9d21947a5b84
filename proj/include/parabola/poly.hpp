#pragma once

#include <string>
#include <vector>

#include "parabola/field.hpp"

namespace parabola {

/// f(X) = alpha X^2 + beta X + gamma with alpha != 0.
class QuadraticPoly {
 public:
  /// Throws ZeroLeadingCoefficient when alpha = 0.
  QuadraticPoly(Elem alpha, Elem beta, Elem gamma);

  Elem alpha() const { return alpha_; }
  Elem beta() const { return beta_; }
  Elem gamma() const { return gamma_; }

  Elem operator()(const PrimeModulus& m, Elem x) const;

  /// Values f(0), ..., f(p-1).
  std::vector<Elem> values(const PrimeModulus& m) const;

  /// Image of f as a membership bitmap indexed by nu.
  std::vector<std::uint8_t> image_mask(const PrimeModulus& m) const;

  std::string to_string() const;

  friend bool operator==(const QuadraticPoly&, const QuadraticPoly&) = default;

 private:
  Elem alpha_;
  Elem beta_;
  Elem gamma_;
};

}  // namespace parabola
