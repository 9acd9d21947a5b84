#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace parabola {

/// Canonical residue in [0, p-1]. The stored integer is nu(x) itself, so the
/// ordering x < y on F_p is native integer comparison.
class Elem {
 public:
  constexpr Elem() = default;
  constexpr explicit Elem(std::uint64_t v) : v_(v) {}

  constexpr std::uint64_t value() const { return v_; }

  friend constexpr auto operator<=>(Elem, Elem) = default;

 private:
  std::uint64_t v_ = 0;
};

constexpr std::uint64_t nu(Elem x) { return x.value(); }
constexpr bool lt(Elem a, Elem b) { return a.value() < b.value(); }

bool is_odd_prime(std::uint64_t n);

/// A validated odd prime p together with the square and inverse tables.
///
/// Tables are only materialised for p up to kTableLimit; above that chi falls
/// back to Euler's criterion and inv to Fermat exponentiation. Immutable after
/// construction.
class PrimeModulus {
 public:
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 22;

  /// Throws NotOddPrime when p <= 2 or p is composite.
  explicit PrimeModulus(std::uint64_t p);

  std::uint64_t p() const { return p_; }
  bool has_tables() const { return !square_.empty(); }

  Elem elem(std::int64_t x) const;
  Elem elem_u(std::uint64_t x) const { return Elem{x % p_}; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem mul(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  /// Throws DivisionByZero for inv(0).
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  /// Quadratic character: 1 on nonzero squares, -1 on nonsquares, 0 at 0.
  int chi(Elem x) const;
  bool is_square(Elem x) const { return chi(x) == 1; }

  /// x -> -x-1; reverses the canonical ordering.
  Elem order_reversal(Elem x) const { return sub(neg(x), Elem{1}); }

  Elem least_nonsquare() const;

  /// Q and N in ascending order.
  std::vector<Elem> squares() const;
  std::vector<Elem> nonsquares() const;

 private:
  std::uint64_t p_;
  std::vector<std::uint8_t> square_;
  std::vector<std::uint32_t> inverse_;
};

PrimeModulus make_field(std::uint64_t p);

/// Exhaustive O(p^2) check that a < b iff -b-1 < -a-1 for all pairs.
bool verify_order_reversal_lemma(const PrimeModulus& m);

}  // namespace parabola
