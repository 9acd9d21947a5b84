#include "parabola/field.hpp"

#include <string>

#include "parabola/errors.hpp"

namespace parabola {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  __extension__ using u128 = unsigned __int128;
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

}  // namespace

bool is_odd_prime(std::uint64_t n) {
  if (n < 3 || n % 2 == 0) return false;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
  if (!is_odd_prime(p)) {
    throw NotOddPrime(std::to_string(p) + " is not an odd prime");
  }
  if (p > kTableLimit) return;

  square_.assign(p, 0);
  for (std::uint64_t x = 1; x <= p / 2; ++x) square_[x * x % p] = 1;

  inverse_.assign(p, 0);
  inverse_[1] = 1;
  for (std::uint64_t i = 2; i < p; ++i) {
    // inv(i) = -(p / i) * inv(p mod i)
    inverse_[i] = static_cast<std::uint32_t>((p - (p / i) * inverse_[p % i] % p) % p);
  }
}

Elem PrimeModulus::elem(std::int64_t x) const {
  const auto sp = static_cast<std::int64_t>(p_);
  std::int64_t r = x % sp;
  if (r < 0) r += sp;
  return Elem{static_cast<std::uint64_t>(r)};
}

Elem PrimeModulus::add(Elem a, Elem b) const {
  std::uint64_t s = a.value() + b.value();
  // a + b wraps when p > 2^63
  if (s >= p_ || s < a.value()) s -= p_;
  return Elem{s};
}

Elem PrimeModulus::sub(Elem a, Elem b) const {
  return a.value() >= b.value() ? Elem{a.value() - b.value()}
                                : Elem{a.value() + (p_ - b.value())};
}

Elem PrimeModulus::mul(Elem a, Elem b) const { return Elem{mulmod(a.value(), b.value(), p_)}; }

Elem PrimeModulus::neg(Elem a) const { return a.value() == 0 ? a : Elem{p_ - a.value()}; }

Elem PrimeModulus::inv(Elem a) const {
  if (a.value() == 0) throw DivisionByZero("inverse of 0 in F_" + std::to_string(p_));
  if (!inverse_.empty()) return Elem{inverse_[a.value()]};
  return Elem{powmod(a.value(), p_ - 2, p_)};
}

Elem PrimeModulus::pow(Elem a, std::uint64_t e) const { return Elem{powmod(a.value(), e, p_)}; }

int PrimeModulus::chi(Elem x) const {
  if (x.value() == 0) return 0;
  if (!square_.empty()) return square_[x.value()] ? 1 : -1;
  return powmod(x.value(), (p_ - 1) / 2, p_) == 1 ? 1 : -1;
}

Elem PrimeModulus::least_nonsquare() const {
  for (std::uint64_t x = 2;; ++x) {
    if (chi(Elem{x}) == -1) return Elem{x};
  }
}

std::vector<Elem> PrimeModulus::squares() const {
  std::vector<Elem> out;
  out.reserve((p_ - 1) / 2);
  for (std::uint64_t x = 1; x < p_; ++x) {
    if (chi(Elem{x}) == 1) out.emplace_back(x);
  }
  return out;
}

std::vector<Elem> PrimeModulus::nonsquares() const {
  std::vector<Elem> out;
  out.reserve((p_ - 1) / 2);
  for (std::uint64_t x = 1; x < p_; ++x) {
    if (chi(Elem{x}) == -1) out.emplace_back(x);
  }
  return out;
}

PrimeModulus make_field(std::uint64_t p) { return PrimeModulus(p); }

bool verify_order_reversal_lemma(const PrimeModulus& m) {
  const std::uint64_t p = m.p();
  for (std::uint64_t a = 0; a < p; ++a) {
    const Elem ea{a};
    const Elem ra = m.order_reversal(ea);
    if (m.order_reversal(ra) != ea) return false;
    for (std::uint64_t b = 0; b < p; ++b) {
      const Elem eb{b};
      if (lt(ea, eb) != lt(m.order_reversal(eb), ra)) return false;
    }
  }
  return true;
}

}  // namespace parabola
