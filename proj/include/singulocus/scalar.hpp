#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace singulocus {

/// Exact rational coefficients. gmpxx keeps results of arithmetic canonical
/// (coprime numerator/denominator, positive denominator).
using Rational = mpq_class;

/// Element of the prime field GF(P). Used by the engine tests only.
template <std::uint32_t P>
class ModP {
  static_assert(P >= 2 && P < (1u << 31), "modulus must fit in 31 bits");

 public:
  constexpr ModP() = default;
  constexpr ModP(std::int64_t v)  // NOLINT(google-explicit-constructor)
      : v_(static_cast<std::uint32_t>(((v % static_cast<std::int64_t>(P)) +
                                       static_cast<std::int64_t>(P)) %
                                      static_cast<std::int64_t>(P))) {}

  static constexpr std::uint32_t modulus() { return P; }
  constexpr std::uint32_t value() const { return v_; }

  friend constexpr ModP operator+(ModP a, ModP b) {
    std::uint32_t s = a.v_ + b.v_;
    return raw(s >= P ? s - P : s);
  }
  friend constexpr ModP operator-(ModP a, ModP b) {
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + P - b.v_);
  }
  friend constexpr ModP operator*(ModP a, ModP b) {
    return raw(static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a.v_) * b.v_) % P));
  }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
  constexpr ModP operator-() const { return raw(v_ == 0 ? 0 : P - v_); }
  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }
  ModP& operator/=(ModP o) { return *this = *this / o; }
  friend constexpr bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }

  ModP inverse() const {
    if (v_ == 0) throw std::domain_error("ModP: division by zero");
    // Fermat: a^(P-2)
    ModP base = *this, acc = raw(1);
    for (std::uint32_t e = P - 2; e != 0; e >>= 1) {
      if (e & 1u) acc *= base;
      base *= base;
    }
    return acc;
  }

 private:
  static constexpr ModP raw(std::uint32_t v) {
    ModP r;
    r.v_ = v;
    return r;
  }
  std::uint32_t v_ = 0;
};

/// Uniform scalar operations used by the templated engine.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr std::uint32_t characteristic = 0;
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static bool is_one(const Rational& a) { return a == 1; }
  static Rational inverse(const Rational& a) {
    if (is_zero(a)) throw std::domain_error("Rational: division by zero");
    return 1 / a;
  }
  static std::string to_string(const Rational& a) { return a.get_str(); }
  static Rational from_rational(const Rational& a) { return a; }
  static Rational to_rational(const Rational& a) { return a; }
  /// Storage size in limbs, used for work budgets.
  static std::size_t size_cost(const Rational& a) {
    return mpz_size(a.get_num_mpz_t()) + mpz_size(a.get_den_mpz_t());
  }
};

template <std::uint32_t P>
struct FieldTraits<ModP<P>> {
  static constexpr std::uint32_t characteristic = P;
  static bool is_zero(ModP<P> a) { return a.value() == 0; }
  static bool is_one(ModP<P> a) { return a.value() == 1; }
  static ModP<P> inverse(ModP<P> a) { return a.inverse(); }
  static std::string to_string(ModP<P> a) { return std::to_string(a.value()); }
  static ModP<P> from_rational(const Rational& a) {
    mpz_class p = P;
    mpz_class num = a.get_num() % p;
    mpz_class den = a.get_den() % p;
    if (den == 0) throw std::domain_error("ModP: denominator divisible by p");
    return ModP<P>(num.get_si()) / ModP<P>(den.get_si());
  }
  static Rational to_rational(ModP<P> a) { return Rational(a.value()); }
  static std::size_t size_cost(ModP<P>) { return 1; }
};

}  // namespace singulocus
