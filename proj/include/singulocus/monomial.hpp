#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace singulocus {

inline constexpr std::size_t kMaxVars = 20;

/// Exponent vector x^a with a fixed number of variables (at most kMaxVars).
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
    if (nvars > kMaxVars) throw std::invalid_argument("too many variables");
  }
  Monomial(std::initializer_list<int> exps) : Monomial(exps.size()) {
    std::size_t i = 0;
    for (int e : exps) set(i++, e);
  }
  static Monomial variable(std::size_t nvars, std::size_t i, int power = 1) {
    Monomial m(nvars);
    m.set(i, power);
    return m;
  }

  std::size_t size() const { return n_; }
  int operator[](std::size_t i) const { return e_[i]; }
  int degree() const { return static_cast<int>(deg_); }
  bool is_one() const { return deg_ == 0; }

  void set(std::size_t i, int e) {
    if (i >= n_) throw std::out_of_range("Monomial: variable index");
    if (e < 0 || e > 0xFFFF) throw std::out_of_range("Monomial: exponent");
    deg_ = deg_ - e_[i] + static_cast<std::uint32_t>(e);
    e_[i] = static_cast<Exponent>(e);
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    check_len(a, b);
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      unsigned s = unsigned(a.e_[i]) + b.e_[i];
      if (s > 0xFFFF) throw std::overflow_error("Monomial: exponent overflow");
      r.e_[i] = static_cast<Exponent>(s);
    }
    r.deg_ = a.deg_ + b.deg_;
    return r;
  }

  /// a divides b
  friend bool divides(const Monomial& a, const Monomial& b) {
    if (a.deg_ > b.deg_) return false;
    for (std::size_t i = 0; i < a.n_; ++i)
      if (a.e_[i] > b.e_[i]) return false;
    return true;
  }

  /// b / a, requires divides(a, b)
  friend Monomial quotient(const Monomial& b, const Monomial& a) {
    Monomial r(b.n_);
    for (std::size_t i = 0; i < b.n_; ++i) r.e_[i] = b.e_[i] - a.e_[i];
    r.deg_ = b.deg_ - a.deg_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    check_len(a, b);
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      r.e_[i] = std::max(a.e_[i], b.e_[i]);
      r.deg_ += r.e_[i];
    }
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.n_; ++i)
      if (a.e_[i] != 0 && b.e_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.deg_ == b.deg_ &&
           std::equal(a.e_.begin(), a.e_.begin() + a.n_, b.e_.begin());
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < n_; ++i) h = (h ^ e_[i]) * 1099511628211ull;
    return h;
  }

  /// Embed into a ring with more variables; old variable i goes to slot map[i].
  Monomial remap(std::size_t nvars, const std::vector<std::size_t>& map) const {
    Monomial r(nvars);
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i]) r.set(map[i], e_[i]);
    return r;
  }

 private:
  static void check_len(const Monomial& a, const Monomial& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("Monomial: length mismatch");
  }

  std::array<Exponent, kMaxVars> e_{};
  std::uint32_t deg_ = 0;
  std::uint8_t n_ = 0;
};

}  // namespace singulocus

template <>
struct std::hash<singulocus::Monomial> {
  std::size_t operator()(const singulocus::Monomial& m) const { return m.hash(); }
};
