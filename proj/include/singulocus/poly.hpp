#pragma once

#include "singulocus/monomial.hpp"
#include "singulocus/monomial_order.hpp"
#include "singulocus/scalar.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace singulocus {

/// Ambient polynomial ring k[x_1..x_p] together with its monomial order.
struct PolyRing {
  std::vector<std::string> vars;
  MonomialOrder order;

  std::size_t nvars() const { return vars.size(); }
  friend bool operator==(const PolyRing&, const PolyRing&) = default;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

inline PolyRingPtr make_poly_ring(std::vector<std::string> vars, MonomialOrder order) {
  if (vars.size() > kMaxVars) throw std::invalid_argument("too many variables");
  if (order.nvars() != vars.size())
    throw std::invalid_argument("monomial order does not match variable count");
  return std::make_shared<const PolyRing>(PolyRing{std::move(vars), std::move(order)});
}

inline bool same_ring(const PolyRingPtr& a, const PolyRingPtr& b) {
  return a == b || (a && b && *a == *b);
}

struct RingMismatch : std::invalid_argument {
  RingMismatch() : std::invalid_argument("ring mismatch") {}
};

template <class F>
struct Term {
  Monomial mono;
  F coeff;
};

/// Sparse multivariate polynomial with terms kept in descending order with
/// respect to the ring's monomial order. No zero coefficients are stored.
template <class F>
class BasicPoly {
  using Traits = FieldTraits<F>;

 public:
  using Scalar = F;
  using TermT = Term<F>;

  BasicPoly() = default;
  explicit BasicPoly(PolyRingPtr ring) : ring_(std::move(ring)) {}
  BasicPoly(PolyRingPtr ring, const F& c) : ring_(std::move(ring)) {
    if (!Traits::is_zero(c)) terms_.push_back({Monomial(ring_->nvars()), c});
  }
  BasicPoly(PolyRingPtr ring, Monomial m, const F& c = F(1)) : ring_(std::move(ring)) {
    if (m.size() != ring_->nvars()) throw std::invalid_argument("monomial length");
    if (!Traits::is_zero(c)) terms_.push_back({std::move(m), c});
  }
  /// Builds from an arbitrary term list: sorts and merges equal monomials.
  BasicPoly(PolyRingPtr ring, std::vector<TermT> terms) : ring_(std::move(ring)) {
    terms_ = std::move(terms);
    normalize();
  }

  static BasicPoly variable(const PolyRingPtr& ring, std::size_t i) {
    if (i >= ring->nvars()) throw std::out_of_range("variable index");
    return BasicPoly(ring, Monomial::variable(ring->nvars(), i));
  }

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<TermT>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Monomial& lead_monomial() const { return terms_.front().mono; }
  const F& lead_coeff() const { return terms_.front().coeff; }

  /// Highest total degree of a term (-1 for zero).
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  /// Lowest total degree of a term (-1 for zero).
  int order_degree() const {
    if (terms_.empty()) return -1;
    int d = terms_.front().mono.degree();
    for (const auto& t : terms_) d = std::min(d, t.mono.degree());
    return d;
  }
  /// Constant coefficient.
  F constant_coeff() const {
    for (const auto& t : terms_)
      if (t.mono.is_one()) return t.coeff;
    return F(0);
  }

  BasicPoly monic() const {
    if (is_zero() || Traits::is_one(lead_coeff())) return *this;
    return *this * Traits::inverse(lead_coeff());
  }

  friend BasicPoly operator+(const BasicPoly& f, const BasicPoly& g) {
    return combine(f, g, false);
  }
  friend BasicPoly operator-(const BasicPoly& f, const BasicPoly& g) {
    return combine(f, g, true);
  }
  BasicPoly operator-() const {
    BasicPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  friend BasicPoly operator*(const BasicPoly& f, const F& c) {
    if (Traits::is_zero(c)) return BasicPoly(f.ring_);
    BasicPoly r = f;
    for (auto& t : r.terms_) t.coeff = t.coeff * c;
    return r;
  }
  friend BasicPoly operator*(const F& c, const BasicPoly& f) { return f * c; }
  friend BasicPoly operator*(const BasicPoly& f, const BasicPoly& g) {
    check_same(f, g);
    if (f.is_zero() || g.is_zero()) return BasicPoly(f.ring_);
    std::vector<TermT> out;
    out.reserve(f.size() * g.size());
    for (const auto& a : f.terms_)
      for (const auto& b : g.terms_) out.push_back({a.mono * b.mono, a.coeff * b.coeff});
    return BasicPoly(f.ring_, std::move(out));
  }
  BasicPoly& operator+=(const BasicPoly& g) { return *this = *this + g; }
  BasicPoly& operator-=(const BasicPoly& g) { return *this = *this - g; }
  BasicPoly& operator*=(const BasicPoly& g) { return *this = *this * g; }

  /// c * m * f
  BasicPoly mul_term(const Monomial& m, const F& c) const {
    BasicPoly r(ring_);
    if (Traits::is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;  // multiplication by a monomial preserves the order
  }

  BasicPoly pow(unsigned e) const {
    BasicPoly acc(ring_, F(1)), base = *this;
    while (e) {
      if (e & 1u) acc = acc * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return acc;
  }

  /// Formal partial derivative with respect to variable i.
  BasicPoly derivative(std::size_t i) const {
    if (!ring_ || i >= ring_->nvars()) throw std::out_of_range("derivative: variable index");
    std::vector<TermT> out;
    for (const auto& t : terms_) {
      int e = t.mono[i];
      if (e == 0) continue;
      Monomial m = t.mono;
      m.set(i, e - 1);
      out.push_back({m, t.coeff * F(e)});
    }
    return BasicPoly(ring_, std::move(out));
  }

  /// Re-expresses the polynomial in another ring; variable i goes to map[i].
  BasicPoly map_into(const PolyRingPtr& target, const std::vector<std::size_t>& map) const {
    std::vector<TermT> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.mono.remap(target->nvars(), map), t.coeff});
    return BasicPoly(target, std::move(out));
  }
  /// Same variables, different order (re-sorts terms).
  BasicPoly with_ring(const PolyRingPtr& target) const {
    if (target->nvars() != ring_->nvars()) throw RingMismatch();
    return BasicPoly(target, terms_);
  }

  friend bool operator==(const BasicPoly& f, const BasicPoly& g) {
    if (f.terms_.size() != g.terms_.size()) return false;
    for (std::size_t i = 0; i < f.terms_.size(); ++i)
      if (!(f.terms_[i].mono == g.terms_[i].mono) || !(f.terms_[i].coeff == g.terms_[i].coeff))
        return false;
    return true;
  }

  /// Canonical text: terms in descending order, `*` between factors.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      std::string c = Traits::to_string(t.coeff);
      bool neg = !c.empty() && c[0] == '-';
      if (neg) c.erase(0, 1);
      if (first) {
        if (neg) os << '-';
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      std::string m = monomial_string(t.mono);
      if (m.empty()) {
        os << c;
      } else if (c == "1") {
        os << m;
      } else {
        os << c << '*' << m;
      }
    }
    return os.str();
  }

  std::string monomial_string(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += '*';
      s += ring_->vars[i];
      if (m[i] > 1) s += '^' + std::to_string(m[i]);
    }
    return s;
  }

  /// Direct access for the engine: terms must stay sorted and nonzero.
  std::vector<TermT>& mutable_terms() { return terms_; }

 private:
  static void check_same(const BasicPoly& f, const BasicPoly& g) {
    if (!same_ring(f.ring_, g.ring_)) throw RingMismatch();
  }

  void normalize() {
    const MonomialOrder& ord = ring_->order;
    std::sort(terms_.begin(), terms_.end(),
              [&](const TermT& a, const TermT& b) { return ord.cmp(a.mono, b.mono) > 0; });
    std::vector<TermT> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().mono == t.mono) {
        merged.back().coeff = merged.back().coeff + t.coeff;
      } else {
        merged.push_back(std::move(t));
      }
    }
    terms_.clear();
    for (auto& t : merged)
      if (!Traits::is_zero(t.coeff)) terms_.push_back(std::move(t));
  }

  static BasicPoly combine(const BasicPoly& f, const BasicPoly& g, bool subtract) {
    check_same(f, g);
    const MonomialOrder& ord = f.ring_->order;
    BasicPoly r(f.ring_);
    r.terms_.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() || j < g.size()) {
      int c = i == f.size() ? -1 : j == g.size() ? 1 : ord.cmp(f.terms_[i].mono, g.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(f.terms_[i++]);
      } else if (c < 0) {
        const auto& t = g.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? F(-t.coeff) : t.coeff});
      } else {
        F s = subtract ? F(f.terms_[i].coeff - g.terms_[j].coeff) : F(f.terms_[i].coeff + g.terms_[j].coeff);
        if (!Traits::is_zero(s)) r.terms_.push_back({f.terms_[i].mono, s});
        ++i;
        ++j;
      }
    }
    return r;
  }

  PolyRingPtr ring_;
  std::vector<TermT> terms_;
};

using Poly = BasicPoly<Rational>;

}  // namespace singulocus
