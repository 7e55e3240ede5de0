#pragma once

#include "singulocus/monomial_order.hpp"
#include "singulocus/poly.hpp"
#include "singulocus/scalar.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace singulocus {

/// Order on module monomials x^a e_i. Components below `split` form a
/// dominant block (every term there is greater than any term outside it);
/// within a block terms are compared by monomial first, then by component
/// with lower indices greater. A homogenized order has one extra trailing
/// variable t that the ring order ignores; total degree is compared first.
struct ModuleOrder {
  MonomialOrder ring;
  std::size_t split = 0;
  bool homogenized = false;

  int cmp(const Monomial& a, std::size_t ca, const Monomial& b, std::size_t cb) const {
    if (homogenized && a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    if (split != 0) {
      bool oa = ca >= split, ob = cb >= split;
      if (oa != ob) return oa ? -1 : 1;
    }
    int c = ring.cmp(a, b);
    if (c != 0) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }
  bool is_global() const { return homogenized || ring.is_global(); }
};

template <class F>
struct VecTerm {
  Monomial mono;
  std::uint32_t comp;
  F coeff;
};

/// Element of a free module R^m as a descending sorted term list. The engine
/// representation: ideals are rank-one modules.
template <class F>
class BasicVec {
  using Traits = FieldTraits<F>;

 public:
  using TermT = VecTerm<F>;

  BasicVec() = default;
  BasicVec(std::vector<TermT> terms, const ModuleOrder& ord) : terms_(std::move(terms)) {
    normalize(ord);
  }

  static BasicVec from_poly(const BasicPoly<F>& p, std::uint32_t comp, const ModuleOrder& ord) {
    std::vector<TermT> t;
    t.reserve(p.size());
    for (const auto& term : p.terms()) t.push_back({term.mono, comp, term.coeff});
    return BasicVec(std::move(t), ord);
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<TermT>& terms() const { return terms_; }
  const TermT& lead() const { return terms_.front(); }

  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  int ecart() const { return terms_.empty() ? 0 : degree() - lead().mono.degree(); }

  /// Largest component index + 1 (0 for the zero vector).
  std::size_t rank_hint() const {
    std::size_t r = 0;
    for (const auto& t : terms_) r = std::max<std::size_t>(r, t.comp + 1);
    return r;
  }

  BasicVec monic() const {
    if (is_zero() || Traits::is_one(lead().coeff)) return *this;
    F inv = Traits::inverse(lead().coeff);
    BasicVec r = *this;
    for (auto& t : r.terms_) t.coeff = t.coeff * inv;
    return r;
  }

  BasicVec scaled(const F& c) const {
    if (Traits::is_zero(c)) return {};
    BasicVec r = *this;
    for (auto& t : r.terms_) t.coeff = t.coeff * c;
    return r;
  }

  /// this[from..] - c * m * g
  BasicVec sub_mul(std::size_t from, const F& c, const Monomial& m, const BasicVec& g,
                   const ModuleOrder& ord) const {
    BasicVec r;
    r.terms_.reserve(terms_.size() - from + g.terms_.size());
    std::size_t i = from, j = 0;
    const std::size_t n = terms_.size(), k = g.terms_.size();
    // Build the scaled g terms lazily.
    while (i < n || j < k) {
      if (j == k) {
        r.terms_.push_back(terms_[i++]);
        continue;
      }
      Monomial gm = g.terms_[j].mono * m;
      std::uint32_t gc = g.terms_[j].comp;
      int cmp = i == n ? -1 : ord.cmp(terms_[i].mono, terms_[i].comp, gm, gc);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.push_back({gm, gc, -(c * g.terms_[j].coeff)});
        ++j;
      } else {
        F s = terms_[i].coeff - c * g.terms_[j].coeff;
        if (!Traits::is_zero(s)) r.terms_.push_back({gm, gc, s});
        ++i;
        ++j;
      }
    }
    return r;
  }

  static BasicVec add(const BasicVec& f, const BasicVec& g, const ModuleOrder& ord) {
    return f.sub_mul(0, F(-1), Monomial(g.is_zero() ? 0 : g.lead().mono.size()), g, ord);
  }

  /// Multiply every term by m (order preserved).
  BasicVec mul_monomial(const Monomial& m) const {
    BasicVec r = *this;
    for (auto& t : r.terms_) t.mono = t.mono * m;
    return r;
  }

  /// Component `c` as a polynomial.
  BasicPoly<F> component(std::uint32_t c, const PolyRingPtr& ring) const {
    std::vector<Term<F>> out;
    for (const auto& t : terms_)
      if (t.comp == c) out.push_back({t.mono, t.coeff});
    return BasicPoly<F>(ring, std::move(out));
  }

  /// Shift all components by -offset (terms below offset must be absent).
  BasicVec shifted(std::uint32_t offset) const {
    BasicVec r = *this;
    for (auto& t : r.terms_) t.comp -= offset;
    return r;
  }

  friend bool operator==(const BasicVec& a, const BasicVec& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      const auto &x = a.terms_[i], &y = b.terms_[i];
      if (x.comp != y.comp || !(x.mono == y.mono) || !(x.coeff == y.coeff)) return false;
    }
    return true;
  }

  void resort(const ModuleOrder& ord) { normalize(ord); }

  /// Removes terms matching `pred`, starting at index `from`.
  template <class Pred>
  void erase_terms_if(std::size_t from, Pred pred) {
    if (from >= terms_.size()) return;
    terms_.erase(std::remove_if(terms_.begin() + static_cast<std::ptrdiff_t>(from), terms_.end(), pred),
                 terms_.end());
  }

 private:
  void normalize(const ModuleOrder& ord) {
    std::sort(terms_.begin(), terms_.end(), [&](const TermT& a, const TermT& b) {
      return ord.cmp(a.mono, a.comp, b.mono, b.comp) > 0;
    });
    std::vector<TermT> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().comp == t.comp && merged.back().mono == t.mono) {
        merged.back().coeff = merged.back().coeff + t.coeff;
      } else {
        merged.push_back(std::move(t));
      }
    }
    terms_.clear();
    for (auto& t : merged)
      if (!Traits::is_zero(t.coeff)) terms_.push_back(std::move(t));
  }

  std::vector<TermT> terms_;
};

}  // namespace singulocus
