#pragma once

// Standard bases of submodules of free modules over k[x] (global orders,
// Buchberger) and over its localization at a monomial order (local and mixed
// orders, Mora's tangent-cone normal form).

#include "singulocus/module_vector.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace singulocus {

struct DegreeCapExceeded : std::runtime_error {
  explicit DegreeCapExceeded(int degree, int cap)
      : std::runtime_error("standard basis element of degree " + std::to_string(degree) +
                           " exceeds the degree cap " + std::to_string(cap)) {}
};

struct EngineOptions {
  int degree_cap = 40;
};

namespace detail {

template <class F>
bool lead_divides(const BasicVec<F>& g, const BasicVec<F>& h) {
  return g.lead().comp == h.lead().comp && divides(g.lead().mono, h.lead().mono);
}

/// h - (lc(h)/lc(g)) * (LT(h)/LT(g)) * g, assuming LT(g) | LT(h) and g monic.
template <class F>
BasicVec<F> reduce_lead(const BasicVec<F>& h, const BasicVec<F>& g, const ModuleOrder& ord) {
  Monomial m = quotient(h.lead().mono, g.lead().mono);
  F c = h.lead().coeff;
  if (!FieldTraits<F>::is_one(g.lead().coeff)) c = c / g.lead().coeff;
  return h.sub_mul(0, c, m, g, ord);
}

/// Degree bound past which everything in the lowest block lies in the
/// submodule.
///
/// For a local degree order, if x_i^{a_i} e_c is a leading term for every
/// variable then every monomial of degree >= sum(a_i - 1) + 1 is one too.
/// When that holds for every component of the lowest block (the block that
/// elements led there never leave), reduction of any term of degree >= the
/// largest of these bounds stays inside terms of that degree, so m^k e_c lies
/// in the localized submodule and such terms can be dropped.
template <class F>
class Corner {
 public:
  Corner(const ModuleOrder& ord, std::size_t rank)
      : enabled_(!ord.homogenized && ord.ring.is_local() && ord.ring.blocks().size() == 1 &&
                 rank > ord.split),
        split_(ord.split),
        nvars_(ord.ring.nvars()),
        pure_(rank, std::vector<int>(ord.ring.nvars(), -1)),
        bound_(rank, -1) {}

  void add(const BasicVec<F>& g) {
    if (!enabled_ || g.is_zero()) return;
    const auto& t = g.lead();
    if (t.comp < split_ || t.comp >= bound_.size()) return;
    std::size_t var = nvars_, count = 0;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (t.mono[i] != 0) {
        var = i;
        ++count;
      }
    if (count > 1) return;
    const std::size_t c = t.comp;
    if (count == 0) {
      bound_[c] = 0;
    } else {
      int& a = pure_[c][var];
      if (a < 0 || t.mono[var] < a) a = t.mono[var];
      int sum = 1;
      for (int e : pure_[c]) {
        if (e < 0) return;
        sum += e - 1;
      }
      if (bound_[c] < 0 || sum < bound_[c]) bound_[c] = sum;
    }
    limit_ = 0;
    for (std::size_t k = split_; k < bound_.size(); ++k) {
      if (bound_[k] < 0) {
        limit_ = -1;
        return;
      }
      limit_ = std::max(limit_, bound_[k]);
    }
  }

  bool active() const { return limit_ >= 0; }

  void truncate(BasicVec<F>& h, std::size_t from = 0) const {
    if (!active()) return;
    h.erase_terms_if(from, [&](const VecTerm<F>& t) {
      return t.comp >= split_ && t.mono.degree() >= limit_;
    });
  }

 private:
  bool enabled_;
  std::size_t split_;
  std::size_t nvars_;
  std::vector<std::vector<int>> pure_;
  std::vector<int> bound_;
  int limit_ = -1;
};

template <class F>
std::size_t rank_of(const std::vector<BasicVec<F>>& vs) {
  std::size_t r = 0;
  for (const auto& v : vs) r = std::max(r, v.rank_hint());
  return r;
}

/// Mora's weak normal form, giving up (nullopt) after `max_steps` reductions
/// when `max_steps` is nonzero, or once the accumulated size of the
/// intermediate remainders exceeds a budget proportional to `max_steps`.
template <class F>
std::optional<BasicVec<F>> mora_reduce(const BasicVec<F>& f, const std::vector<BasicVec<F>>& basis,
                                       const ModuleOrder& ord, std::size_t max_steps) {
  Corner<F> corner(ord, std::max(rank_of(basis), f.rank_hint()));
  for (const auto& g : basis) corner.add(g);
  BasicVec<F> h = f;
  corner.truncate(h);
  std::vector<BasicVec<F>> extra;
  std::size_t steps = 0;
  std::size_t work = 0;
  const std::size_t budget = max_steps * 2000;
  while (!h.is_zero()) {
    if (max_steps != 0) {
      if (steps++ >= max_steps) return std::nullopt;
      for (const auto& t : h.terms()) work += 1 + FieldTraits<F>::size_cost(t.coeff);
      if (work > budget) return std::nullopt;
    }
    const BasicVec<F>* best = nullptr;
    int best_ecart = 0;
    auto consider = [&](const BasicVec<F>& g) {
      if (g.is_zero() || !lead_divides(g, h)) return;
      int e = g.ecart();
      if (!best || e < best_ecart || (e == best_ecart && g.size() < best->size())) {
        best = &g;
        best_ecart = e;
      }
    };
    for (const auto& g : basis) consider(g);
    for (const auto& g : extra) consider(g);
    if (!best) break;
    BasicVec<F> g = *best;  // `extra` may reallocate below
    if (best_ecart > h.ecart()) extra.push_back(h.monic());
    h = reduce_lead(h, g, ord);
    corner.truncate(h);
  }
  return h;
}

}  // namespace detail

/// Full reduction for global orders: no term of the result is divisible by a
/// leading term of `basis`.
template <class F>
BasicVec<F> reduce_full(const BasicVec<F>& f, const std::vector<BasicVec<F>>& basis,
                        const ModuleOrder& ord) {
  std::vector<typename BasicVec<F>::TermT> rest;
  BasicVec<F> h = f;
  std::size_t from = 0;
  while (from < h.size()) {
    const auto& t = h.terms()[from];
    const BasicVec<F>* red = nullptr;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (g.lead().comp == t.comp && divides(g.lead().mono, t.mono)) {
        if (!red || g.size() < red->size()) red = &g;
      }
    }
    if (!red) {
      rest.push_back(t);
      ++from;
      continue;
    }
    Monomial m = quotient(t.mono, red->lead().mono);
    F c = t.coeff / red->lead().coeff;
    h = h.sub_mul(from, c, m, *red, ord);
    from = 0;
  }
  return BasicVec<F>(std::move(rest), ord);
}

/// Top reduction (global orders): reduce until the leading term is irreducible.
template <class F>
BasicVec<F> reduce_top(BasicVec<F> h, const std::vector<BasicVec<F>>& basis, const ModuleOrder& ord) {
  while (!h.is_zero()) {
    const BasicVec<F>* red = nullptr;
    for (const auto& g : basis)
      if (!g.is_zero() && detail::lead_divides(g, h) && (!red || g.size() < red->size())) red = &g;
    if (!red) break;
    h = detail::reduce_lead(h, *red, ord);
  }
  return h;
}

/// Mora's weak normal form: returns h with u*f - h in <basis> for a unit u
/// (u = 1 for global orders) and LT(h) not divisible by any LT of the basis.
template <class F>
BasicVec<F> mora_normal_form(const BasicVec<F>& f, const std::vector<BasicVec<F>>& basis,
                             const ModuleOrder& ord) {
  return *detail::mora_reduce(f, basis, ord, 0);
}

/// Buchberger algorithm with the Gebauer-Moeller pair criteria and normal
/// (sugar) selection, for global (or homogenized) orders. The result is the
/// reduced basis with monic leading coefficients, sorted ascending by
/// leading term.
template <class F>
class StandardBasisBuilder {
 public:
  StandardBasisBuilder(ModuleOrder ord, EngineOptions opts)
      : ord_(std::move(ord)), opts_(opts), global_(ord_.is_global()) {
    if (!global_) throw std::invalid_argument("StandardBasisBuilder: order must be global");
  }

  std::vector<BasicVec<F>> run(std::vector<BasicVec<F>> gens) {
    std::erase_if(gens, [](const BasicVec<F>& v) { return v.is_zero(); });
    // Rank-one input allows the product criterion (global orders only).
    product_ok_ = global_ && std::all_of(gens.begin(), gens.end(), [](const BasicVec<F>& v) {
                    return v.rank_hint() <= 1;
                  });
    std::stable_sort(gens.begin(), gens.end(), [&](const BasicVec<F>& a, const BasicVec<F>& b) {
      return lt_cmp(a, b) < 0;
    });
    for (auto& g : gens) {
      BasicVec<F> h = reduce(g);
      if (!h.is_zero()) insert(h.monic(), h.degree());
    }
    while (!pairs_.empty()) {
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      BasicVec<F> s = spoly(p.i, p.j);
      BasicVec<F> h = reduce(s);
      if (!h.is_zero()) insert(h.monic(), std::max(p.sugar, h.degree()));
    }
    return finalize();
  }

 private:
  struct Pair {
    int sugar;
    int lcm_deg;
    std::size_t i, j;
    Monomial lcm;
    friend bool operator<(const Pair& a, const Pair& b) {
      return std::tie(a.sugar, a.lcm_deg, a.j, a.i) < std::tie(b.sugar, b.lcm_deg, b.j, b.i);
    }
  };

  int lt_cmp(const BasicVec<F>& a, const BasicVec<F>& b) const {
    return ord_.cmp(a.lead().mono, a.lead().comp, b.lead().mono, b.lead().comp);
  }

  BasicVec<F> reduce(const BasicVec<F>& f) const {
    return reduce_top(f, basis_, ord_);
  }

  BasicVec<F> spoly(std::size_t i, std::size_t j) const {
    const auto& a = basis_[i];
    const auto& b = basis_[j];
    Monomial l = lcm(a.lead().mono, b.lead().mono);
    Monomial ma = quotient(l, a.lead().mono);
    Monomial mb = quotient(l, b.lead().mono);
    // Both monic: ma*a - mb*b
    BasicVec<F> sa = a.mul_monomial(ma);
    return sa.sub_mul(0, F(1), mb, b, ord_);
  }

  void insert(BasicVec<F> h, int sugar) {
    int deg = h.degree();
    if (deg > opts_.degree_cap) throw DegreeCapExceeded(deg, opts_.degree_cap);
    const std::size_t k = basis_.size();
    basis_.push_back(std::move(h));
    sugar_.push_back(sugar);
    redundant_.push_back(false);
    update(k);
  }

  // Gebauer-Moeller update for the new element k.
  void update(std::size_t k) {
    const auto& hk = basis_[k];
    const Monomial& lk = hk.lead().mono;
    const auto comp = hk.lead().comp;

    struct Cand {
      std::size_t i;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < k; ++i) {
      if (redundant_[i] || basis_[i].lead().comp != comp) continue;
      const Monomial& li = basis_[i].lead().mono;
      cands.push_back({i, lcm(li, lk), product_ok_ && coprime(li, lk)});
    }
    // Criterion M / F: drop a candidate whose lcm is divisible by the lcm of a
    // remaining candidate (exact duplicates: keep the last one).
    std::vector<Cand> kept;
    std::vector<bool> alive(cands.size(), true);
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool drop = false;
      if (!cands[a].coprime) {
        for (std::size_t b = 0; b < cands.size() && !drop; ++b) {
          if (b == a || !alive[b]) continue;
          if (divides(cands[b].lcm, cands[a].lcm)) {
            if (!(cands[b].lcm == cands[a].lcm) || b > a) drop = true;
          }
        }
      }
      if (drop) alive[a] = false;
    }
    for (std::size_t a = 0; a < cands.size(); ++a)
      if (alive[a] && !cands[a].coprime) kept.push_back(cands[a]);

    // Criterion B on old pairs.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Pair& p = *it;
      if (basis_[p.i].lead().comp == comp && divides(lk, p.lcm)) {
        Monomial lik = lcm(basis_[p.i].lead().mono, lk);
        Monomial ljk = lcm(basis_[p.j].lead().mono, lk);
        if (!(lik == p.lcm) && !(ljk == p.lcm)) {
          it = pairs_.erase(it);
          continue;
        }
      }
      ++it;
    }
    for (const Cand& c : kept) {
      const auto& bi = basis_[c.i];
      int si = sugar_[c.i] + (c.lcm.degree() - bi.lead().mono.degree());
      int sk = sugar_[k] + (c.lcm.degree() - lk.degree());
      pairs_.insert(Pair{std::max(si, sk), c.lcm.degree(), c.i, k, c.lcm});
    }
    for (std::size_t i = 0; i < k; ++i)
      if (!redundant_[i] && basis_[i].lead().comp == comp && divides(lk, basis_[i].lead().mono))
        redundant_[i] = true;
  }

  std::vector<BasicVec<F>> finalize() {
    // Keep elements whose leading term is not divisible by another kept one.
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < basis_.size(); ++i) idx.push_back(i);
    std::vector<BasicVec<F>> minimal;
    for (std::size_t i : idx) {
      bool drop = false;
      for (std::size_t j : idx) {
        if (i == j) continue;
        if (detail::lead_divides(basis_[j], basis_[i])) {
          bool equal_lead = basis_[j].lead().mono == basis_[i].lead().mono;
          if (!equal_lead || prefer(j, i)) {
            drop = true;
            break;
          }
        }
      }
      if (!drop) minimal.push_back(basis_[i]);
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<BasicVec<F>> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      // Tail reduction keeps the leading term.
      BasicVec<F> lead_only({minimal[i].lead()}, ord_);
      BasicVec<F> tail = minimal[i].sub_mul(0, F(1), Monomial(minimal[i].lead().mono.size()), lead_only, ord_);
      BasicVec<F> red = reduce_full(tail, others, ord_);
      std::vector<typename BasicVec<F>::TermT> terms = red.terms();
      terms.push_back(minimal[i].lead());
      minimal[i] = BasicVec<F>(std::move(terms), ord_).monic();
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const BasicVec<F>& a, const BasicVec<F>& b) { return lt_cmp(a, b) < 0; });
    return minimal;
  }

  // Among elements with equal leading terms keep the shortest, lowest ecart.
  bool prefer(std::size_t j, std::size_t i) const {
    auto key = [&](std::size_t k) { return std::make_tuple(basis_[k].ecart(), basis_[k].size(), k); };
    return key(j) < key(i);
  }

  ModuleOrder ord_;
  EngineOptions opts_;
  bool global_;
  bool product_ok_ = false;
  std::vector<BasicVec<F>> basis_;
  std::vector<int> sugar_;
  std::vector<bool> redundant_;
  std::set<Pair> pairs_;
};

namespace detail {

template <class F>
BasicVec<F> homogenize(const BasicVec<F>& v, const ModuleOrder& hord) {
  const int d = v.degree();
  std::vector<VecTerm<F>> terms;
  terms.reserve(v.size());
  for (const auto& t : v.terms()) {
    const std::size_t n = t.mono.size();
    Monomial m(n + 1);
    for (std::size_t i = 0; i < n; ++i) m.set(i, t.mono[i]);
    m.set(n, d - t.mono.degree());
    terms.push_back({m, t.comp, t.coeff});
  }
  return BasicVec<F>(std::move(terms), hord);
}

template <class F>
BasicVec<F> dehomogenize(const BasicVec<F>& v, const ModuleOrder& ord) {
  std::vector<VecTerm<F>> terms;
  terms.reserve(v.size());
  for (const auto& t : v.terms()) {
    const std::size_t n = t.mono.size() - 1;
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, t.mono[i]);
    terms.push_back({m, t.comp, t.coeff});
  }
  return BasicVec<F>(std::move(terms), ord);
}

/// Standard basis for a non-global order: a Groebner basis of the
/// homogenized generators under (total degree, order) dehomogenizes to a
/// standard basis of the localized submodule.
template <class F>
std::vector<BasicVec<F>> lazard_basis(std::vector<BasicVec<F>> gens, const ModuleOrder& ord,
                                      EngineOptions opts) {
  ModuleOrder hord{ord.ring, ord.split, true};
  std::vector<BasicVec<F>> hgens;
  for (const auto& g : gens)
    if (!g.is_zero()) hgens.push_back(homogenize(g, hord));
  auto hb = StandardBasisBuilder<F>(hord, opts).run(std::move(hgens));
  std::vector<BasicVec<F>> deh;
  for (const auto& g : hb) deh.push_back(dehomogenize(g, ord).monic());

  // Minimize: among equal leading terms keep the lowest (ecart, size, index).
  auto key = [&](std::size_t k) { return std::make_tuple(deh[k].ecart(), deh[k].size(), k); };
  std::vector<BasicVec<F>> minimal;
  for (std::size_t i = 0; i < deh.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < deh.size() && !drop; ++j) {
      if (i == j || !lead_divides(deh[j], deh[i])) continue;
      drop = !(deh[j].lead().mono == deh[i].lead().mono) || key(j) < key(i);
    }
    if (!drop) minimal.push_back(deh[i]);
  }
  Corner<F> corner(ord, rank_of(minimal));
  for (const auto& g : minimal) corner.add(g);
  for (auto& g : minimal) corner.truncate(g, 1);
  std::sort(minimal.begin(), minimal.end(), [&](const BasicVec<F>& a, const BasicVec<F>& b) {
    return ord.cmp(a.lead().mono, a.lead().comp, b.lead().mono, b.lead().comp) < 0;
  });
  return minimal;
}

}  // namespace detail

/// Standard basis: reduced Groebner basis for global orders, minimal monic
/// standard basis otherwise. Sorted ascending by leading term.
template <class F>
std::vector<BasicVec<F>> standard_basis(std::vector<BasicVec<F>> gens, const ModuleOrder& ord,
                                        EngineOptions opts = {}) {
  if (!ord.is_global()) return detail::lazard_basis(std::move(gens), ord, opts);
  return StandardBasisBuilder<F>(ord, opts).run(std::move(gens));
}

/// Whether every leading term of `wider` is divisible by one of `basis`.
template <class F>
bool same_leading_module(const std::vector<BasicVec<F>>& basis, const std::vector<BasicVec<F>>& wider) {
  return std::all_of(wider.begin(), wider.end(), [&](const BasicVec<F>& w) {
    return std::any_of(basis.begin(), basis.end(),
                       [&](const BasicVec<F>& g) { return detail::lead_divides(g, w); });
  });
}

/// Membership of every element of `fs` in the submodule with standard basis
/// `basis` (localized for non-global orders). Non-global orders try a
/// bounded Mora reduction first and otherwise compare leading modules of
/// <basis> and <basis, fs>, which agree exactly when the submodules do.
template <class F>
bool contains_all(const std::vector<BasicVec<F>>& basis, const std::vector<BasicVec<F>>& fs,
                  const ModuleOrder& ord, EngineOptions opts = {}) {
  if (ord.is_global()) {
    return std::all_of(fs.begin(), fs.end(),
                       [&](const BasicVec<F>& f) { return reduce_top(f, basis, ord).is_zero(); });
  }
  std::vector<BasicVec<F>> rest;
  for (const auto& f : fs) {
    auto h = detail::mora_reduce(f, basis, ord, 200);
    if (!h) {
      rest.push_back(f);
    } else if (!h->is_zero()) {
      return false;
    }
  }
  if (rest.empty()) return true;
  std::vector<BasicVec<F>> gens = basis;
  gens.insert(gens.end(), rest.begin(), rest.end());
  return same_leading_module(basis, standard_basis(std::move(gens), ord, opts));
}

template <class F>
bool contains(const std::vector<BasicVec<F>>& basis, const BasicVec<F>& f, const ModuleOrder& ord,
              EngineOptions opts = {}) {
  return contains_all(basis, std::vector<BasicVec<F>>{f}, ord, opts);
}

/// Generators of U ∩ (0 ⊕ R^b) projected to R^b, where U ⊂ R^{split+b} is
/// generated by `gens`. The elimination module order puts components below
/// `split` in a dominant block.
template <class F>
std::vector<BasicVec<F>> eliminate_components(std::vector<BasicVec<F>> gens, std::size_t split,
                                              const MonomialOrder& ring_order, EngineOptions opts = {}) {
  ModuleOrder ord{ring_order, split};
  for (auto& g : gens) g.resort(ord);
  auto sb = standard_basis(std::move(gens), ord, opts);
  std::vector<BasicVec<F>> out;
  for (auto& v : sb)
    if (v.lead().comp >= split) out.push_back(v.shifted(static_cast<std::uint32_t>(split)));
  return out;
}

}  // namespace singulocus
