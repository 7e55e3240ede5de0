#include "singulocus/ideal_calculus.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace singulocus {
namespace {

void check_same(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring())) throw RingMismatch();
}

// Basis elements of a ring built by extend_front with `k` new variables that
// do not involve the new variables, mapped back into `base`.
std::vector<Poly> drop_front(const std::vector<Vec>& basis, std::size_t k, const RingPtr& base) {
  std::vector<Poly> out;
  for (const auto& v : basis) {
    bool free = true;
    for (const auto& t : v.terms()) {
      for (std::size_t i = 0; i < k && free; ++i)
        if (t.mono[i] != 0) free = false;
      if (!free) break;
    }
    if (!free) continue;
    std::vector<Term<Rational>> terms;
    for (const auto& t : v.terms()) {
      Monomial m(base->nvars());
      for (std::size_t i = 0; i < base->nvars(); ++i) m.set(i, t.mono[k + i]);
      terms.push_back({m, t.coeff});
    }
    out.push_back(Poly(base->poly_ring(), std::move(terms)));
  }
  return out;
}

std::vector<std::size_t> shift_map(std::size_t n, std::size_t k) {
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), k);
  return map;
}

// Degree D with 𝔪^D ⊆ I for a local ideal of finite colength: every variable
// has a pure power x_i^{a_i} among the leading terms, and D = Σ(a_i - 1) + 1.
std::optional<int> corner_degree(const Ideal& I) {
  const std::size_t n = I.ring()->nvars();
  std::vector<int> pure(n, -1);
  for (const auto& v : I.basis_vecs()) {
    const Monomial& m = v.lead().mono;
    std::size_t nonzero = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] != 0) ++nonzero, var = i;
    if (nonzero == 1 && (pure[var] < 0 || m[var] < pure[var])) pure[var] = m[var];
  }
  int d = 1;
  for (int a : pure) {
    if (a < 0) return std::nullopt;
    d += a - 1;
  }
  return d;
}

void monomials_of_degree(const PolyRingPtr& ring, Monomial& m, std::size_t var, int left,
                         std::vector<Poly>& out) {
  if (var + 1 == m.size()) {
    m.set(var, left);
    out.push_back(Poly(ring, {{m, Rational(1)}}));
    return;
  }
  for (int e = left; e >= 0; --e) {
    m.set(var, e);
    monomials_of_degree(ring, m, var + 1, left - e, out);
  }
  m.set(var, 0);
}

}  // namespace

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  check_same(I, J);
  std::vector<Poly> g = I.gens();
  g.insert(g.end(), J.gens().begin(), J.gens().end());
  return Ideal(I.ring(), std::move(g));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  check_same(I, J);
  std::vector<Poly> g;
  for (const auto& a : I.gens())
    for (const auto& b : J.gens()) {
      Poly p = I.ring()->reduce(a * b);
      if (!p.is_zero() && std::find(g.begin(), g.end(), p) == g.end()) g.push_back(std::move(p));
    }
  return Ideal(I.ring(), std::move(g));
}

Ideal ideal_power(const Ideal& I, unsigned k) {
  Ideal acc = Ideal::whole(I.ring());
  Ideal base = I.simplified();
  for (unsigned i = 0; i < k; ++i) acc = ideal_product(acc, base).simplified();
  return acc;
}

Ideal irredundant(const Ideal& I) {
  const RingPtr& R = I.ring();
  std::vector<Poly> cand = I.simplified().gens();
  std::stable_sort(cand.begin(), cand.end(), [](const Poly& a, const Poly& b) {
    return std::pair(a.degree(), a.size()) < std::pair(b.degree(), b.size());
  });
  std::vector<Poly> keep;
  for (auto& g : cand)
    if (!Ideal(R, keep).contains(g)) keep.push_back(std::move(g));
  for (std::size_t i = keep.size(); i-- > 0;) {
    std::vector<Poly> others = keep;
    others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
    if (Ideal(R, others).contains(keep[i])) keep = std::move(others);
  }
  return Ideal(R, std::move(keep));
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
  check_same(I, J);
  const RingPtr& R = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal::zero(R);
  if (I.is_whole()) return J;
  if (J.is_whole()) return I;
  RingPtr ext = R->extend_front({"@t"}, MonomialOrder::degrevlex(1));
  auto map = shift_map(R->nvars(), 1);
  Poly t = ext->var(0);
  Poly one_minus_t = ext->one() - t;
  std::vector<Vec> gens;
  for (const auto& f : I.gens()) gens.push_back(ext->to_vec(t * f.map_into(ext->poly_ring(), map)));
  for (const auto& g : J.gens()) gens.push_back(ext->to_vec(one_minus_t * g.map_into(ext->poly_ring(), map)));
  return Ideal(R, drop_front(ext->standard_basis(std::move(gens), 1), 1, R));
}

Ideal ideal_intersect(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw std::invalid_argument("intersection of an empty family");
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = ideal_intersect(acc, ideals[i]);
  return acc;
}

Ideal ideal_quotient(const Ideal& I, const Poly& g) {
  const RingPtr& R = I.ring();
  if (R->in_quotient(g)) return Ideal::whole(R);
  std::vector<Vec> gens;
  gens.push_back(R->to_vec(ModuleVector{g, R->one()}));
  for (const auto& f : I.gens())
    if (!f.is_zero()) gens.push_back(R->to_vec(f, 0));
  std::vector<Poly> out;
  for (const auto& v : R->kernel(std::move(gens), 1, 1)) out.push_back(v.component(0, R->poly_ring()));
  return Ideal(R, std::move(out));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
  check_same(I, J);
  Ideal Js = J.simplified();
  if (Js.gens().empty()) return Ideal::whole(I.ring());
  if (I.is_whole()) return I;
  std::vector<Ideal> parts;
  for (const auto& g : Js.gens()) parts.push_back(ideal_quotient(I, g));
  return ideal_intersect(parts);
}

Ideal saturation(const Ideal& I, const Ideal& J) {
  check_same(I, J);
  Ideal K = I;
  for (;;) {
    Ideal next = ideal_quotient(K, J);
    if (K.contains(next)) return K;
    K = next;
  }
}

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& vars) {
  const RingPtr& R = I.ring();
  const std::size_t n = R->nvars();
  std::vector<bool> elim(n, false);
  for (auto v : vars) {
    if (v >= n) throw std::out_of_range("eliminate: variable index");
    elim[v] = true;
  }
  const std::size_t k = static_cast<std::size_t>(std::count(elim.begin(), elim.end(), true));
  if (k == 0) return I;
  // New position of each variable: eliminated ones first.
  std::vector<std::size_t> map(n);
  std::vector<std::string> names(n);
  std::size_t a = 0, b = k;
  for (std::size_t i = 0; i < n; ++i) {
    map[i] = elim[i] ? a++ : b++;
    names[map[i]] = R->var_names()[i];
  }
  MonomialOrder rest = R->is_global() ? MonomialOrder::degrevlex(n - k) : MonomialOrder::neg_degrevlex(n - k);
  auto pr = make_poly_ring(names, MonomialOrder::block(MonomialOrder::degrevlex(k), rest));
  std::vector<Poly> q;
  for (const auto& f : R->quotient()) q.push_back(f.map_into(pr, map));
  RingPtr ext = Ring::create(pr, std::move(q), R->characteristic());
  std::vector<Vec> gens;
  for (const auto& f : I.gens())
    if (!f.is_zero()) gens.push_back(ext->to_vec(f.map_into(pr, map)));
  std::vector<Vec> basis = ext->standard_basis(std::move(gens), 1);
  std::vector<std::size_t> back(n);
  for (std::size_t i = 0; i < n; ++i) back[map[i]] = i;
  std::vector<Poly> out;
  for (const auto& v : basis) {
    bool free = true;
    for (const auto& t : v.terms())
      for (std::size_t i = 0; i < k; ++i)
        if (t.mono[i] != 0) free = false;
    if (free) out.push_back(v.component(0, pr).map_into(R->poly_ring(), back));
  }
  return Ideal(R, std::move(out));
}

std::string to_string(Truth t) {
  switch (t) {
    case Truth::True: return "true";
    case Truth::False: return "false";
    case Truth::Undetermined: return "undetermined at bound";
  }
  return "?";
}

Truth truth_and(Truth a, Truth b) {
  if (a == Truth::False || b == Truth::False) return Truth::False;
  if (a == Truth::Undetermined || b == Truth::Undetermined) return Truth::Undetermined;
  return Truth::True;
}

Truth radical_member(const Poly& f, const Ideal& I, int power_bound) {
  const RingPtr& R = I.ring();
  if (R->is_global()) {
    if (I.contains(f)) return Truth::True;
    RingPtr ext = R->extend_front({"@y"}, MonomialOrder::degrevlex(1));
    auto map = shift_map(R->nvars(), 1);
    std::vector<Vec> gens;
    for (const auto& g : I.gens())
      if (!g.is_zero()) gens.push_back(ext->to_vec(g.map_into(ext->poly_ring(), map)));
    gens.push_back(ext->to_vec(ext->one() - ext->var(0) * f.map_into(ext->poly_ring(), map)));
    for (const auto& v : ext->standard_basis(std::move(gens), 1))
      if (v.lead().mono.is_one()) return Truth::True;
    return Truth::False;
  }
  // The local ideal is whole iff some generator is a unit, and a unit lies
  // in no proper ideal, nor in its radical.
  auto unit = [](const Poly& g) { return !FieldTraits<Rational>::is_zero(g.constant_coeff()); };
  const std::vector<Poly> local = I.canonical_gens();
  if (std::any_of(local.begin(), local.end(), unit)) return Truth::True;
  if (unit(f)) return Truth::False;
  const int bound = power_bound > 0 ? power_bound : settings().power_bound.load();
  // f^t ∈ I·R_𝔪 iff (I + Q) : f^t, taken in the global ring, leaves 𝔪.
  RingPtr G = R->with_order(MonomialOrder::degrevlex(R->nvars()));
  std::vector<Poly> gens;
  for (const auto& g : local) gens.push_back(g.with_ring(G->poly_ring()));
  // 𝔪^D ⊆ I·R_𝔪 leaves the local ideal unchanged and cuts away the other
  // components of the global one.
  if (auto d = corner_degree(I); d && R->nvars() > 0) {
    Monomial m(R->nvars());
    monomials_of_degree(G->poly_ring(), m, 0, *d, gens);
  }
  const Poly fg = f.with_ring(G->poly_ring());
  Ideal K(G, std::move(gens));
  for (int t = 1; t <= bound; ++t) {
    Ideal next = ideal_quotient(K, fg);
    const Ideal simple = next.simplified();
    if (std::any_of(simple.gens().begin(), simple.gens().end(), unit)) return Truth::True;
    if (K.contains(next)) break;
    K = std::move(next);
  }
  return Truth::Undetermined;
}

Truth radical_contained(const Ideal& I, const Ideal& J, int power_bound) {
  Truth acc = Truth::True;
  // Standard-basis generators of a local ideal are far smaller than the
  // unit multiples that kernels and saturations produce.
  for (const auto& g : I.ring()->is_global() ? I.gens() : I.canonical_gens()) {
    acc = truth_and(acc, radical_member(g, J, power_bound));
    if (acc == Truth::False) break;
  }
  return acc;
}

RadicalReport radical_equal(const Ideal& I, const Ideal& J, int power_bound) {
  return {radical_contained(I, J, power_bound), radical_contained(J, I, power_bound)};
}

}  // namespace singulocus
