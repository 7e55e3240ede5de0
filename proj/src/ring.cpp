#include "singulocus/ring.hpp"

#include "singulocus/poly_parse.hpp"

#include <algorithm>
#include <type_traits>

namespace singulocus {

Settings& settings() {
  static Settings s;
  return s;
}

namespace {

template <class Fn>
decltype(auto) with_field(std::uint32_t p, Fn&& fn) {
  switch (p) {
    case 0: return fn(std::type_identity<Rational>{});
    case 2: return fn(std::type_identity<ModP<2>>{});
    case 3: return fn(std::type_identity<ModP<3>>{});
    case 5: return fn(std::type_identity<ModP<5>>{});
    case 7: return fn(std::type_identity<ModP<7>>{});
    case 101: return fn(std::type_identity<ModP<101>>{});
    case 32003: return fn(std::type_identity<ModP<32003>>{});
    default: break;
  }
  throw std::invalid_argument("unsupported characteristic " + std::to_string(p));
}

template <class F>
BasicVec<F> to_field(const Vec& v, const ModuleOrder& ord) {
  std::vector<VecTerm<F>> t;
  t.reserve(v.size());
  for (const auto& x : v.terms()) t.push_back({x.mono, x.comp, FieldTraits<F>::from_rational(x.coeff)});
  return BasicVec<F>(std::move(t), ord);
}

template <class F>
Vec from_field(const BasicVec<F>& v, const ModuleOrder& ord) {
  std::vector<VecTerm<Rational>> t;
  t.reserve(v.size());
  for (const auto& x : v.terms()) t.push_back({x.mono, x.comp, FieldTraits<F>::to_rational(x.coeff)});
  return Vec(std::move(t), ord);
}

template <class F>
std::vector<BasicVec<F>> to_field(const std::vector<Vec>& v, const ModuleOrder& ord) {
  std::vector<BasicVec<F>> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_field<F>(x, ord));
  return out;
}

template <class F>
std::vector<Vec> from_field(const std::vector<BasicVec<F>>& v, const ModuleOrder& ord) {
  std::vector<Vec> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(from_field<F>(x, ord));
  return out;
}

EngineOptions engine_options() { return EngineOptions{settings().degree_cap.load()}; }

std::vector<Vec> run_basis(std::uint32_t p, std::vector<Vec> gens, const ModuleOrder& ord) {
  for (auto& g : gens) g.resort(ord);
  return with_field(p, [&](auto tag) {
    using F = typename decltype(tag)::type;
    if constexpr (std::is_same_v<F, Rational>) {
      return standard_basis(std::move(gens), ord, engine_options());
    } else {
      return from_field<F>(standard_basis(to_field<F>(gens, ord), ord, engine_options()), ord);
    }
  });
}

Vec run_reduce_full(std::uint32_t p, const Vec& f, const std::vector<Vec>& basis, const ModuleOrder& ord) {
  Vec g = f;
  g.resort(ord);
  return with_field(p, [&](auto tag) {
    using F = typename decltype(tag)::type;
    if constexpr (std::is_same_v<F, Rational>) {
      return reduce_full(g, basis, ord);
    } else {
      return from_field<F>(reduce_full(to_field<F>(g, ord), to_field<F>(basis, ord), ord), ord);
    }
  });
}

bool run_contains(std::uint32_t p, std::vector<Vec> fs, const std::vector<Vec>& basis, const ModuleOrder& ord) {
  for (auto& f : fs) f.resort(ord);
  std::erase_if(fs, [](const Vec& f) { return f.is_zero(); });
  if (fs.empty()) return true;
  return with_field(p, [&](auto tag) {
    using F = typename decltype(tag)::type;
    if constexpr (std::is_same_v<F, Rational>) {
      return contains_all(basis, fs, ord, engine_options());
    } else {
      return contains_all(to_field<F>(basis, ord), to_field<F>(fs, ord), ord, engine_options());
    }
  });
}

}  // namespace

const std::vector<std::uint32_t>& Ring::supported_characteristics() {
  static const std::vector<std::uint32_t> ps{0, 2, 3, 5, 7, 101, 32003};
  return ps;
}

RingPtr Ring::create(PolyRingPtr poly_ring, std::vector<Poly> quotient, std::uint32_t characteristic) {
  const auto& ps = supported_characteristics();
  if (std::find(ps.begin(), ps.end(), characteristic) == ps.end())
    throw std::invalid_argument("unsupported characteristic " + std::to_string(characteristic));
  for (const auto& q : quotient)
    if (!same_ring(q.ring(), poly_ring)) throw RingMismatch();
  std::shared_ptr<Ring> r(new Ring());
  r->poly_ring_ = std::move(poly_ring);
  r->char_ = characteristic;
  r->quotient_ = std::move(quotient);
  r->init();
  return r;
}

RingPtr Ring::create(std::vector<std::string> vars, MonomialOrder order,
                     const std::vector<std::string>& quotient, std::uint32_t characteristic) {
  auto pr = make_poly_ring(std::move(vars), std::move(order));
  std::vector<Poly> q;
  for (const auto& s : quotient) q.push_back(parse_poly(pr, s));
  return create(pr, std::move(q), characteristic);
}

void Ring::init() {
  std::vector<Poly> q;
  for (const auto& f : quotient_) {
    Poly g = normalize(f);
    if (!g.is_zero()) q.push_back(g);
  }
  quotient_ = std::move(q);
  global_ring_ = is_global() ? poly_ring_ : make_poly_ring(poly_ring_->vars, MonomialOrder::degrevlex(nvars()));
  ModuleOrder gord{global_ring_->order, 0};
  std::vector<Vec> gens;
  for (const auto& f : quotient_) gens.push_back(Vec::from_poly(f.with_ring(global_ring_), 0, gord));
  q_gb_vec_ = run_basis(char_, gens, gord);
  q_gb_.clear();
  for (const auto& v : q_gb_vec_) q_gb_.push_back(v.component(0, global_ring_).with_ring(poly_ring_));
  if (is_global()) {
    q_sb_vec_ = q_gb_vec_;
  } else {
    std::vector<Vec> lg;
    for (const auto& f : quotient_) lg.push_back(Vec::from_poly(f, 0, module_order()));
    q_sb_vec_ = run_basis(char_, lg, module_order());
  }
}

Rational Ring::normalize_coeff(const Rational& c) const {
  if (char_ == 0) return c;
  return with_field(char_, [&](auto tag) {
    using F = typename decltype(tag)::type;
    return FieldTraits<F>::to_rational(FieldTraits<F>::from_rational(c));
  });
}

Poly Ring::normalize(const Poly& f) const {
  if (char_ == 0) return f;
  std::vector<Term<Rational>> t;
  for (const auto& x : f.terms()) t.push_back({x.mono, normalize_coeff(x.coeff)});
  return Poly(f.ring(), std::move(t));
}

Poly Ring::parse(std::string_view text) const { return normalize(parse_poly(poly_ring_, text)); }

Poly Ring::reduce(const Poly& f) const {
  if (!same_ring(f.ring(), poly_ring_)) throw RingMismatch();
  Poly g = normalize(f);
  if (quotient_.empty() || g.is_zero()) return g;
  ModuleOrder gord{global_ring_->order, 0};
  Vec v = Vec::from_poly(g.with_ring(global_ring_), 0, gord);
  Vec r = run_reduce_full(char_, v, q_gb_vec_, gord);
  return r.component(0, global_ring_).with_ring(poly_ring_);
}

bool Ring::in_quotient(const Poly& f) const {
  if (f.is_zero()) return true;
  if (quotient_.empty()) return normalize(f).is_zero();
  return run_contains(char_, {to_vec(f)}, q_sb_vec_, module_order());
}

std::vector<Vec> Ring::standard_basis(std::vector<Vec> gens, std::size_t rank, std::size_t split) const {
  ModuleOrder ord = module_order(split);
  for (std::size_t i = 0; i < rank; ++i)
    for (const auto& q : quotient_) gens.push_back(Vec::from_poly(q, static_cast<std::uint32_t>(i), ord));
  return run_basis(char_, std::move(gens), ord);
}

bool Ring::contains(const std::vector<Vec>& basis, const std::vector<Vec>& fs, std::size_t split) const {
  return run_contains(char_, fs, basis, module_order(split));
}

Vec Ring::reduce_full(const Vec& f, const std::vector<Vec>& basis) const {
  return run_reduce_full(char_, f, basis, module_order());
}

std::vector<Vec> Ring::kernel(std::vector<Vec> gens, std::size_t split, std::size_t tail,
                              bool quotient_in_tail) const {
  ModuleOrder ord = module_order(split);
  const std::size_t upto = quotient_in_tail ? split + tail : split;
  for (std::size_t i = 0; i < upto; ++i)
    for (const auto& q : quotient_) gens.push_back(Vec::from_poly(q, static_cast<std::uint32_t>(i), ord));
  std::vector<Vec> sb = run_basis(char_, std::move(gens), ord);
  std::vector<Vec> out;
  ModuleOrder tail_ord = module_order();
  for (auto& v : sb) {
    if (v.lead().comp < split) continue;
    Vec s = v.shifted(static_cast<std::uint32_t>(split));
    s.resort(tail_ord);
    out.push_back(std::move(s));
  }
  return out;
}

Vec Ring::to_vec(const ModuleVector& v, std::size_t split) const {
  std::vector<VecTerm<Rational>> t;
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (!same_ring(v[c].ring(), poly_ring_)) throw RingMismatch();
    for (const auto& x : v[c].terms()) t.push_back({x.mono, static_cast<std::uint32_t>(c), x.coeff});
  }
  return Vec(std::move(t), module_order(split));
}

Vec Ring::to_vec(const Poly& f, std::uint32_t comp, std::size_t split) const {
  if (!same_ring(f.ring(), poly_ring_)) throw RingMismatch();
  return Vec::from_poly(f, comp, module_order(split));
}

ModuleVector Ring::from_vec(const Vec& v, std::size_t rank) const {
  ModuleVector out(rank, zero());
  std::vector<std::vector<Term<Rational>>> parts(rank);
  for (const auto& t : v.terms()) {
    if (t.comp >= rank) throw std::out_of_range("module component");
    parts[t.comp].push_back({t.mono, t.coeff});
  }
  for (std::size_t c = 0; c < rank; ++c) out[c] = Poly(poly_ring_, std::move(parts[c]));
  return out;
}

RingPtr Ring::extend_front(const std::vector<std::string>& front, const MonomialOrder& front_order) const {
  std::vector<std::string> vars = front;
  for (const auto& v : poly_ring_->vars) {
    if (std::find(front.begin(), front.end(), v) != front.end())
      throw std::invalid_argument("variable name clash: " + v);
    vars.push_back(v);
  }
  auto pr = make_poly_ring(std::move(vars), MonomialOrder::block(front_order, order()));
  std::vector<std::size_t> map(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) map[i] = front.size() + i;
  std::vector<Poly> q;
  for (const auto& f : quotient_) q.push_back(f.map_into(pr, map));
  return create(pr, std::move(q), char_);
}

RingPtr Ring::with_order(const MonomialOrder& ord) const {
  auto pr = make_poly_ring(poly_ring_->vars, ord);
  std::vector<Poly> q;
  for (const auto& f : quotient_) q.push_back(f.with_ring(pr));
  return create(pr, std::move(q), char_);
}

Poly Ring::import(const Poly& f) const {
  if (same_ring(f.ring(), poly_ring_)) return f;
  if (f.ring()->vars != poly_ring_->vars) throw RingMismatch();
  return f.with_ring(poly_ring_);
}

bool canonical_less(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return !a.is_zero() < !b.is_zero();
  int da = a.lead_monomial().degree(), db = b.lead_monomial().degree();
  if (da != db) return da < db;
  int c = a.ring()->order.cmp(a.lead_monomial(), b.lead_monomial());
  if (c != 0) return c < 0;
  return a.to_string() < b.to_string();
}

// ---------------------------------------------------------------- Ideal

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {
  for (auto& g : gens_) {
    if (!same_ring(g.ring(), ring_->poly_ring())) throw RingMismatch();
    g = ring_->normalize(g);
  }
}

const std::vector<Vec>& Ideal::basis_vecs() const {
  std::call_once(cache_->once, [&] {
    std::vector<Vec> v;
    for (const auto& g : gens_)
      if (!g.is_zero()) v.push_back(ring_->to_vec(g));
    cache_->basis = ring_->standard_basis(std::move(v), 1);
  });
  return cache_->basis;
}

std::vector<Poly> Ideal::standard_basis() const {
  std::vector<Poly> out;
  for (const auto& v : basis_vecs()) out.push_back(v.component(0, ring_->poly_ring()));
  return out;
}

bool Ideal::contains(const Poly& f) const {
  if (f.is_zero()) return true;
  return ring_->contains(basis_vecs(), {ring_->to_vec(ring_->normalize(f))});
}

bool Ideal::contains(const Ideal& J) const {
  if (!same_ring(ring_, J.ring_)) throw RingMismatch();
  if (is_whole()) return true;
  std::vector<Vec> fs;
  for (const auto& g : J.gens_) fs.push_back(ring_->to_vec(ring_->normalize(g)));
  return ring_->contains(basis_vecs(), fs);
}

bool Ideal::is_whole() const {
  for (const auto& v : basis_vecs())
    if (v.lead().mono.is_one()) return true;
  return false;
}

bool Ideal::is_zero() const {
  for (const auto& g : gens_)
    if (!ring_->in_quotient(g)) return false;
  return true;
}

Ideal Ideal::simplified() const {
  std::vector<Poly> out;
  for (const auto& g : gens_) {
    if (ring_->in_quotient(g)) continue;
    Poly m = g.monic();
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
  }
  return Ideal(ring_, std::move(out));
}

std::vector<Poly> Ideal::canonical_gens() const {
  if (is_whole()) return {ring_->one()};
  std::vector<Poly> out;
  const auto& pr = ring_->poly_ring();
  for (const auto& v : basis_vecs()) {
    Poly g = v.component(0, pr);
    if (ring_->in_quotient(g)) continue;
    if (!ring_->is_global()) {
      Poly lead(pr, g.lead_monomial());
      if (contains(lead)) {
        g = lead;
      } else {
        std::vector<Term<Rational>> kept{g.terms().front()};
        for (std::size_t i = 1; i < g.size(); ++i)
          if (!contains(Poly(pr, g.terms()[i].mono))) kept.push_back(g.terms()[i]);
        g = Poly(pr, std::move(kept));
      }
      g = ring_->reduce(g);
      if (g.is_zero()) continue;
    }
    g = g.monic();
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  // Drop generators lying in the ideal of the others (modulo Q), largest first.
  for (std::size_t i = out.size(); i-- > 0 && out.size() > 1;) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < out.size(); ++j)
      if (j != i) others.push_back(out[j]);
    if (Ideal(ring_, others).contains(out[i])) out.erase(out.begin() + static_cast<long>(i));
  }
  return out;
}

std::string Ideal::to_string() const {
  auto gens = canonical_gens();
  if (gens.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += gens[i].to_string();
  }
  return s;
}

// ---------------------------------------------------------------- Submodule

Submodule::Submodule(RingPtr ring, std::size_t rank, std::vector<ModuleVector> gens)
    : ring_(std::move(ring)), rank_(rank), gens_(std::move(gens)) {
  for (auto& g : gens_) {
    if (g.size() != rank_) throw std::invalid_argument("module vector length does not match rank");
    for (auto& p : g) p = ring_->normalize(p);
  }
}

const std::vector<Vec>& Submodule::basis_vecs() const {
  std::call_once(cache_->once, [&] {
    std::vector<Vec> v;
    for (const auto& g : gens_) {
      Vec x = ring_->to_vec(g);
      if (!x.is_zero()) v.push_back(std::move(x));
    }
    cache_->basis = ring_->standard_basis(std::move(v), rank_);
  });
  return cache_->basis;
}

bool Submodule::contains(const ModuleVector& v) const {
  if (v.size() != rank_) throw std::invalid_argument("module vector length does not match rank");
  Vec x = ring_->to_vec(v);
  if (x.is_zero()) return true;
  return ring_->contains(basis_vecs(), {x});
}

bool Submodule::contains(const Submodule& N) const {
  if (N.rank_ != rank_) throw std::invalid_argument("rank mismatch");
  std::vector<Vec> fs;
  for (const auto& g : N.gens_) fs.push_back(ring_->to_vec(g));
  return ring_->contains(basis_vecs(), fs);
}

bool Submodule::is_zero() const {
  for (const auto& g : gens_)
    for (const auto& p : g)
      if (!ring_->in_quotient(p)) return false;
  return true;
}

}  // namespace singulocus
