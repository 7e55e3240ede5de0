#pragma once

#include "singulocus/module_vector.hpp"
#include "singulocus/poly.hpp"
#include "singulocus/standard_basis.hpp"

#include <atomic>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

namespace singulocus {

/// Process-wide engine limits.
struct Settings {
  std::atomic<int> degree_cap{40};
  std::atomic<int> power_bound{30};
};
Settings& settings();

using Vec = BasicVec<Rational>;
/// Element of R^m as a list of m polynomials.
using ModuleVector = std::vector<Poly>;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// R = k[x]/Q, or its localization at the origin when the order is not
/// global. Coefficients are rationals; a nonzero characteristic (from a small
/// fixed list of primes) reinterprets them in GF(p).
class Ring {
 public:
  static RingPtr create(PolyRingPtr poly_ring, std::vector<Poly> quotient = {},
                        std::uint32_t characteristic = 0);
  static RingPtr create(std::vector<std::string> vars, MonomialOrder order,
                        const std::vector<std::string>& quotient = {},
                        std::uint32_t characteristic = 0);

  static const std::vector<std::uint32_t>& supported_characteristics();

  const PolyRingPtr& poly_ring() const { return poly_ring_; }
  std::size_t nvars() const { return poly_ring_->nvars(); }
  const std::vector<std::string>& var_names() const { return poly_ring_->vars; }
  const MonomialOrder& order() const { return poly_ring_->order; }
  bool is_global() const { return order().is_global(); }
  bool is_local() const { return order().is_local(); }
  std::uint32_t characteristic() const { return char_; }

  const std::vector<Poly>& quotient() const { return quotient_; }
  bool has_quotient() const { return !quotient_.empty(); }
  /// Reduced Groebner basis of Q for degrevlex, as polynomials of this ring.
  const std::vector<Poly>& quotient_groebner() const { return q_gb_; }

  Poly zero() const { return Poly(poly_ring_); }
  Poly one() const { return Poly(poly_ring_, Rational(1)); }
  Poly constant(const Rational& c) const { return Poly(poly_ring_, normalize_coeff(c)); }
  Poly var(std::size_t i) const { return Poly::variable(poly_ring_, i); }
  Poly parse(std::string_view text) const;

  /// Normal form modulo the global Groebner basis of Q (canonical
  /// representative of the class in k[x]/Q).
  Poly reduce(const Poly& f) const;
  /// f ∈ Q·R (localized when the order is not global).
  bool in_quotient(const Poly& f) const;
  /// Coefficients mapped to canonical representatives of the field.
  Poly normalize(const Poly& f) const;
  Rational normalize_coeff(const Rational& c) const;

  ModuleOrder module_order(std::size_t split = 0) const { return ModuleOrder{order(), split}; }

  /// Standard basis of the submodule of R^rank generated by `gens` + Q*e_i.
  std::vector<Vec> standard_basis(std::vector<Vec> gens, std::size_t rank, std::size_t split = 0) const;
  /// Whether every element of `fs` lies in the submodule whose standard
  /// basis (from standard_basis) is `basis`.
  bool contains(const std::vector<Vec>& basis, const std::vector<Vec>& fs, std::size_t split = 0) const;
  /// Full (tail) reduction; only meaningful for global orders.
  Vec reduce_full(const Vec& f, const std::vector<Vec>& basis) const;

  /// For U ⊂ R^{split+tail} generated by `gens` and Q*e_i (i < split, and
  /// i >= split when `quotient_in_tail`), generators of the projection of
  /// U ∩ (0 ⊕ R^tail) onto R^tail.
  std::vector<Vec> kernel(std::vector<Vec> gens, std::size_t split, std::size_t tail,
                          bool quotient_in_tail = false) const;

  Vec to_vec(const ModuleVector& v, std::size_t split = 0) const;
  Vec to_vec(const Poly& f, std::uint32_t comp = 0, std::size_t split = 0) const;
  ModuleVector from_vec(const Vec& v, std::size_t rank) const;

  /// New ring with `front` variables prepended under their own order block;
  /// the quotient is carried over. Old variable i becomes front.size() + i.
  RingPtr extend_front(const std::vector<std::string>& front, const MonomialOrder& front_order) const;
  /// Same variables and quotient, different order.
  RingPtr with_order(const MonomialOrder& order) const;

  /// Move a polynomial from a ring with the same variables.
  Poly import(const Poly& f) const;

 private:
  Ring() = default;
  void init();

  PolyRingPtr poly_ring_;
  std::vector<Poly> quotient_;
  std::uint32_t char_ = 0;
  PolyRingPtr global_ring_;
  std::vector<Vec> q_gb_vec_;
  std::vector<Poly> q_gb_;
  std::vector<Vec> q_sb_vec_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && same_ring(a->poly_ring(), b->poly_ring()) &&
                    a->characteristic() == b->characteristic() && a->quotient() == b->quotient());
}

/// Finitely generated ideal of a Ring, with a lazily computed standard basis
/// of gens + Q shared between copies.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Poly> gens);
  static Ideal whole(const RingPtr& ring) { return Ideal(ring, {ring->one()}); }
  static Ideal zero(const RingPtr& ring) { return Ideal(ring, {}); }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }

  const std::vector<Vec>& basis_vecs() const;
  std::vector<Poly> standard_basis() const;

  bool contains(const Poly& f) const;
  /// J ⊆ this
  bool contains(const Ideal& J) const;
  bool equals(const Ideal& J) const { return contains(J) && J.contains(*this); }
  bool is_whole() const;
  bool is_zero() const;

  /// Generators made monic, without zeros, duplicates or elements of Q.
  Ideal simplified() const;
  /// Deterministic minimal generating set (see canonical_gens).
  Ideal canonical() const { return Ideal(ring_, canonical_gens()); }
  /// Minimal standard basis of gens + Q without the elements of Q, with tails
  /// simplified, monic, sorted by (degree of leading term, leading term).
  std::vector<Poly> canonical_gens() const;
  /// `1`, `0`, or the canonical generators joined by ", ".
  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Vec> basis;
  };
  RingPtr ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Submodule of R^rank.
class Submodule {
 public:
  Submodule() = default;
  Submodule(RingPtr ring, std::size_t rank, std::vector<ModuleVector> gens);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const std::vector<ModuleVector>& gens() const { return gens_; }

  const std::vector<Vec>& basis_vecs() const;
  bool contains(const ModuleVector& v) const;
  bool contains(const Submodule& N) const;
  bool equals(const Submodule& N) const { return contains(N) && N.contains(*this); }
  bool is_zero() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Vec> basis;
  };
  RingPtr ring_;
  std::size_t rank_ = 0;
  std::vector<ModuleVector> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Leading monomial order helper: ascending by (degree, ring order).
bool canonical_less(const Poly& a, const Poly& b);

}  // namespace singulocus
