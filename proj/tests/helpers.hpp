#pragma once

#include "singulocus/ideal_calculus.hpp"
#include "singulocus/matrix.hpp"
#include "singulocus/module_calculus.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing_util {

using namespace singulocus;

inline RingPtr global_ring(std::vector<std::string> vars, std::vector<std::string> q = {}) {
  auto n = vars.size();
  return Ring::create(std::move(vars), MonomialOrder::degrevlex(n), q);
}

inline RingPtr local_ring(std::vector<std::string> vars, std::vector<std::string> q = {}) {
  auto n = vars.size();
  return Ring::create(std::move(vars), MonomialOrder::neg_degrevlex(n), q);
}

inline Ideal ideal(const RingPtr& r, const std::vector<std::string>& gens) {
  std::vector<Poly> g;
  for (const auto& s : gens) g.push_back(r->parse(s));
  return Ideal(r, std::move(g));
}

/// Random polynomial with `terms` terms of total degree in [min_deg, max_deg]
/// and small integer coefficients.
inline Poly random_poly(std::mt19937& rng, const RingPtr& r, int terms, int min_deg, int max_deg) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> deg(min_deg, max_deg);
  std::uniform_int_distribution<std::size_t> var(0, r->nvars() - 1);
  Poly f = r->zero();
  for (int t = 0; t < terms; ++t) {
    int c = coeff(rng);
    if (c == 0) continue;
    Monomial m(r->nvars());
    for (int d = deg(rng); d > 0; --d) {
      std::size_t i = var(rng);
      m.set(i, m[i] + 1);
    }
    f += Poly(r->poly_ring(), m, Rational(c));
  }
  return f;
}

inline RMat random_matrix(std::mt19937& rng, const RingPtr& r, std::size_t m, std::size_t n, int min_deg,
                          int max_deg, int terms = 2) {
  RMat a(r, m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = random_poly(rng, r, terms, min_deg, max_deg);
  return a;
}

inline RMat random_skew(std::mt19937& rng, const RingPtr& r, std::size_t m, int min_deg, int max_deg,
                        int terms = 2) {
  RMat a(r, m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      a(i, j) = random_poly(rng, r, terms, min_deg, max_deg);
      a(j, i) = -a(i, j);
    }
  return a;
}

inline RMat random_symmetric(std::mt19937& rng, const RingPtr& r, std::size_t m, int min_deg, int max_deg,
                             int terms = 2) {
  RMat a(r, m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      a(i, j) = random_poly(rng, r, terms, min_deg, max_deg);
      a(j, i) = a(i, j);
    }
  return a;
}

/// Random invertible constant matrix (unit lower times unit upper triangular
/// with nonzero diagonal).
inline RMat random_constant_invertible(std::mt19937& rng, const RingPtr& r, std::size_t n) {
  std::uniform_int_distribution<int> c(-2, 2);
  std::uniform_int_distribution<int> d(1, 3);
  RMat l = RMat::identity(r, n), u = RMat::identity(r, n);
  for (std::size_t i = 0; i < n; ++i) {
    u(i, i) = r->constant(Rational(d(rng) * (c(rng) < 0 ? -1 : 1)));
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = r->constant(Rational(c(rng)));
      u(j, i) = r->constant(Rational(c(rng)));
    }
  }
  return l * u;
}

inline ModuleVector vec(const RingPtr& r, const std::vector<std::string>& entries) {
  ModuleVector v;
  for (const auto& s : entries) v.push_back(r->parse(s));
  return v;
}

}  // namespace testing_util
