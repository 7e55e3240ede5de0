#include "singulocus/derivations.hpp"

#include "singulocus/module_calculus.hpp"

#include <stdexcept>

namespace singulocus {
namespace {

void require_char_zero(const RingPtr& ring) {
  if (ring->characteristic() != 0)
    throw std::invalid_argument("derivations require characteristic zero");
}

Derivation unit(const RingPtr& ring, std::size_t i, const Poly& coeff) {
  Derivation d(ring->nvars(), ring->zero());
  d[i] = coeff;
  return d;
}

std::vector<Derivation> clean(const RingPtr& ring, std::vector<Derivation> gens) {
  std::vector<Derivation> out;
  for (auto& d : gens) {
    bool zero = true;
    for (auto& a : d) {
      a = ring->reduce(a);
      if (!a.is_zero()) zero = false;
    }
    if (zero || std::find(out.begin(), out.end(), d) != out.end()) continue;
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

DerBasis der_module(const RingPtr& ring) {
  require_char_zero(ring);
  const std::size_t p = ring->nvars();
  std::vector<Derivation> gens;
  const auto& q = ring->quotient();
  if (q.empty()) {
    for (std::size_t i = 0; i < p; ++i) gens.push_back(unit(ring, i, ring->one()));
  } else {
    RMat jac(ring, q.size(), p);
    for (std::size_t j = 0; j < q.size(); ++j)
      for (std::size_t i = 0; i < p; ++i) jac(j, i) = q[j].derivative(i);
    gens = syzygies(jac).gens();
  }
  return DerBasis{ring, DerBasis::Variant::Full, clean(ring, std::move(gens))};
}

DerBasis der_module_m(const RingPtr& ring) {
  require_char_zero(ring);
  const std::size_t p = ring->nvars();
  std::vector<Derivation> gens;
  if (!ring->has_quotient()) {
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j) gens.push_back(unit(ring, i, ring->var(j)));
    return DerBasis{ring, DerBasis::Variant::IntoMaximal, clean(ring, std::move(gens))};
  }
  // U ∩ V as the second block of the kernel of (u, u), (v, 0) in R^{2p}.
  DerBasis full = der_module(ring);
  std::vector<Vec> vecs;
  for (const auto& d : full.gens) {
    ModuleVector v = d;
    v.insert(v.end(), d.begin(), d.end());
    vecs.push_back(ring->to_vec(v));
  }
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) vecs.push_back(ring->to_vec(ring->var(j), static_cast<std::uint32_t>(i)));
  for (const auto& w : ring->kernel(std::move(vecs), p, p)) gens.push_back(ring->from_vec(w, p));
  return DerBasis{ring, DerBasis::Variant::IntoMaximal, clean(ring, std::move(gens))};
}

DerBasis der_basis(const RingPtr& ring, DerBasis::Variant variant) {
  return variant == DerBasis::Variant::Full ? der_module(ring) : der_module_m(ring);
}

Poly apply_der(const RingPtr& ring, const Derivation& d, const Poly& f) {
  if (!same_ring(f.ring(), ring->poly_ring())) throw RingMismatch();
  if (d.size() != ring->nvars()) throw std::invalid_argument("derivation length does not match the ring");
  Poly out = ring->zero();
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!d[i].is_zero()) out += d[i] * f.derivative(i);
  return ring->reduce(out);
}

RMat apply_der(const Derivation& d, const RMat& a) {
  RMat out(a.ring(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = apply_der(a.ring(), d, a(i, j));
  return out;
}

std::string to_string(const Derivation& d, const RingPtr& ring) {
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string dx = "d/d" + ring->var_names()[i];
    if (d[i] == ring->one()) {
      out += dx;
    } else if (d[i].size() == 1) {
      out += d[i].to_string() + "*" + dx;
    } else {
      out += "(" + d[i].to_string() + ")*" + dx;
    }
  }
  return out.empty() ? "0" : out;
}

std::string to_string(Shape s) {
  switch (s) {
    case Shape::Full: return "full";
    case Shape::Symmetric: return "sym";
    case Shape::Skew: return "skew";
  }
  return "full";
}

std::size_t shape_dimension(Shape s, std::size_t rows, std::size_t cols) {
  switch (s) {
    case Shape::Full: return rows * cols;
    case Shape::Symmetric: return rows * (rows + 1) / 2;
    case Shape::Skew: return rows * (rows - 1) / 2;
  }
  return 0;
}

ModuleVector flatten_unchecked(const RMat& a, Shape s) {
  ModuleVector v;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (s == Shape::Symmetric && j < i) continue;
      if (s == Shape::Skew && j <= i) continue;
      v.push_back(a(i, j));
    }
  return v;
}

ModuleVector flatten(const RMat& a, Shape s) {
  if (s == Shape::Symmetric && !a.is_symmetric()) throw std::invalid_argument("matrix is not symmetric");
  if (s == Shape::Skew && !a.is_skew()) throw std::invalid_argument("matrix is not skew-symmetric");
  return flatten_unchecked(a, s);
}

Ideal der_ideal_image(const DerBasis& basis, const Ideal& J) {
  if (!same_ring(basis.ring, J.ring())) throw RingMismatch();
  std::vector<Poly> out;
  for (const auto& d : basis.gens)
    for (const auto& g : J.gens()) out.push_back(apply_der(basis.ring, d, g));
  return Ideal(J.ring(), std::move(out)).simplified();
}

Submodule der_matrix_image(const DerBasis& basis, const RMat& a, Shape shape) {
  if (!same_ring(basis.ring, a.ring())) throw RingMismatch();
  flatten(a, shape);
  std::vector<ModuleVector> gens;
  for (const auto& d : basis.gens) gens.push_back(flatten_unchecked(apply_der(d, a), shape));
  return Submodule(a.ring(), shape_dimension(shape, a.rows(), a.cols()), std::move(gens));
}

}  // namespace singulocus
