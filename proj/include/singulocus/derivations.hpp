#pragma once

#include "singulocus/matrix.hpp"

#include <string>
#include <vector>

namespace singulocus {

/// D = Σ a_i ∂/∂x_i stored as (a_1, ..., a_p).
using Derivation = ModuleVector;

/// Generating set of Der_k(R) or of Der_k(R, m).
struct DerBasis {
  enum class Variant { Full, IntoMaximal };

  RingPtr ring;
  Variant variant = Variant::Full;
  std::vector<Derivation> gens;

  Submodule as_submodule() const { return Submodule(ring, ring->nvars(), gens); }
};

/// Der_k(R) = {a : Σ a_i ∂q/∂x_i ∈ Q for every generator q of Q}.
/// Throws std::invalid_argument in positive characteristic.
DerBasis der_module(const RingPtr& ring);
/// Der_k(R, m) = Der_k(R) ∩ (mR)^p.
DerBasis der_module_m(const RingPtr& ring);
DerBasis der_basis(const RingPtr& ring, DerBasis::Variant variant);

/// Σ a_i ∂f/∂x_i reduced modulo Q.
Poly apply_der(const RingPtr& ring, const Derivation& d, const Poly& f);
/// Entrywise.
RMat apply_der(const Derivation& d, const RMat& a);

/// `a1*d/dx + (b0 + b1)*d/dy`; `0` for the zero derivation.
std::string to_string(const Derivation& d, const RingPtr& ring);

/// Coordinates of the matrix space: all mn entries, the upper triangle
/// (i <= j) of a symmetric matrix, or the strict upper triangle of a skew one.
enum class Shape { Full, Symmetric, Skew };
std::string to_string(Shape s);
std::size_t shape_dimension(Shape s, std::size_t rows, std::size_t cols);
/// Row-major coordinates of `a` in the given shape; throws
/// std::invalid_argument when `a` does not have that shape.
ModuleVector flatten(const RMat& a, Shape s);
/// flatten without the shape check (entries outside the coordinates are
/// ignored).
ModuleVector flatten_unchecked(const RMat& a, Shape s);

/// Ideal generated by D(g) for D in the basis and g among the generators.
Ideal der_ideal_image(const DerBasis& basis, const Ideal& J);
/// Submodule generated by the flattened D(A) for D in the basis.
Submodule der_matrix_image(const DerBasis& basis, const RMat& a, Shape shape = Shape::Full);

}  // namespace singulocus
