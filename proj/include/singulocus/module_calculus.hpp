#pragma once

#include "singulocus/matrix.hpp"

#include <vector>

namespace singulocus {

/// det of a square matrix (Laplace expansion, memoized).
Poly determinant(const RMat& a);
/// All j x j minors, rows and column subsets in colex order; zeros kept.
std::vector<Poly> minors(const RMat& a, std::size_t j);
/// I_j(A); I_0 = R, I_j = 0 for j > min(m, n).
Ideal det_ideal(const RMat& a, std::size_t j);

/// Column submodule Im(A) ⊂ R^m.
Submodule image(const RMat& a);

/// {c ∈ R^n : A c = 0 in (R/Q)^m}
Submodule syzygies(const RMat& a);

/// k-subsets of {0..n-1} as bitmasks, colex order.
std::vector<std::uint32_t> subsets_colex(std::size_t n, std::size_t k);

/// Matrix of the map E ⊗ ∧^{k-1}F -> ∧^k F, a ⊗ w -> A(a) ∧ w; rows are
/// k-subsets, columns are pairs (column c, (k-1)-subset T) with c outer.
RMat exterior_map(const RMat& a, std::size_t k);

/// {f : f v ∈ N}
Ideal colon_into_submodule(const Submodule& n, const ModuleVector& v);

/// Ann(R^m / Im(A))
Ideal ann_coker(const RMat& a);
/// Ann.Coker_j(A) = Ann.Coker(φ_{m+1-j}); R for j <= 0, 0 for j > m.
Ideal ann_coker_j(const RMat& a, long j);
/// Annihilator of the module presented by P.
inline Ideal ann_fp_module(const RMat& p) { return ann_coker(p); }

}  // namespace singulocus
