#pragma once

#include "singulocus/derivations.hpp"
#include "singulocus/module_calculus.hpp"

namespace singulocus {

/// The N x (N^2 + #D) matrix whose cokernel is R^N / (J R^N + Der(f)): N
/// blocks carrying the generator row f in row b, then one column
/// (D f_1, ..., D f_N) per derivation generator.
RMat sing_matrix(const std::vector<Poly>& f, const DerBasis& der);

/// Sing_r(J) with the generators of J as given: J itself for r > N,
/// otherwise Ann.Coker_r of sing_matrix.
Ideal sing_locus(const Ideal& J, long r, DerBasis::Variant variant = DerBasis::Variant::Full);
Ideal sing_locus(const Ideal& J, long r, const DerBasis& der);

/// Pfaffian of a skew-symmetric matrix (0 for odd size, 1 for size 0).
Poly pfaffian(const RMat& a);
/// Pf_j(A): Pfaffians of the principal j x j submatrices. Throws
/// std::invalid_argument for non-skew A, odd j, or j outside 0..m.
Ideal pfaffian_ideal(const RMat& a, long j);

/// Jacobian of the generators of Q followed by those of J: rows dx_i.
RMat differentials_presentation(const Ideal& J);
/// Fitt_k(Ω¹_{R/J}) lifted to R: I_{p-k}(Jacobian) + J.
Ideal fitt_omega(const Ideal& J, long k);

}  // namespace singulocus
