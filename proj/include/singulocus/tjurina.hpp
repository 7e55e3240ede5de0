#pragma once

#include "singulocus/ideal_calculus.hpp"
#include "singulocus/singular_locus.hpp"

#include <optional>
#include <string>

namespace singulocus {

/// Glr: GL(m) x GL(n); Aut: coordinate changes preserving the origin; cGlr:
/// both; cGcongr: congruence u A u^T together with coordinate changes.
enum class Group { Glr, Aut, cGlr, cGcongr };
std::string to_string(Group g);

struct GroupAction {
  Group group = Group::cGlr;
  Shape shape = Shape::Full;
};

/// Throws std::invalid_argument when the action does not apply to A.
void validate(const RMat& a, const GroupAction& action);

/// Columns generating the tangent space to the orbit, in the coordinates of
/// the shape.
RMat tangent_orbit_presentation(const RMat& a, const GroupAction& action);
/// Ann(T¹) = Ann(Σ / T(orbit)).
Ideal t1_annihilator(const RMat& a, const GroupAction& action);

struct Bounds {
  Ideal lower;
  Ideal upper;
};

/// lower = Ann.Coker(A) + Ann(Σ/Der(R,m)(A));
/// upper = ∩_{j<m} Sat_{I_j}(Sing^(m)_{(m-j)(n-j)}(I_{j+1})). Requires m <= n.
Bounds glr_bounds(const RMat& a);
/// Congruence bounds for symmetric or skew-symmetric A.
Bounds congr_bounds(const RMat& a, Shape shape);

/// Intersection of saturated singular loci whose radical is the radical of
/// Ann(T¹) for cGlr and cGcongr (sym or skew) actions.
Ideal radical_support_rhs(const RMat& a, const GroupAction& action);
RadicalReport radical_support_check(const RMat& a, const GroupAction& action, int power_bound = -1);

struct T1Report {
  Ideal annihilator;
  std::optional<Bounds> bounds;
  bool lower_in_ann = true;
  bool ann_in_upper = true;
  std::optional<RadicalReport> radical;
};

T1Report t1_report(const RMat& a, const GroupAction& action, bool with_bounds, bool with_radical,
                   int power_bound = -1);

}  // namespace singulocus
