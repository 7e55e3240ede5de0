#pragma once

#include "singulocus/ring.hpp"

#include <string>
#include <vector>

namespace singulocus {

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_power(const Ideal& I, unsigned k);

/// Subset of the generators in which none lies in the ideal of the others;
/// a minimal generating set when the ring is local.
Ideal irredundant(const Ideal& I);

/// I ∩ J by elimination of a tag variable t from t*I + (1 - t)*J.
Ideal ideal_intersect(const Ideal& I, const Ideal& J);
/// Intersection of a nonempty list, folded left to right.
Ideal ideal_intersect(const std::vector<Ideal>& ideals);

/// I : (g)
Ideal ideal_quotient(const Ideal& I, const Poly& g);
/// I : J; returns R when J is the zero ideal.
Ideal ideal_quotient(const Ideal& I, const Ideal& J);

/// Sat_J(I) = I : J^∞
Ideal saturation(const Ideal& I, const Ideal& J);

/// I ∩ k[x_i : i ∉ vars] (localized when the ring is).
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& vars);

enum class Truth { False, True, Undetermined };
std::string to_string(Truth t);
/// Conjunction: False dominates, then Undetermined.
Truth truth_and(Truth a, Truth b);

/// f ∈ √I. Global orders decide exactly; otherwise f^t ∈ I is tested for t up
/// to the power bound (default: settings().power_bound) and a miss is
/// reported as Undetermined.
Truth radical_member(const Poly& f, const Ideal& I, int power_bound = -1);
/// I ⊆ √J
Truth radical_contained(const Ideal& I, const Ideal& J, int power_bound = -1);

struct RadicalReport {
  Truth forward;   // I ⊆ √J
  Truth backward;  // J ⊆ √I
  Truth equal() const { return truth_and(forward, backward); }
};
RadicalReport radical_equal(const Ideal& I, const Ideal& J, int power_bound = -1);

}  // namespace singulocus
