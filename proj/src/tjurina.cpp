#include "singulocus/tjurina.hpp"

#include <stdexcept>

namespace singulocus {
namespace {

using Variant = DerBasis::Variant;

RMat from_columns(const RingPtr& ring, std::size_t dim, const std::vector<ModuleVector>& cols) {
  RMat out(ring, dim, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) out(i, j) = ring->reduce(cols[j][i]);
  return out;
}

RMat unit_matrix(const RingPtr& ring, std::size_t n, std::size_t a, std::size_t b) {
  RMat e(ring, n, n);
  e(a, b) = ring->one();
  return e;
}

std::vector<Poly> nonzero_minors(const RMat& a, std::size_t j) {
  std::vector<Poly> out;
  for (auto& p : minors(a, j)) {
    Poly q = a.ring()->reduce(p);
    if (!q.is_zero()) out.push_back(std::move(q));
  }
  return out;
}

// Sat_{I_j(A)}(Sing_r(I_{j+1}(A))), generated by an irredundant set of minors.
Ideal saturated_sing(const RMat& a, std::size_t j, long r, const DerBasis& der) {
  Ideal minors_ideal = irredundant(Ideal(a.ring(), nonzero_minors(a, j + 1)));
  return saturation(sing_locus(minors_ideal, r, der), det_ideal(a, j));
}

Ideal aut_quotient_annihilator(const RMat& a, Shape shape) {
  return ann_fp_module(tangent_orbit_presentation(a, GroupAction{Group::Aut, shape}));
}

long binom2(long n) { return n * (n - 1) / 2; }

}  // namespace

std::string to_string(Group g) {
  switch (g) {
    case Group::Glr: return "glr";
    case Group::Aut: return "aut";
    case Group::cGlr: return "cglr";
    case Group::cGcongr: return "congr";
  }
  return "cglr";
}

void validate(const RMat& a, const GroupAction& action) {
  const bool lr = action.group == Group::Glr || action.group == Group::cGlr;
  if (lr && action.shape != Shape::Full) throw std::invalid_argument("shape applies to congruence and aut actions only");
  if (action.group == Group::cGcongr && !a.is_square())
    throw std::invalid_argument("congruence action needs a square matrix");
  flatten(a, action.shape);
}

RMat tangent_orbit_presentation(const RMat& a, const GroupAction& action) {
  validate(a, action);
  const RingPtr& R = a.ring();
  const std::size_t m = a.rows(), n = a.cols();
  const std::size_t dim = shape_dimension(action.shape, m, n);
  std::vector<ModuleVector> cols;
  const bool lr = action.group == Group::Glr || action.group == Group::cGlr;
  const bool aut = action.group != Group::Glr;
  if (lr) {
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) cols.push_back(flatten_unchecked(unit_matrix(R, m, x, y) * a, Shape::Full));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) cols.push_back(flatten_unchecked(a * unit_matrix(R, n, x, y), Shape::Full));
  }
  if (action.group == Group::cGcongr) {
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) {
        RMat u = unit_matrix(R, m, x, y);
        cols.push_back(flatten_unchecked(u * a + a * u.transpose(), action.shape));
      }
  }
  if (aut) {
    for (const auto& d : der_module_m(R).gens) cols.push_back(flatten_unchecked(apply_der(d, a), action.shape));
  }
  return from_columns(R, dim, cols);
}

Ideal t1_annihilator(const RMat& a, const GroupAction& action) {
  return ann_fp_module(tangent_orbit_presentation(a, action));
}

Bounds glr_bounds(const RMat& a) {
  const std::size_t m = a.rows(), n = a.cols();
  if (m > n) throw std::invalid_argument("glr bounds need rows <= columns");
  const DerBasis der = der_module_m(a.ring());
  Ideal lower = ideal_sum(ann_coker(a), aut_quotient_annihilator(a, Shape::Full));
  std::vector<Ideal> terms;
  for (std::size_t j = 0; j < m; ++j)
    terms.push_back(saturated_sing(a, j, static_cast<long>((m - j) * (n - j)), der));
  return Bounds{lower, ideal_intersect(terms)};
}

Bounds congr_bounds(const RMat& a, Shape shape) {
  if (shape == Shape::Full) throw std::invalid_argument("congruence bounds need shape sym or skew");
  validate(a, GroupAction{Group::cGcongr, shape});
  const long m = static_cast<long>(a.rows());
  std::vector<Ideal> terms;
  Ideal lower;
  if (shape == Shape::Symmetric) {
    const DerBasis der = der_module_m(a.ring());
    lower = ideal_sum(ann_coker(a), aut_quotient_annihilator(a, shape));
    for (long j = 0; j < m; ++j)
      terms.push_back(saturated_sing(a, static_cast<std::size_t>(j), binom2(m - j + 1), der));
  } else {
    const DerBasis der = der_module(a.ring());
    Ideal first = m % 2 == 0 ? ann_coker(a) : pfaffian_ideal(a, m - 1);
    lower = ideal_sum(first, aut_quotient_annihilator(a, shape));
    for (long j = 0; j < m; j += 2)
      terms.push_back(saturated_sing(a, static_cast<std::size_t>(j), binom2(m - j), der));
  }
  return Bounds{lower, ideal_intersect(terms)};
}

Ideal radical_support_rhs(const RMat& a, const GroupAction& action) {
  validate(a, action);
  if (action.group == Group::cGlr) return glr_bounds(a).upper;
  if (action.group == Group::cGcongr && action.shape != Shape::Full) return congr_bounds(a, action.shape).upper;
  throw std::invalid_argument("radical check needs group cglr, or congr with shape sym or skew");
}

RadicalReport radical_support_check(const RMat& a, const GroupAction& action, int power_bound) {
  Ideal rhs = radical_support_rhs(a, action);
  return radical_equal(t1_annihilator(a, action), rhs, power_bound);
}

T1Report t1_report(const RMat& a, const GroupAction& action, bool with_bounds, bool with_radical,
                   int power_bound) {
  T1Report rep;
  rep.annihilator = t1_annihilator(a, action);
  if (with_bounds) {
    if (action.group == Group::cGlr) {
      rep.bounds = glr_bounds(a);
    } else if (action.group == Group::cGcongr && action.shape != Shape::Full) {
      rep.bounds = congr_bounds(a, action.shape);
    } else {
      throw std::invalid_argument("bounds need group cglr, or congr with shape sym or skew");
    }
    rep.lower_in_ann = rep.annihilator.contains(rep.bounds->lower);
    rep.ann_in_upper = rep.bounds->upper.contains(rep.annihilator);
  }
  if (with_radical) {
    Ideal rhs = rep.bounds ? rep.bounds->upper : radical_support_rhs(a, action);
    rep.radical = radical_equal(rep.annihilator, rhs, power_bound);
  }
  return rep;
}

}  // namespace singulocus
