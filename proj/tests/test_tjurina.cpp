#include "helpers.hpp"

#include "singulocus/tjurina.hpp"

#include <doctest.h>

using namespace singulocus;
using namespace testing_util;

namespace {

const GroupAction kGlr{Group::Glr, Shape::Full};
const GroupAction kLr{Group::cGlr, Shape::Full};

std::vector<ModuleVector> distinct_columns(const RMat& p) {
  std::vector<ModuleVector> out;
  for (std::size_t j = 0; j < p.cols(); ++j) {
    ModuleVector c = p.column(j);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

void check_sandwich(const T1Report& rep) {
  CHECK(rep.lower_in_ann);
  CHECK(rep.ann_in_upper);
}

}  // namespace

TEST_CASE("orbit tangent presentations") {
  auto L = local_ring({"x", "y"});
  RMat f = RMat::parse(L, "[x^2 + y^3]");
  RMat p = tangent_orbit_presentation(f, kLr);
  CHECK(p.rows() == 1);
  auto cols = distinct_columns(p);
  CHECK(cols.size() == 1 + der_module_m(L).gens.size());
  CHECK(cols.front() == vec(L, {"x^2 + y^3"}));

  CHECK(tangent_orbit_presentation(RMat(L, 2, 3), kGlr).is_zero());
  CHECK(tangent_orbit_presentation(RMat(L, 2, 3), kGlr).rows() == 6);

  RMat sym = RMat::parse(L, "[x, y; y, x]");
  CHECK(tangent_orbit_presentation(sym, {Group::cGcongr, Shape::Symmetric}).rows() == 3);
  CHECK_THROWS_AS(tangent_orbit_presentation(sym, {Group::cGcongr, Shape::Skew}), std::invalid_argument);
  CHECK_THROWS_AS(tangent_orbit_presentation(sym, {Group::cGlr, Shape::Symmetric}), std::invalid_argument);
  CHECK_THROWS_AS(tangent_orbit_presentation(RMat(L, 2, 3), {Group::cGcongr, Shape::Full}), std::invalid_argument);
}

TEST_CASE("congruence tangents of a skew 3x3 matrix") {
  auto R = global_ring({"x", "y", "z"});
  RMat a = RMat::parse(R, "[0, x, y; -x, 0, z; -y, -z, 0]");
  std::vector<ModuleVector> cols;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      RMat u(R, 3, 3);
      u(i, j) = R->one();
      cols.push_back(flatten(u * a + a * u.transpose(), Shape::Skew));
    }
  std::vector<ModuleVector> expected;
  Ideal pf = pfaffian_ideal(a, 2);
  for (const auto& g : pf.gens())
    for (std::size_t k = 0; k < 3; ++k) {
      ModuleVector v(3, R->zero());
      v[k] = g;
      expected.push_back(v);
    }
  CHECK(Submodule(R, 3, cols).equals(Submodule(R, 3, expected)));
}

TEST_CASE("annihilator of T1 for a single function") {
  auto L = local_ring({"x", "y"});
  for (const char* f : {"x^2 + y^3", "x^3 + x*y^3", "x*y"}) {
    RMat a = RMat::parse(L, std::string("[") + f + "]");
    Ideal expected = ideal_sum(Ideal(L, {a(0, 0)}), der_ideal_image(der_module_m(L), Ideal(L, {a(0, 0)})));
    CHECK(t1_annihilator(a, kLr).equals(expected));
  }
  CHECK(t1_annihilator(RMat::parse(L, "[x^2 + y^3]"), kLr).to_string() == "x*y, x^2, y^3");
}

TEST_CASE("annihilator of T1 for a row equals the essential singular locus") {
  auto L = local_ring({"x", "y"});
  RMat a = RMat::parse(L, "[x, y]");
  Ideal s = sing_locus(Ideal(L, {a(0, 0), a(0, 1)}), 2, DerBasis::Variant::IntoMaximal);
  CHECK(t1_annihilator(a, kLr).equals(s));
  CHECK(s.equals(ideal(L, {"x", "y"})));
}

TEST_CASE("full orbit tangents give the whole ring") {
  auto L = local_ring({"x", "y"});
  CHECK(t1_annihilator(RMat::identity(L, 2), kGlr).is_whole());
  CHECK(t1_annihilator(RMat(L, 1, 2), kGlr).is_zero());
}

TEST_CASE("left-right bounds") {
  auto L = local_ring({"x", "y"});
  RMat row = RMat::parse(L, "[x^2, y^3, x*y]");
  Bounds b = glr_bounds(row);
  Ideal s = sing_locus(Ideal(L, {row(0, 0), row(0, 1), row(0, 2)}), 3, DerBasis::Variant::IntoMaximal);
  CHECK(b.upper.equals(s));
  CHECK(t1_annihilator(row, kLr).equals(s));

  check_sandwich(t1_report(RMat::parse(L, "[x, 0; 0, y]"), kLr, true, false));
  check_sandwich(t1_report(RMat::parse(L, "[x, y^2, 0; 0, x, y]"), kLr, true, false));

  T1Report unit = t1_report(RMat::parse(L, "[1 + x, y]"), kLr, true, false);
  CHECK(unit.annihilator.is_whole());
  CHECK(unit.bounds->lower.is_whole());
  CHECK(unit.bounds->upper.is_whole());
  // Equivalent to diag(1, x), so the same as the 1x1 matrix (x).
  T1Report red = t1_report(RMat::parse(L, "[1 + x, y; 0, x]"), kLr, true, false);
  CHECK(red.annihilator.equals(t1_annihilator(RMat::parse(L, "[x]"), kLr)));
  CHECK(red.annihilator.equals(ideal(L, {"x", "y"})));
  check_sandwich(red);
  CHECK_THROWS_AS(glr_bounds(RMat(L, 3, 2)), std::invalid_argument);
}

TEST_CASE("congruence bounds") {
  auto L = local_ring({"x", "y"});
  check_sandwich(t1_report(RMat::parse(L, "[x, 0; 0, y]"), {Group::cGcongr, Shape::Symmetric}, true, false));
  check_sandwich(t1_report(RMat::parse(L, "[0, x; -x, 0]"), {Group::cGcongr, Shape::Skew}, true, false));
  check_sandwich(
      t1_report(RMat::parse(L, "[0, x, y; -x, 0, x*y; -y, -x*y, 0]"), {Group::cGcongr, Shape::Skew}, true, false));

  T1Report unit = t1_report(RMat::parse(L, "[0, 1, x; -1, 0, y; -x, -y, 0]"), {Group::cGcongr, Shape::Skew}, true, false);
  CHECK(unit.bounds->lower.is_whole());
  CHECK(unit.bounds->upper.is_whole());
  CHECK(unit.annihilator.is_whole());

  CHECK_THROWS_AS(congr_bounds(RMat::parse(L, "[x, 0; 0, y]"), Shape::Full), std::invalid_argument);
}

TEST_CASE("congruence annihilators over an Artinian ring lie in the nilradical") {
  auto A = local_ring({"x"}, {"x^3"});
  Ideal nil = ideal(A, {"x"});
  RMat skew = RMat::parse(A, "[0, x, 1; -x, 0, x^2; -1, -x^2, 0]");
  CHECK(nil.contains(t1_annihilator(skew, {Group::cGcongr, Shape::Full})));
  RMat gen = RMat::parse(A, "[1 + x, x; x^2, 2]");
  CHECK(nil.contains(t1_annihilator(gen, {Group::cGcongr, Shape::Full})));
}

TEST_CASE("radical support checks") {
  auto L = local_ring({"x", "y"});
  for (const char* m : {"[x^2 + y^3]", "[x, y]", "[x, 0; 0, y]", "[x, y^2, 0; 0, x, y]"}) {
    CAPTURE(m);
    CHECK(radical_support_check(RMat::parse(L, m), kLr).equal() == Truth::True);
  }
  auto L1 = local_ring({"x"});
  RMat d = RMat::parse(L1, "[x, 0; 0, x]");
  T1Report rep = t1_report(d, kLr, false, true);
  CHECK(rep.radical->equal() == Truth::True);
  CHECK(radical_equal(rep.annihilator, ideal(L1, {"x"})).equal() == Truth::True);
  CHECK(radical_equal(rep.annihilator, ann_coker(d)).equal() == Truth::True);
  CHECK(radical_support_check(RMat::parse(L, "[x, y; y, x^2]"), {Group::cGcongr, Shape::Symmetric}).equal() !=
        Truth::False);
  CHECK_THROWS_AS(radical_support_check(d, kGlr), std::invalid_argument);
}

TEST_CASE("annihilator of T1 is invariant under constant changes of basis") {
  std::mt19937 rng(43);
  auto L = local_ring({"x", "y"});
  for (int t = 0; t < 2; ++t) {
    RMat a = random_matrix(rng, L, 2, 2, 1, 2);
    RMat u = random_constant_invertible(rng, L, 2), v = random_constant_invertible(rng, L, 2);
    CHECK(t1_annihilator(u * a * v, kLr).equals(t1_annihilator(a, kLr)));
    RMat s = random_symmetric(rng, L, 2, 1, 2);
    GroupAction c{Group::cGcongr, Shape::Symmetric};
    CHECK(t1_annihilator(u * s * u.transpose(), c).equals(t1_annihilator(s, c)));
  }
}
