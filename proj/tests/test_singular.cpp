#include "helpers.hpp"

#include "singulocus/singular_locus.hpp"

#include <doctest.h>

using namespace singulocus;
using namespace testing_util;

namespace {

using Variant = DerBasis::Variant;

// N x #D matrix of derivative columns (D f_1, ..., D f_N).
RMat derivative_matrix(const std::vector<Poly>& f, const DerBasis& der) {
  RMat m(der.ring, f.size(), der.gens.size());
  for (std::size_t d = 0; d < der.gens.size(); ++d)
    for (std::size_t i = 0; i < f.size(); ++i) m(i, d) = apply_der(der.ring, der.gens[d], f[i]);
  return m;
}

}  // namespace

TEST_CASE("essential singular locus of two planes") {
  auto R = global_ring({"x", "y", "z"});
  Ideal J = ideal(R, {"x*z", "x*y"});
  CHECK(sing_locus(J, 2).to_string() == "x");
  CHECK(sing_locus(J, 1).equals(ideal(R, {"x", "y", "z"})));
  CHECK(sing_locus(J, 3).equals(J));
  CHECK(sing_locus(J, 0).is_whole());
}

TEST_CASE("essential singular locus on the coordinate cross") {
  auto R = global_ring({"x", "y", "z"}, {"x*y"});
  CHECK(sing_locus(ideal(R, {"z"}), 1).is_whole());
  auto L = local_ring({"x", "y", "z"}, {"x*y"});
  CHECK(sing_locus(ideal(L, {"z"}), 1).is_whole());
}

TEST_CASE("singular locus of the zero ideal") {
  auto R = global_ring({"x", "y"});
  CHECK(sing_locus(Ideal::zero(R), 1).is_zero());
}

TEST_CASE("the singular matrix layout") {
  auto R = global_ring({"x", "y"});
  RMat m = sing_matrix({R->parse("x^2"), R->parse("y")}, der_module(R));
  CHECK(m.to_string() == "[x^2, y, 0, 0, 2*x, 0; 0, 0, x^2, y, 0, 1]");
}

TEST_CASE("strict inclusion witness") {
  auto L = local_ring({"x", "y"});
  Ideal J = ideal(L, {"x^7 + y^8", "x^8 + y^9"});
  Ideal s = sing_locus(J, 2);
  CHECK(s.contains(L->parse("x^8")));
  CHECK(s.contains(L->parse("y^9")));
  Ideal weaker = ideal_sum(J, ann_coker_j(derivative_matrix(J.gens(), der_module(L)), 2));
  CHECK(!weaker.contains(L->parse("x^8")));
  CHECK(weaker.contains(s) == false);
  CHECK(s.contains(weaker));
}

TEST_CASE("singular locus does not depend on the generators") {
  std::mt19937 rng(23);
  auto R = global_ring({"x", "y"});
  for (int t = 0; t < 6; ++t) {
    Poly f = random_poly(rng, R, 2, 1, 2), g = random_poly(rng, R, 2, 1, 2);
    Poly h = random_poly(rng, R, 1, 0, 1) * f + random_poly(rng, R, 1, 0, 1) * g;
    Ideal a(R, {f, g}), b(R, {f, g, h});
    for (long r : {1L, 2L}) {
      CAPTURE(r);
      for (auto v : {Variant::Full, Variant::IntoMaximal}) CHECK(sing_locus(a, r, v).equals(sing_locus(b, r, v)));
    }
  }
}

TEST_CASE("singular locus is monotone") {
  std::mt19937 rng(29);
  auto R = global_ring({"x", "y"});
  for (int t = 0; t < 6; ++t) {
    Poly f = random_poly(rng, R, 2, 1, 3), g = random_poly(rng, R, 2, 1, 3);
    Ideal small(R, {f, f * g}), big(R, {f, g});
    CHECK(small.is_zero() == false);
    CHECK(sing_locus(big, 1).contains(sing_locus(small, 1)));
  }
}

TEST_CASE("singular locus of a determinantal ideal is sandwiched") {
  std::mt19937 rng(31);
  auto R = global_ring({"x", "y"});
  const DerBasis der = der_module(R);
  for (int t = 0; t < 5; ++t) {
    RMat a = random_matrix(rng, R, 2, 2, 1, 2);
    for (std::size_t j : {1u, 2u}) {
      Ideal i = det_ideal(a, j);
      if (i.gens().empty()) continue;
      for (long r = 1; r <= static_cast<long>(i.gens().size()); ++r) {
        Ideal s = sing_locus(i, r, der);
        CHECK(s.contains(i));
        CHECK(ideal_sum(i, der_ideal_image(der, i)).contains(s));
      }
    }
  }
}

TEST_CASE("essential singular locus and derivative minors agree up to radicals") {
  auto L = local_ring({"x", "y"});
  const DerBasis der = der_module(L);
  for (auto gens : std::vector<std::vector<std::string>>{{"x^2 + y^3"}, {"x*y", "x^2"}, {"x^3 - y^2", "x*y^2"}}) {
    Ideal J = ideal(L, gens);
    for (long r = 1; r <= static_cast<long>(gens.size()); ++r) {
      CAPTURE(r);
      Ideal rhs = ideal_sum(J, det_ideal(derivative_matrix(J.gens(), der), static_cast<std::size_t>(r)));
      CHECK(radical_equal(sing_locus(J, r, der), rhs).equal() != Truth::False);
    }
  }
}

TEST_CASE("Pfaffians") {
  auto R = global_ring({"a", "b", "c", "d", "e", "f"});
  CHECK(pfaffian_ideal(RMat::parse(R, "[0, a; -a, 0]"), 2).to_string() == "a");
  RMat g = RMat::parse(R, "[0, a, b, c; -a, 0, d, e; -b, -d, 0, f; -c, -e, -f, 0]");
  Poly pf = pfaffian(g);
  CHECK(pf == R->parse("a*f - b*e + c*d"));
  CHECK(determinant(g) == pf * pf);
  CHECK(pfaffian_ideal(g, 0).is_whole());
  CHECK(pfaffian_ideal(g, 4).equals(Ideal(R, {pf})));
  CHECK(pfaffian_ideal(g, 2).equals(ideal(R, {"a", "b", "c", "d", "e", "f"})));
  CHECK_THROWS_AS(pfaffian_ideal(g, 3), std::invalid_argument);
  CHECK_THROWS_AS(pfaffian_ideal(g, 6), std::invalid_argument);
  CHECK_THROWS_AS(pfaffian(RMat::parse(R, "[0, a; a, 0]")), std::invalid_argument);

  RMat odd = RMat::parse(R, "[0, a, b; -a, 0, c; -b, -c, 0]");
  CHECK(det_ideal(odd, 3).is_zero());
  CHECK(pfaffian(odd).is_zero());
}

TEST_CASE("skew-symmetric determinantal identities on random matrices") {
  std::mt19937 rng(37);
  auto R = global_ring({"x", "y"});
  for (int t = 0; t < 3; ++t) {
    RMat a = random_skew(rng, R, 4, 0, 2);
    Poly pf = pfaffian(a);
    CHECK(determinant(a) == pf * pf);
    CHECK(det_ideal(a, 4).equals(ideal_power(Ideal(R, {pf}), 2)));
    CHECK(det_ideal(a, 3).equals(ideal_product(Ideal(R, {pf}), pfaffian_ideal(a, 2))));
    CHECK(radical_equal(det_ideal(a, 2), det_ideal(a, 1)).equal() == Truth::True);
    CHECK(radical_equal(det_ideal(a, 4), det_ideal(a, 3)).equal() == Truth::True);
  }
  for (int t = 0; t < 2; ++t) {
    RMat a = random_skew(rng, R, 5, 0, 1);
    CHECK(det_ideal(a, 4).equals(ideal_power(pfaffian_ideal(a, 4), 2)));
    CHECK(radical_equal(det_ideal(a, 2), det_ideal(a, 1)).equal() == Truth::True);
    CHECK(radical_equal(det_ideal(a, 4), det_ideal(a, 3)).equal() == Truth::True);
  }
}

TEST_CASE("Fitting ideals of differentials") {
  auto R = global_ring({"x", "y", "z"});
  Ideal J = ideal(R, {"x*z", "x*y"});
  Ideal f = fitt_omega(J, 2);
  CHECK(f.equals(ideal_sum(ideal(R, {"x", "y", "z"}), J)));
  CHECK(radical_equal(f, ideal(R, {"x", "y", "z"})).equal() == Truth::True);

  auto S = global_ring({"x", "y", "z"}, {"x*y"});
  CHECK(fitt_omega(ideal(S, {"z"}), 1).equals(ideal(S, {"x", "y", "z"})));
  CHECK(differentials_presentation(ideal(S, {"z"})).to_string() == "[y, 0; x, 0; 0, 1]");

  // Fitt_p of the free module of rank p is the whole ring.
  CHECK(fitt_omega(Ideal::zero(R), 3).is_whole());
  CHECK(fitt_omega(Ideal::zero(R), 2).is_zero());
}
