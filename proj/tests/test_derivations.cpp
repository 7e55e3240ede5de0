#include "helpers.hpp"

#include "singulocus/derivations.hpp"

#include <doctest.h>

using namespace singulocus;
using namespace testing_util;

namespace {

Submodule span(const RingPtr& r, std::size_t rank, const std::vector<std::vector<std::string>>& gens) {
  std::vector<ModuleVector> g;
  for (const auto& v : gens) g.push_back(vec(r, v));
  return Submodule(r, rank, std::move(g));
}

bool in_maximal(const RingPtr& r, const Poly& f) {
  std::vector<Poly> xs;
  for (std::size_t i = 0; i < r->nvars(); ++i) xs.push_back(r->var(i));
  return Ideal(r, xs).contains(f);
}

// Raw Σ a_i ∂q/∂x_i before reduction modulo Q.
Poly raw_apply(const Derivation& d, const Poly& q) {
  Poly out(q.ring());
  for (std::size_t i = 0; i < d.size(); ++i) out += d[i] * q.derivative(i);
  return out;
}

std::vector<RingPtr> fixtures() {
  return {global_ring({"x", "y", "z"}, {"x*y"}), global_ring({"x"}, {"x^2"}),
          global_ring({"x", "y"}, {"x^3 - y^2"}), global_ring({"x", "y", "z"}, {"x*y", "x*z"}),
          local_ring({"x", "y"}, {"x^2 + y^3"}), local_ring({"x", "y"}, {"x*y"})};
}

}  // namespace

TEST_CASE("derivations of a polynomial ring are the partials") {
  auto R = global_ring({"x", "y", "z"});
  DerBasis d = der_module(R);
  CHECK(d.gens.size() == 3);
  CHECK(d.as_submodule().equals(span(R, 3, {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}})));
  CHECK(to_string(d.gens[0], R) == "d/dx");
}

TEST_CASE("derivations of the coordinate cross") {
  auto R = global_ring({"x", "y", "z"}, {"x*y"});
  DerBasis d = der_module(R);
  CHECK(d.as_submodule().equals(span(R, 3, {{"x", "0", "0"}, {"0", "y", "0"}, {"0", "0", "1"}})));

  DerBasis dm = der_module_m(R);
  Submodule sm = dm.as_submodule();
  CHECK(sm.contains(vec(R, {"x", "0", "0"})));
  CHECK(sm.contains(vec(R, {"0", "y", "0"})));
  for (const char* v : {"x", "y", "z"}) CHECK(sm.contains(vec(R, {"0", "0", v})));
  CHECK(!sm.contains(vec(R, {"0", "0", "1"})));
}

TEST_CASE("derivations of a fat point") {
  auto R = global_ring({"x"}, {"x^2"});
  CHECK(der_module(R).as_submodule().contains(vec(R, {"x"})));
  CHECK(!der_module(R).as_submodule().contains(vec(R, {"1"})));
}

TEST_CASE("derivations preserve the quotient ideal") {
  for (const auto& R : fixtures()) {
    CAPTURE(R->quotient().front().to_string());
    for (const auto& d : der_module(R).gens)
      for (const auto& q : R->quotient()) CHECK(R->in_quotient(raw_apply(d, q)));
  }
}

TEST_CASE("derivations into the maximal ideal") {
  for (const auto& R : fixtures()) {
    CAPTURE(R->quotient().front().to_string());
    Submodule full = der_module(R).as_submodule();
    DerBasis dm = der_module_m(R);
    Submodule sm = dm.as_submodule();
    CHECK(full.contains(sm));
    for (const auto& d : dm.gens)
      for (const auto& a : d) CHECK(in_maximal(R, a));
    // m * Der ⊆ Der(R, m)
    for (const auto& d : der_module(R).gens)
      for (std::size_t j = 0; j < R->nvars(); ++j) {
        ModuleVector v = d;
        for (auto& a : v) a = a * R->var(j);
        CHECK(sm.contains(v));
      }
  }
  auto P = local_ring({"x", "y"});
  CHECK(der_module_m(P).as_submodule().equals(
      span(P, 2, {{"x", "0"}, {"y", "0"}, {"0", "x"}, {"0", "y"}})));
  auto L = global_ring({"x"});
  CHECK(der_module_m(L).as_submodule().equals(span(L, 1, {{"x"}})));
}

TEST_CASE("applying derivations") {
  auto R = global_ring({"x", "y"});
  CHECK(apply_der(R, vec(R, {"1", "0"}), R->parse("x^2*y")) == R->parse("2*x*y"));
  CHECK(apply_der(R, vec(R, {"x", "0"}), R->parse("x^7 + y^8")) == R->parse("7*x^7"));
  CHECK(apply_der(vec(R, {"x*y", "x + 1"}), RMat::parse(R, "[1, 2; -3, 1/2]")).is_zero());

  auto Q = global_ring({"x", "y"}, {"x*y"});
  // x d/dx (x*y) = x*y = 0 in the quotient.
  CHECK(apply_der(Q, vec(Q, {"x", "0"}), Q->parse("x*y")).is_zero());
}

TEST_CASE("Leibniz rule modulo the quotient") {
  std::mt19937 rng(17);
  for (const auto& R : fixtures()) {
    for (const auto& d : der_module(R).gens) {
      for (int t = 0; t < 4; ++t) {
        Poly f = random_poly(rng, R, 3, 0, 3);
        Poly g = random_poly(rng, R, 3, 0, 3);
        Poly lhs = apply_der(R, d, f * g);
        Poly rhs = f * apply_der(R, d, g) + g * apply_der(R, d, f);
        CHECK(R->in_quotient(lhs - rhs));
      }
    }
  }
}

TEST_CASE("images of ideals and matrices") {
  auto R = global_ring({"x"});
  CHECK(der_ideal_image(der_module(R), ideal(R, {"x^2"})).equals(ideal(R, {"x"})));

  auto L = local_ring({"x", "y"});
  CHECK(der_matrix_image(der_module(L), RMat(L, 2, 2)).is_zero());
  Submodule img = der_matrix_image(der_module_m(L), RMat::parse(L, "[x^2 + y^3]"));
  CHECK(img.equals(span(L, 1, {{"2*x^2"}, {"2*x*y"}, {"3*x*y^2"}, {"3*y^3"}})));

  RMat sym = RMat::parse(L, "[x, y; y, x^2]");
  CHECK(der_matrix_image(der_module(L), sym, Shape::Symmetric).rank() == 3);
  CHECK_THROWS_AS(der_matrix_image(der_module(L), sym, Shape::Skew), std::invalid_argument);
  CHECK(flatten(RMat::parse(L, "[0, x; -x, 0]"), Shape::Skew) == vec(L, {"x"}));
  CHECK(flatten(sym, Shape::Full) == vec(L, {"x", "y", "y", "x^2"}));
}

TEST_CASE("derivations need characteristic zero") {
  auto R = Ring::create({"x"}, MonomialOrder::degrevlex(1), {}, 5);
  CHECK_THROWS_AS(der_module(R), std::invalid_argument);
  CHECK_THROWS_AS(der_module_m(R), std::invalid_argument);
}

TEST_CASE("derivation text") {
  auto R = global_ring({"x", "y"});
  CHECK(to_string(vec(R, {"x", "x + y"}), R) == "x*d/dx + (x + y)*d/dy");
  CHECK(to_string(vec(R, {"0", "0"}), R) == "0");
}
