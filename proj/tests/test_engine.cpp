#include "helpers.hpp"

#include <doctest.h>

using namespace singulocus;
using namespace testing_util;

namespace {

template <class F>
BasicVec<F> spair(const BasicVec<F>& a, const BasicVec<F>& b, const ModuleOrder& ord) {
  Monomial l = lcm(a.lead().mono, b.lead().mono);
  BasicVec<F> sa = a.mul_monomial(quotient(l, a.lead().mono)).scaled(FieldTraits<F>::inverse(a.lead().coeff));
  return sa.sub_mul(0, FieldTraits<F>::inverse(b.lead().coeff), quotient(l, b.lead().mono), b, ord);
}

// Every S-pair of a basis reduces to zero: full reduction for global orders,
// Mora's normal form otherwise. Mora reductions that exceed the step budget
// are counted in `skipped` instead of being decided.
template <class F>
bool spairs_reduce_to_zero(const std::vector<BasicVec<F>>& basis, const ModuleOrder& ord,
                           int* skipped = nullptr, int* total = nullptr) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (basis[i].lead().comp != basis[j].lead().comp) continue;
      auto s = spair(basis[i], basis[j], ord);
      if (ord.is_global()) {
        if (!reduce_full(s, basis, ord).is_zero()) return false;
        continue;
      }
      if (total) ++*total;
      auto h = detail::mora_reduce(s, basis, ord, 2000);
      if (!h) {
        if (skipped) ++*skipped;
      } else if (!h->is_zero()) {
        return false;
      }
    }
  return true;
}

template <class F>
bool divisible_by_lead(const Monomial& m, const std::vector<BasicVec<F>>& basis) {
  return std::any_of(basis.begin(), basis.end(), [&](const BasicVec<F>& g) { return divides(g.lead().mono, m); });
}

void monomials_below(std::size_t n, int k, std::vector<Monomial>& out) {
  Monomial m(n);
  auto rec = [&](auto& self, std::size_t i, int left) -> void {
    if (i == n) {
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m.set(i, e);
      self(self, i + 1, left - e);
    }
    m.set(i, 0);
  };
  rec(rec, 0, k - 1);
}

// Number of standard monomials of degree < k for a local degree order
// basis, against dim k[x]/(I + m^k) from a global Groebner basis.
template <class F>
bool colength_matches(const std::vector<BasicVec<F>>& gens, const std::vector<BasicVec<F>>& local_sb,
                      std::size_t n, int k) {
  std::vector<Monomial> below;
  monomials_below(n, k, below);
  std::size_t local_count = 0;
  for (const auto& m : below)
    if (!divisible_by_lead(m, local_sb)) ++local_count;

  ModuleOrder gord{MonomialOrder::degrevlex(n), 0};
  std::vector<BasicVec<F>> g;
  for (const auto& v : gens) {
    auto terms = v.terms();
    g.emplace_back(std::move(terms), gord);
  }
  std::vector<Monomial> upto;
  monomials_below(n, k + 1, upto);
  for (const auto& m : upto)
    if (m.degree() == k) g.emplace_back(std::vector<VecTerm<F>>{{m, 0, F(1)}}, gord);
  auto gb = standard_basis(std::move(g), gord);
  std::size_t global_count = 0;
  for (const auto& m : below)
    if (!divisible_by_lead(m, gb)) ++global_count;
  return local_count == global_count;
}

std::vector<std::string> strings(const std::vector<Poly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

TEST_CASE("standard basis: generators already a basis") {
  auto R = global_ring({"x", "y"});
  CHECK(strings(ideal(R, {"x", "y"}).standard_basis()) == std::vector<std::string>{"y", "x"});
}

TEST_CASE("standard basis: lex Buchberger run") {
  auto R = Ring::create({"x", "y"}, MonomialOrder::lex(2));
  Ideal I = ideal(R, {"x^2 - y", "y^2 - x"});
  auto sb = I.standard_basis();
  CHECK(strings(sb) == std::vector<std::string>{"y^4 - y", "x - y^2"});
  CHECK(spairs_reduce_to_zero(I.basis_vecs(), R->module_order()));
  // Both generators reduce to zero against the result.
  CHECK(I.contains(R->parse("x^2 - y")));
  CHECK(I.contains(R->parse("y^2 - x")));
}

TEST_CASE("standard basis: local order absorbs units") {
  auto R = local_ring({"x"});
  Ideal I = ideal(R, {"x + x^2", "x"});
  REQUIRE(I.standard_basis().size() == 1);
  CHECK(I.standard_basis()[0].lead_monomial() == Monomial{1});
  CHECK(I.to_string() == "x");
}

TEST_CASE("normal forms") {
  auto R = global_ring({"x", "y"});
  Ideal X = ideal(R, {"x"});
  CHECK(R->reduce_full(R->to_vec(R->parse("x^2 + y")), X.basis_vecs()).component(0, R->poly_ring()) ==
        R->parse("y"));
  Ideal I = ideal(R, {"x^3 - y", "x*y^2 + 1"});
  CHECK(I.contains(R->parse("x^3 - y")));
  CHECK(I.contains(R->parse("(x+y)*(x^3 - y) - y^5*(x*y^2 + 1)")));

  auto L = local_ring({"x"});
  Ideal J = ideal(L, {"x + x^2"});
  CHECK(L->contains(J.basis_vecs(), {L->to_vec(L->parse("x"))}));
  // Multiply back: x*(1 + x) = x + x^2, and 1 + x is a unit.
  CHECK(L->parse("x") * L->parse("1 + x") == L->parse("x + x^2"));
  CHECK(!ideal(global_ring({"x"}), {"x + x^2"}).contains(global_ring({"x"})->parse("x")));
}

TEST_CASE("ideal membership") {
  auto R = global_ring({"x", "y"});
  Ideal I = ideal(R, {"x^2", "y"});
  CHECK(I.contains(R->zero()));
  CHECK(!I.contains(R->parse("x")));
  CHECK(I.contains(R->parse("x^3 + x*y")));
}

TEST_CASE("Buchberger criterion on random ideals") {
  std::mt19937 rng(2024);
  for (auto ord : {MonomialOrder::degrevlex(3), MonomialOrder::lex(3), MonomialOrder::neg_degrevlex(3)}) {
    auto R = Ring::create({"x", "y", "z"}, ord);
    for (int t = 0; t < 15; ++t) {
      std::vector<Poly> g;
      for (int k = 0; k < 3; ++k) g.push_back(random_poly(rng, R, 3, 1, 3));
      Ideal I(R, g);
      CHECK(spairs_reduce_to_zero(I.basis_vecs(), R->module_order()));
      for (const auto& f : g) CHECK(I.contains(f));
      // Random combinations stay inside.
      Poly c = R->zero();
      for (const auto& f : g) c += f * random_poly(rng, R, 2, 0, 2);
      CHECK(I.contains(c));
    }
  }
}

TEST_CASE("engine over a prime field") {
  using F = ModP<32003>;
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> e(0, 3), c(1, 32002);
  int skipped = 0, total = 0;
  for (auto mo : {MonomialOrder::degrevlex(3), MonomialOrder::neg_degrevlex(3)}) {
    ModuleOrder ord{mo, 0};
    for (int t = 0; t < 20; ++t) {
      std::vector<BasicVec<F>> gens;
      for (int k = 0; k < 3; ++k) {
        std::vector<VecTerm<F>> terms;
        for (int j = 0; j < 3; ++j) {
          Monomial m{e(rng), e(rng), e(rng)};
          if (m.is_one()) m.set(0, 1);
          terms.push_back({m, 0, F(c(rng))});
        }
        gens.emplace_back(std::move(terms), ord);
      }
      auto sb = standard_basis(gens, ord);
      CHECK(spairs_reduce_to_zero(sb, ord, &skipped, &total));
      CHECK(contains_all(sb, gens, ord));
      if (!ord.is_global())
        for (int k : {3, 5, 7}) CHECK(colength_matches(gens, sb, 3, k));
    }
  }
  MESSAGE("local S-pairs left undecided by bounded Mora reduction: " << skipped << " of " << total);
}

TEST_CASE("characteristic p rings") {
  auto R = Ring::create({"x", "y"}, MonomialOrder::degrevlex(2), {}, 3);
  Ideal I = ideal(R, {"x^3 + y^3"});
  // (x + y)^3 = x^3 + y^3 in characteristic 3.
  CHECK(I.contains(R->parse("(x+y)^3")));
  CHECK(R->parse("4*x").to_string() == "x");
  CHECK_THROWS(Ring::create({"x"}, MonomialOrder::degrevlex(1), {}, 4));
}

TEST_CASE("module standard bases and syzygies") {
  auto R = global_ring({"x", "y"});
  RMat a = RMat::parse(R, "[x, y]");
  Submodule s = syzygies(a);
  CHECK(s.equals(Submodule(R, 2, {vec(R, {"y", "-x"})})));

  RMat id = RMat::identity(R, 2);
  CHECK(syzygies(id).is_zero());

  auto Q = global_ring({"x", "y", "z"}, {"y^2", "z^2"});
  RMat m = RMat::parse(Q, "[x, y; 0, z]");
  Submodule sq = syzygies(m);
  CHECK(!sq.is_zero());
  for (const auto& g : sq.gens()) {
    for (std::size_t i = 0; i < 2; ++i) {
      Poly row = Q->zero();
      for (std::size_t j = 0; j < 2; ++j) row += m(i, j) * g[j];
      CHECK(Q->in_quotient(row));
    }
  }
  // (0, z) kills the second column modulo z^2 and y*z.
  CHECK(sq.contains(vec(Q, {"0", "y*z"})));
  CHECK(sq.contains(vec(Q, {"y*z", "-x*z"})));
}

TEST_CASE("syzygy soundness on random matrices") {
  std::mt19937 rng(5);
  for (auto R : {global_ring({"x", "y"}), local_ring({"x", "y"}), global_ring({"x", "y"}, {"x*y"})}) {
    for (int t = 0; t < 8; ++t) {
      RMat a = random_matrix(rng, R, 2, 3, 1, 2);
      Submodule syz = syzygies(a);
      for (const auto& g : syz.gens())
        for (std::size_t i = 0; i < 2; ++i) {
          Poly row = R->zero();
          for (std::size_t j = 0; j < 3; ++j) row += a(i, j) * g[j];
          CHECK(R->in_quotient(row));
        }
    }
  }
}

TEST_CASE("bases are deterministic") {
  std::mt19937 rng(3);
  auto R = local_ring({"x", "y"});
  std::vector<Poly> g;
  for (int k = 0; k < 3; ++k) g.push_back(random_poly(rng, R, 3, 1, 3));
  auto a = Ideal(R, g).standard_basis();
  auto b = Ideal(R, g).standard_basis();
  CHECK(strings(a) == strings(b));
}

TEST_CASE("degree cap aborts runaway computations") {
  auto R = global_ring({"x", "y", "z"});
  int saved = settings().degree_cap.load();
  settings().degree_cap = 3;
  Ideal I = ideal(R, {"x^3 - y*z", "y^3 - x*z^2", "z^4 - x^2*y"});
  CHECK_THROWS_AS(I.standard_basis(), DegreeCapExceeded);
  settings().degree_cap = saved;
}
