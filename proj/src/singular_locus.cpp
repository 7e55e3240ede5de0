#include "singulocus/singular_locus.hpp"

#include "singulocus/ideal_calculus.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace singulocus {

RMat sing_matrix(const std::vector<Poly>& f, const DerBasis& der) {
  const RingPtr& R = der.ring;
  const std::size_t n = f.size();
  RMat m(R, n, n * n + der.gens.size());
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t k = 0; k < n; ++k) m(b, b * n + k) = R->reduce(f[k]);
  for (std::size_t d = 0; d < der.gens.size(); ++d)
    for (std::size_t i = 0; i < n; ++i) m(i, n * n + d) = apply_der(R, der.gens[d], f[i]);
  return m;
}

Ideal sing_locus(const Ideal& J, long r, const DerBasis& der) {
  if (!same_ring(J.ring(), der.ring)) throw RingMismatch();
  const long n = static_cast<long>(J.gens().size());
  if (r > n) return J;
  return ann_coker_j(sing_matrix(J.gens(), der), r);
}

Ideal sing_locus(const Ideal& J, long r, DerBasis::Variant variant) {
  const long n = static_cast<long>(J.gens().size());
  if (r > n || r <= 0) return r <= 0 ? Ideal::whole(J.ring()) : J;
  return sing_locus(J, r, der_basis(J.ring(), variant));
}

namespace {

class PfaffianExpander {
 public:
  explicit PfaffianExpander(const RMat& a) : a_(a) {}

  // Pfaffian of the principal submatrix on the index set `mask`.
  const Poly& operator()(std::uint32_t mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    Poly out = a_.ring()->zero();
    const int size = std::popcount(mask);
    if (size == 0) {
      out = a_.ring()->one();
    } else if (size % 2 == 0) {
      const int first = std::countr_zero(mask);
      const std::uint32_t rest = mask & ~(1u << first);
      int pos = 0;
      for (std::uint32_t s = rest; s; s &= s - 1) {
        const int j = std::countr_zero(s);
        const Poly& e = a_(static_cast<std::size_t>(first), static_cast<std::size_t>(j));
        if (!e.is_zero()) {
          Poly term = e * (*this)(rest & ~(1u << j));
          out = pos % 2 == 0 ? out + term : out - term;
        }
        ++pos;
      }
    }
    return memo_.emplace(mask, std::move(out)).first->second;
  }

 private:
  const RMat& a_;
  std::unordered_map<std::uint32_t, Poly> memo_;
};

}  // namespace

Poly pfaffian(const RMat& a) {
  if (!a.is_skew()) throw std::invalid_argument("pfaffian: matrix is not skew-symmetric");
  if (a.rows() > 31) throw std::invalid_argument("pfaffian: matrix too large");
  PfaffianExpander pf(a);
  return a.ring()->reduce(pf(a.rows() == 0 ? 0u : (1u << a.rows()) - 1));
}

Ideal pfaffian_ideal(const RMat& a, long j) {
  if (!a.is_skew()) throw std::invalid_argument("pfaffian_ideal: matrix is not skew-symmetric");
  const long m = static_cast<long>(a.rows());
  if (j < 0 || j > m) throw std::invalid_argument("pfaffian_ideal: order out of range");
  if (j % 2 != 0) throw std::invalid_argument("pfaffian_ideal: order must be even");
  if (j == 0) return Ideal::whole(a.ring());
  PfaffianExpander pf(a);
  std::vector<Poly> gens;
  for (std::uint32_t s : subsets_colex(a.rows(), static_cast<std::size_t>(j)))
    gens.push_back(a.ring()->reduce(pf(s)));
  return Ideal(a.ring(), std::move(gens)).simplified();
}

RMat differentials_presentation(const Ideal& J) {
  const RingPtr& R = J.ring();
  std::vector<Poly> g = R->quotient();
  g.insert(g.end(), J.gens().begin(), J.gens().end());
  RMat m(R, R->nvars(), g.size());
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < R->nvars(); ++i) m(i, j) = R->reduce(g[j].derivative(i));
  return m;
}

Ideal fitt_omega(const Ideal& J, long k) {
  if (J.ring()->characteristic() != 0) throw std::invalid_argument("fitt_omega requires characteristic zero");
  const long p = static_cast<long>(J.ring()->nvars());
  const long order = p - k;
  if (order <= 0) return Ideal::whole(J.ring());
  RMat d = differentials_presentation(J);
  return ideal_sum(det_ideal(d, static_cast<std::size_t>(order)), J);
}

}  // namespace singulocus
