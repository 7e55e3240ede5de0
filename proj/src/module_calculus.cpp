#include "singulocus/module_calculus.hpp"

#include "singulocus/ideal_calculus.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace singulocus {
namespace {

class MinorExpander {
 public:
  explicit MinorExpander(const RMat& a) : a_(a) {
    if (a.rows() > 32 || a.cols() > 32) throw std::invalid_argument("matrix too large for minors");
  }

  // Expansion along the lowest row of `rows`.
  Poly det(std::uint32_t rows, std::uint32_t cols) {
    if (rows == 0) return a_.ring()->one();
    std::uint64_t key = (std::uint64_t(rows) << 32) | cols;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int r = std::countr_zero(rows);
    Poly acc = a_.ring()->zero();
    int sign_pos = 0;
    for (std::uint32_t cs = cols; cs; cs &= cs - 1) {
      const int c = std::countr_zero(cs);
      const Poly& e = a_(r, c);
      if (!e.is_zero()) {
        Poly sub = det(rows & ~(1u << r), cols & ~(1u << c));
        if (!sub.is_zero()) acc = (sign_pos % 2 == 0) ? acc + e * sub : acc - e * sub;
      }
      ++sign_pos;
    }
    acc = a_.ring()->reduce(acc);
    memo_.emplace(key, acc);
    return acc;
  }

 private:
  const RMat& a_;
  std::unordered_map<std::uint64_t, Poly> memo_;
};

}  // namespace

std::vector<std::uint32_t> subsets_colex(std::size_t n, std::size_t k) {
  if (n > 31) throw std::invalid_argument("subset universe too large");
  std::vector<std::uint32_t> out;
  if (k > n) return out;
  for (std::uint32_t s = 0; s < (1u << n); ++s)
    if (static_cast<std::size_t>(std::popcount(s)) == k) out.push_back(s);
  return out;
}

Poly determinant(const RMat& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  MinorExpander ex(a);
  std::uint32_t all = a.rows() == 32 ? ~0u : (1u << a.rows()) - 1;
  return ex.det(all, all);
}

std::vector<Poly> minors(const RMat& a, std::size_t j) {
  std::vector<Poly> out;
  if (j > std::min(a.rows(), a.cols())) return out;
  MinorExpander ex(a);
  auto rs = subsets_colex(a.rows(), j);
  auto cs = subsets_colex(a.cols(), j);
  for (auto r : rs)
    for (auto c : cs) out.push_back(ex.det(r, c));
  return out;
}

Ideal det_ideal(const RMat& a, std::size_t j) {
  if (j == 0) return Ideal::whole(a.ring());
  return Ideal(a.ring(), minors(a, j)).simplified();
}

Submodule image(const RMat& a) {
  std::vector<ModuleVector> cols;
  for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(a.column(j));
  return Submodule(a.ring(), a.rows(), std::move(cols));
}

Submodule syzygies(const RMat& a) {
  const RingPtr& R = a.ring();
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<Vec> gens;
  for (std::size_t j = 0; j < n; ++j) {
    ModuleVector v = a.column(j);
    v.resize(m + n, R->zero());
    v[m + j] = R->one();
    gens.push_back(R->to_vec(v));
  }
  std::vector<ModuleVector> out;
  for (const auto& w : R->kernel(std::move(gens), m, n)) out.push_back(R->from_vec(w, n));
  return Submodule(R, n, std::move(out));
}

RMat exterior_map(const RMat& a, std::size_t k) {
  const std::size_t m = a.rows();
  if (k < 1 || k > m) throw std::out_of_range("exterior_map: k out of range");
  auto rows = subsets_colex(m, k);
  auto ts = subsets_colex(m, k - 1);
  std::unordered_map<std::uint32_t, std::size_t> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
  RMat out(a.ring(), rows.size(), a.cols() * ts.size());
  for (std::size_t c = 0; c < a.cols(); ++c)
    for (std::size_t ti = 0; ti < ts.size(); ++ti) {
      const std::uint32_t t = ts[ti];
      const std::size_t col = c * ts.size() + ti;
      for (std::size_t i = 0; i < m; ++i) {
        if (t & (1u << i)) continue;
        const Poly& e = a(i, c);
        if (e.is_zero()) continue;
        int below = std::popcount(t & ((1u << i) - 1));
        out(row_index.at(t | (1u << i)), col) = below % 2 ? -e : e;
      }
    }
  return out;
}

Ideal colon_into_submodule(const Submodule& n, const ModuleVector& v) {
  const RingPtr& R = n.ring();
  const std::size_t m = n.rank();
  if (v.size() != m) throw std::invalid_argument("colon_into_submodule: rank mismatch");
  std::vector<Vec> gens;
  ModuleVector link = v;
  link.push_back(R->one());
  gens.push_back(R->to_vec(link));
  for (const auto& g : n.gens()) {
    Vec x = R->to_vec(g);
    if (!x.is_zero()) gens.push_back(std::move(x));
  }
  std::vector<Poly> out;
  for (const auto& w : R->kernel(std::move(gens), m, 1)) out.push_back(w.component(0, R->poly_ring()));
  return Ideal(R, std::move(out));
}

Ideal ann_coker(const RMat& a) {
  const RingPtr& R = a.ring();
  const std::size_t m = a.rows();
  if (m == 0) return Ideal::whole(R);
  // Distinct nonzero columns up to scalars, reduced mod Q.
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    ModuleVector c = a.column(j);
    for (auto& p : c) p = R->reduce(p);
    Vec v = R->to_vec(c).monic();
    if (v.is_zero() || std::find(cols.begin(), cols.end(), v) != cols.end()) continue;
    cols.push_back(std::move(v));
  }
  if (m == 1) {
    std::vector<Poly> g;
    for (const auto& v : cols) g.push_back(v.component(0, R->poly_ring()));
    return Ideal(R, std::move(g));
  }
  if (cols.empty()) return Ideal::zero(R);
  // Ann = ∩_b (Im(A) : e_b).
  std::vector<ModuleVector> gens;
  for (const auto& v : cols) gens.push_back(R->from_vec(v, m));
  Submodule image(R, m, std::move(gens));
  std::vector<Ideal> colons;
  for (std::size_t b = 0; b < m; ++b) {
    ModuleVector e(m, R->zero());
    e[b] = R->one();
    colons.push_back(colon_into_submodule(image, e));
    if (colons.back().is_zero()) return colons.back();
  }
  return ideal_intersect(colons);
}

Ideal ann_coker_j(const RMat& a, long j) {
  const long m = static_cast<long>(a.rows());
  if (j <= 0) return Ideal::whole(a.ring());
  if (j > m) return Ideal::zero(a.ring());
  return ann_coker(exterior_map(a, static_cast<std::size_t>(m + 1 - j)));
}

}  // namespace singulocus
