#pragma once

#include "singulocus/ring.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace singulocus {

/// Dense matrix of polynomials over a Ring, row-major.
class RMat {
 public:
  RMat() = default;
  RMat(RingPtr ring, std::size_t rows, std::size_t cols);
  RMat(RingPtr ring, const std::vector<std::vector<Poly>>& rows);
  static RMat identity(const RingPtr& ring, std::size_t n);
  /// `[a, b; c, d]`: rows separated by `;`, entries by `,`.
  static RMat parse(const RingPtr& ring, std::string_view text);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Poly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Poly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  ModuleVector column(std::size_t j) const;
  RMat transpose() const;
  friend RMat operator*(const RMat& a, const RMat& b);
  friend RMat operator+(const RMat& a, const RMat& b);
  friend bool operator==(const RMat& a, const RMat& b);
  /// Entries replaced by their normal forms modulo Q.
  RMat reduced() const;

  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;
  bool is_symmetric() const;
  /// A^T = -A with zero diagonal (exact, on representatives reduced mod Q).
  bool is_skew() const;

  /// [a, b; c, d]
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Poly> data_;
};

/// diag(A, B)
RMat block_diagonal(const RMat& a, const RMat& b);

}  // namespace singulocus
