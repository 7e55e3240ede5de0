#include "singulocus/matrix.hpp"

#include <stdexcept>

namespace singulocus {
namespace {

// Splits on `sep` at parenthesis depth zero.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == sep && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void check_same(const RMat& a, const RMat& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
}

}  // namespace

RMat::RMat(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, ring_->zero()) {}

RMat::RMat(RingPtr ring, const std::vector<std::vector<Poly>>& rows) : ring_(std::move(ring)) {
  rows_ = rows.size();
  cols_ = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
    for (const auto& p : r) {
      if (!same_ring(p.ring(), ring_->poly_ring())) throw RingMismatch();
      data_.push_back(ring_->normalize(p));
    }
  }
}

RMat RMat::identity(const RingPtr& ring, std::size_t n) {
  RMat m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ring->one();
  return m;
}

RMat RMat::parse(const RingPtr& ring, std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw std::invalid_argument("matrix must be written as [a, b; c, d]");
  std::vector<std::vector<Poly>> rows;
  for (auto row : split_top(text.substr(1, text.size() - 2), ';')) {
    std::vector<Poly> r;
    for (auto e : split_top(row, ',')) {
      e = trim(e);
      if (e.empty()) throw std::invalid_argument("empty matrix entry");
      r.push_back(ring->parse(e));
    }
    rows.push_back(std::move(r));
  }
  return RMat(ring, rows);
}

ModuleVector RMat::column(std::size_t j) const {
  ModuleVector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

RMat RMat::transpose() const {
  RMat t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RMat operator*(const RMat& a, const RMat& b) {
  check_same(a, b);
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  RMat c(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Poly s = a.ring_->zero();
      for (std::size_t k = 0; k < a.cols_; ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

RMat operator+(const RMat& a, const RMat& b) {
  check_same(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  RMat c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

bool operator==(const RMat& a, const RMat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RMat RMat::reduced() const {
  RMat r = *this;
  for (auto& p : r.data_) p = ring_->reduce(p);
  return r;
}

bool RMat::is_zero() const {
  for (const auto& p : data_)
    if (!ring_->reduce(p).is_zero()) return false;
  return true;
}

bool RMat::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!ring_->reduce((*this)(i, j) - (*this)(j, i)).is_zero()) return false;
  return true;
}

bool RMat::is_skew() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!ring_->reduce((*this)(i, i)).is_zero()) return false;
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!ring_->reduce((*this)(i, j) + (*this)(j, i)).is_zero()) return false;
  }
  return true;
}

std::string RMat::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += ", ";
      s += (*this)(i, j).to_string();
    }
  }
  return s + "]";
}

RMat block_diagonal(const RMat& a, const RMat& b) {
  check_same(a, b);
  RMat c(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
  return c;
}

}  // namespace singulocus
