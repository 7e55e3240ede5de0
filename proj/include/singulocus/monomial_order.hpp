#pragma once

#include "singulocus/monomial.hpp"

#include <compare>
#include <string>
#include <vector>

namespace singulocus {

/// A monomial order, stored as a product of blocks over contiguous variable
/// ranges. Blocks are compared left to right; the first block that
/// distinguishes two monomials decides.
class MonomialOrder {
 public:
  enum class Kind : std::uint8_t { Lex, DegRevLex, NegDegRevLex };

  struct Block {
    Kind kind;
    std::size_t begin;
    std::size_t end;
    friend bool operator==(const Block&, const Block&) = default;
  };

  MonomialOrder() = default;

  static MonomialOrder lex(std::size_t n) { return single(Kind::Lex, n); }
  static MonomialOrder degrevlex(std::size_t n) { return single(Kind::DegRevLex, n); }
  static MonomialOrder neg_degrevlex(std::size_t n) {
    return single(Kind::NegDegRevLex, n);
  }
  /// Elimination order: `first` on the leading variables, `rest` on the others.
  static MonomialOrder block(const MonomialOrder& first, const MonomialOrder& rest);

  std::size_t nvars() const { return blocks_.empty() ? 0 : blocks_.back().end; }
  const std::vector<Block>& blocks() const { return blocks_; }

  /// Every block global: 1 is the smallest monomial.
  bool is_global() const;
  /// Every block local: 1 is the largest monomial.
  bool is_local() const;

  /// -1, 0, +1 for a < b, a == b, a > b.
  int cmp(const Monomial& a, const Monomial& b) const {
    for (const Block& blk : blocks_) {
      int c = cmp_block(blk, a, b);
      if (c != 0) return c;
    }
    return 0;
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  static MonomialOrder single(Kind k, std::size_t n) {
    MonomialOrder o;
    o.blocks_.push_back({k, 0, n});
    return o;
  }

  static int cmp_block(const Block& blk, const Monomial& a, const Monomial& b) {
    switch (blk.kind) {
      case Kind::Lex:
        for (std::size_t i = blk.begin; i < blk.end; ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      case Kind::DegRevLex:
      case Kind::NegDegRevLex: {
        int da = 0, db = 0;
        for (std::size_t i = blk.begin; i < blk.end; ++i) {
          da += a[i];
          db += b[i];
        }
        if (da != db) {
          int c = da > db ? 1 : -1;
          return blk.kind == Kind::DegRevLex ? c : -c;
        }
        for (std::size_t i = blk.end; i-- > blk.begin;)
          if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        return 0;
      }
    }
    return 0;
  }

  std::vector<Block> blocks_;
};

}  // namespace singulocus
