#include "singulocus/monomial_order.hpp"

namespace singulocus {

MonomialOrder MonomialOrder::block(const MonomialOrder& first, const MonomialOrder& rest) {
  MonomialOrder o = first;
  const std::size_t off = first.nvars();
  for (Block b : rest.blocks_) {
    b.begin += off;
    b.end += off;
    o.blocks_.push_back(b);
  }
  return o;
}

bool MonomialOrder::is_global() const {
  for (const Block& b : blocks_)
    if (b.kind == Kind::NegDegRevLex) return false;
  return true;
}

bool MonomialOrder::is_local() const {
  for (const Block& b : blocks_)
    if (b.kind != Kind::NegDegRevLex) return false;
  return true;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  auto kind_name = [](Kind k) {
    switch (k) {
      case Kind::Lex: return "lp";
      case Kind::DegRevLex: return "dp";
      case Kind::NegDegRevLex: return "ds";
    }
    return "?";
  };
  if (blocks_.size() == 1) return kind_name(blocks_[0].kind);
  std::string s = "(";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) s += ",";
    s += kind_name(blocks_[i].kind);
    s += "(" + std::to_string(blocks_[i].end - blocks_[i].begin) + ")";
  }
  return s + ")";
}

}  // namespace singulocus
