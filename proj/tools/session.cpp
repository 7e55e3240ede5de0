#include "session.hpp"

#include "singulocus/poly_parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

namespace singulocus::cli {
namespace {

std::string join_polys(const std::vector<Poly>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) s += ", ";
    s += ps[i].to_string();
  }
  return s;
}

struct Token {
  enum Kind { Ident, Symbol, End } kind;
  std::string text;
  std::size_t offset;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {
    // Comments become blanks so offsets stay valid.
    bool in_comment = false;
    for (char& c : s_) {
      if (c == '#') in_comment = true;
      if (c == '\n') in_comment = false;
      if (in_comment) c = ' ';
    }
    line_starts_.push_back(0);
    for (std::size_t i = 0; i < s_.size(); ++i)
      if (s_[i] == '\n') line_starts_.push_back(i + 1);
  }

  std::vector<Declaration> run() {
    std::vector<Declaration> out;
    std::set<std::string> names;
    for (;;) {
      Token t = next();
      if (t.kind == Token::End) break;
      if (t.kind != Token::Ident) fail_at(t, "expected 'ring', 'ideal' or 'matrix'");
      Token name = expect_ident("a name");
      if (names.count(name.text)) fail_offset(name.offset, "duplicate name '" + name.text + "'");
      Declaration d;
      d.name = name.text;
      if (t.text == "ring") {
        d.value = ring_body();
      } else if (t.text == "ideal") {
        d.value = ideal_body(out);
      } else if (t.text == "matrix") {
        d.value = matrix_body(out);
      } else {
        fail_at(t, "expected 'ring', 'ideal' or 'matrix'");
      }
      names.insert(d.name);
      out.push_back(std::move(d));
    }
    return out;
  }

 private:
  [[noreturn]] void fail_offset(std::size_t offset, const std::string& msg) const {
    auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
    std::size_t line = static_cast<std::size_t>(it - line_starts_.begin());
    throw SessionError(msg, line, offset - line_starts_[line - 1] + 1);
  }
  [[noreturn]] void fail_at(const Token& t, const std::string& msg) const {
    if (t.kind == Token::End) fail_offset(t.offset, msg + ", found end of input");
    fail_offset(t.offset, msg + ", found '" + t.text + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Token peek() {
    std::size_t saved = pos_;
    Token t = next();
    pos_ = saved;
    return t;
  }

  Token next() {
    skip_ws();
    if (pos_ >= s_.size()) return {Token::End, "", s_.size()};
    std::size_t start = pos_;
    char c = s_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return {Token::Ident, s_.substr(start, pos_ - start), start};
    }
    ++pos_;
    return {Token::Symbol, std::string(1, c), start};
  }

  Token expect_ident(const std::string& what) {
    Token t = next();
    if (t.kind != Token::Ident) fail_at(t, "expected " + what);
    return t;
  }
  Token expect_symbol(char c) {
    Token t = next();
    if (t.kind != Token::Symbol || t.text[0] != c) fail_at(t, std::string("expected '") + c + "'");
    return t;
  }

  struct RawPoly {
    std::string text;
    std::size_t offset;
  };

  // Text up to the next top-level ',', ';', ')' or ']'.
  RawPoly raw_poly() {
    skip_ws();
    std::size_t start = pos_;
    int depth = 0;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '(') {
        ++depth;
      } else if (c == ')') {
        if (depth == 0) break;
        --depth;
      } else if (depth == 0 && (c == ',' || c == ';' || c == ']' || c == '[' || c == '=')) {
        break;
      }
      ++pos_;
    }
    std::size_t end = pos_;
    while (end > start && std::isspace(static_cast<unsigned char>(s_[end - 1]))) --end;
    if (end == start) fail_at(peek(), "expected a polynomial");
    return {s_.substr(start, end - start), start};
  }

  std::vector<RawPoly> raw_poly_list() {
    std::vector<RawPoly> out{raw_poly()};
    while (peek().kind == Token::Symbol && peek().text == ",") {
      next();
      out.push_back(raw_poly());
    }
    return out;
  }

  Poly parse_in(const RingPtr& ring, const RawPoly& raw) const {
    try {
      return ring->parse(raw.text);
    } catch (const ParseError& e) {
      fail_offset(raw.offset + std::min(e.offset, raw.text.size()), e.message);
    }
  }

  RingDecl ring_body() {
    expect_symbol('=');
    Token field = expect_ident("a coefficient field");
    if (field.text != "QQ") fail_at(field, "expected 'QQ'");
    expect_symbol('[');
    RingDecl r;
    std::set<std::string> seen;
    for (;;) {
      Token v = expect_ident("a variable name");
      if (seen.count(v.text)) fail_offset(v.offset, "duplicate variable '" + v.text + "'");
      seen.insert(v.text);
      r.vars.push_back(v.text);
      Token sep = next();
      if (sep.kind == Token::Symbol && sep.text == "]") break;
      if (sep.kind != Token::Symbol || sep.text != ",") fail_at(sep, "expected ',' or ']'");
    }
    if (r.vars.size() > kMaxVars) fail_at(peek(), "too many variables");
    Token kind = expect_ident("'global' or 'local'");
    MonomialOrder order;
    const std::size_t n = r.vars.size();
    if (kind.text == "global") {
      Token o = expect_ident("a global order");
      if (o.text == "degrevlex" || o.text == "dp") {
        r.order = "degrevlex";
        order = MonomialOrder::degrevlex(n);
      } else if (o.text == "lex" || o.text == "lp") {
        r.order = "lex";
        order = MonomialOrder::lex(n);
      } else {
        fail_at(o, "expected 'degrevlex' or 'lex'");
      }
    } else if (kind.text == "local") {
      r.order = "local";
      order = MonomialOrder::neg_degrevlex(n);
    } else {
      fail_at(kind, "expected 'global' or 'local'");
    }
    std::vector<RawPoly> q;
    Token t = next();
    if (t.kind == Token::Symbol && t.text == "/") {
      expect_symbol('(');
      q = raw_poly_list();
      expect_symbol(')');
      t = next();
    }
    if (t.kind != Token::Symbol || t.text != ";") fail_at(t, "expected ';'");
    RingPtr plain = Ring::create(make_poly_ring(r.vars, order));
    std::vector<Poly> qs;
    for (const auto& raw : q) qs.push_back(parse_in(plain, raw));
    r.ring = Ring::create(plain->poly_ring(), std::move(qs));
    return r;
  }

  // `in <ring>` is optional and defaults to the latest ring.
  const RingDecl& ring_clause(const std::vector<Declaration>& decls, const std::optional<Token>& name,
                              const Token& where, std::string& ring_name) const {
    for (auto it = decls.rbegin(); it != decls.rend(); ++it) {
      const auto* r = std::get_if<RingDecl>(&it->value);
      if (!r) continue;
      if (!name || it->name == name->text) {
        ring_name = it->name;
        return *r;
      }
    }
    if (name) {
      for (const auto& d : decls)
        if (d.name == name->text) fail_offset(name->offset, "'" + name->text + "' is not a ring");
      fail_offset(name->offset, "undeclared ring '" + name->text + "'");
    }
    fail_offset(where.offset, "no ring declared before this declaration");
  }

  std::optional<Token> optional_in() {
    Token t = peek();
    if (t.kind == Token::Ident && t.text == "in") {
      next();
      return expect_ident("a ring name");
    }
    return std::nullopt;
  }

  IdealDecl ideal_body(const std::vector<Declaration>& decls) {
    auto name = optional_in();
    Token eq = expect_symbol('=');
    auto raws = raw_poly_list();
    expect_symbol(';');
    IdealDecl d;
    const RingDecl& r = ring_clause(decls, name, eq, d.ring);
    std::vector<Poly> gens;
    for (const auto& raw : raws) gens.push_back(parse_in(r.ring, raw));
    d.ideal = Ideal(r.ring, std::move(gens));
    return d;
  }

  MatrixDecl matrix_body(const std::vector<Declaration>& decls) {
    auto name = optional_in();
    Token eq = expect_symbol('=');
    expect_symbol('[');
    std::vector<std::vector<RawPoly>> rows;
    for (;;) {
      rows.push_back(raw_poly_list());
      Token sep = next();
      if (sep.kind == Token::Symbol && sep.text == "]") break;
      if (sep.kind != Token::Symbol || sep.text != ";") fail_at(sep, "expected ';' or ']'");
    }
    Token row_end = peek();
    expect_symbol(';');
    for (const auto& row : rows)
      if (row.size() != rows.front().size()) fail_offset(row_end.offset, "matrix rows have different lengths");
    MatrixDecl d;
    const RingDecl& r = ring_clause(decls, name, eq, d.ring);
    std::vector<std::vector<Poly>> entries;
    for (const auto& row : rows) {
      std::vector<Poly> e;
      for (const auto& raw : row) e.push_back(parse_in(r.ring, raw));
      entries.push_back(std::move(e));
    }
    d.matrix = RMat(r.ring, entries);
    return d;
  }

  std::string s_;
  std::size_t pos_ = 0;
  std::vector<std::size_t> line_starts_;
};

}  // namespace

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

const char* Declaration::kind() const {
  switch (value.index()) {
    case 0: return "ring";
    case 1: return "ideal";
    default: return "matrix";
  }
}

std::string Declaration::to_string() const {
  if (const auto* r = std::get_if<RingDecl>(&value)) {
    std::string s = "ring " + name + " = QQ[";
    for (std::size_t i = 0; i < r->vars.size(); ++i) s += (i ? "," : "") + r->vars[i];
    s += r->order == "local" ? "] local" : "] global " + r->order;
    if (r->ring->has_quotient()) s += " / (" + join_polys(r->ring->quotient()) + ")";
    return s + ";";
  }
  if (const auto* i = std::get_if<IdealDecl>(&value)) {
    std::string gens = i->ideal.gens().empty() ? "0" : join_polys(i->ideal.gens());
    return "ideal " + name + " in " + i->ring + " = " + gens + ";";
  }
  const auto& m = std::get<MatrixDecl>(value);
  return "matrix " + name + " in " + m.ring + " = " + m.matrix.to_string() + ";";
}

const Declaration* Session::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &decls_[it->second];
}

std::uint64_t Session::content_hash() const { return fnv1a(source_); }

std::string Session::to_string() const {
  std::string s;
  for (const auto& d : decls_) s += d.to_string() + "\n";
  return s;
}

Session parse_session(const std::string& text) {
  Session s;
  s.source_ = text;
  s.decls_ = Parser(text).run();
  for (std::size_t i = 0; i < s.decls_.size(); ++i) s.index_[s.decls_[i].name] = i;
  return s;
}

bool same_declarations(const Session& a, const Session& b) {
  if (a.declarations().size() != b.declarations().size()) return false;
  for (std::size_t i = 0; i < a.declarations().size(); ++i) {
    const auto &x = a.declarations()[i], &y = b.declarations()[i];
    if (x.name != y.name || x.value.index() != y.value.index()) return false;
    if (const auto* r = std::get_if<RingDecl>(&x.value)) {
      const auto& s = std::get<RingDecl>(y.value);
      if (r->vars != s.vars || r->order != s.order || !same_ring(r->ring, s.ring)) return false;
    } else if (const auto* i = std::get_if<IdealDecl>(&x.value)) {
      const auto& j = std::get<IdealDecl>(y.value);
      if (i->ring != j.ring || !same_ring(i->ideal.ring(), j.ideal.ring()) || i->ideal.gens() != j.ideal.gens())
        return false;
    } else {
      const auto& m = std::get<MatrixDecl>(x.value);
      const auto& n = std::get<MatrixDecl>(y.value);
      if (m.ring != n.ring || !same_ring(m.matrix.ring(), n.matrix.ring()) || !(m.matrix == n.matrix)) return false;
    }
  }
  return true;
}

}  // namespace singulocus::cli
