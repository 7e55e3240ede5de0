#pragma once

#include "singulocus/matrix.hpp"
#include "singulocus/ring.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace singulocus::cli {

struct SessionError : std::runtime_error {
  SessionError(const std::string& msg, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

struct RingDecl {
  std::vector<std::string> vars;
  /// "degrevlex", "lex" or "local".
  std::string order;
  RingPtr ring;
};

struct IdealDecl {
  std::string ring;
  Ideal ideal;
};

struct MatrixDecl {
  std::string ring;
  RMat matrix;
};

struct Declaration {
  std::string name;
  std::variant<RingDecl, IdealDecl, MatrixDecl> value;

  const char* kind() const;
  /// The declaration in session syntax, terminated by ';'.
  std::string to_string() const;
};

class Session {
 public:
  const std::vector<Declaration>& declarations() const { return decls_; }
  const Declaration* find(const std::string& name) const;
  const std::string& source() const { return source_; }
  /// FNV-1a hash of the source text.
  std::uint64_t content_hash() const;

  /// One declaration per line.
  std::string to_string() const;

 private:
  friend Session parse_session(const std::string& text);
  std::vector<Declaration> decls_;
  std::map<std::string, std::size_t> index_;
  std::string source_;
};

Session parse_session(const std::string& text);

/// Declaration-wise equality (names, kinds, rings, generators, entries).
bool same_declarations(const Session& a, const Session& b);

std::uint64_t fnv1a(const std::string& text);

}  // namespace singulocus::cli
