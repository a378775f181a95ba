#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "mg/determinantal.hpp"
#include "mg/polynomial.hpp"
#include "mg/ring.hpp"

namespace mgcli {

struct Location {
  int line = 1;
  int column = 1;
};

/// Syntax or semantic error at a source location.
class ParseError : public std::runtime_error {
 public:
  ParseError(Location where, const std::string& message)
      : std::runtime_error(std::to_string(where.line) + ":" + std::to_string(where.column) + ": " + message),
        where_(where) {}

  Location where() const { return where_; }

 private:
  Location where_;
};

struct RingDecl {
  std::vector<int> blocks;
  mg::Coefficient characteristic = mg::kDefaultCharacteristic;

  bool operator==(const RingDecl&) const = default;
};

/// One generator-producing item: a polynomial, a named ideal or polynomial,
/// minors(A, t), colon(I, F) or intersect(I, J).
struct IdealItem {
  enum class Kind { Poly, Ref, Minors, Colon, Intersect };
  Kind kind = Kind::Poly;
  mg::Polynomial poly;
  std::string name;
  int t = 0;
  std::vector<IdealItem> operands;

  bool operator==(const IdealItem&) const = default;
};

struct IdealDecl {
  std::string name;
  std::vector<IdealItem> items;

  bool operator==(const IdealDecl&) const = default;
};

struct PolyDecl {
  std::string name;
  mg::Polynomial poly;

  bool operator==(const PolyDecl&) const = default;
};

struct MatrixDecl {
  std::string name;
  mg::Grading mode = mg::Grading::Row;
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// Either explicit row-major entries or a seed for a random generic matrix.
  std::vector<mg::Polynomial> entries;
  std::optional<std::uint64_t> seed;

  bool operator==(const MatrixDecl&) const = default;
};

struct Argument {
  enum class Kind { Ideal, Poly, Matrix, Integer };
  Kind kind = Kind::Ideal;
  IdealItem item;
  std::string name;
  long long value = 0;

  bool operator==(const Argument&) const = default;
};

struct Command {
  std::string name;
  std::vector<Argument> args;
  std::map<std::string, std::string> options;
  Location where;

  bool operator==(const Command& other) const {
    return name == other.name && args == other.args && options == other.options;
  }
};

using Statement = std::variant<IdealDecl, PolyDecl, MatrixDecl, Command>;

struct SessionScript {
  RingDecl ring;
  std::vector<Statement> statements;

  mg::BlockRing block_ring() const { return mg::BlockRing(ring.blocks, ring.characteristic); }
  bool operator==(const SessionScript&) const = default;
};

struct ParseOptions {
  /// Replaces the characteristic named in the ring declaration.
  std::optional<mg::Coefficient> characteristic;
};

/// Statements are separated by newlines or '/'. '#' starts a comment.
SessionScript parse(const std::string& text, const ParseOptions& options = {});

/// Script text that parses back to an equal SessionScript.
std::string serialize(const SessionScript& script);
std::string serialize(const IdealItem& item, const mg::BlockRing& ring);

/// Names of all commands the runner understands.
const std::vector<std::string>& command_names();

}  // namespace mgcli
