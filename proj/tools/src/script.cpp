#include "mgcli/script.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "mg/errors.hpp"

namespace mgcli {
namespace {

struct Token {
  enum class Kind { Ident, Int, Symbol, Newline, End };
  Kind kind = Kind::End;
  std::string text;
  Location where;
  bool space_before = false;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> tokens;
  Location at;
  std::size_t i = 0;
  int depth = 0;
  bool space = true;
  const auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++at.line;
        at.column = 1;
      } else {
        ++at.column;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (c == '\n' || (c == '/' && depth == 0)) {
      if (depth == 0) tokens.push_back({Token::Kind::Newline, std::string(1, c), at, space});
      advance(1);
      space = true;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      space = true;
      continue;
    }
    Token t;
    t.where = at;
    t.space_before = space;
    space = false;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      t.kind = Token::Kind::Ident;
      t.text = text.substr(i, j - i);
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = Token::Kind::Int;
      t.text = text.substr(i, j - i);
      advance(j - i);
    } else if (std::string("[](){},;=*^+-:").find(c) != std::string::npos) {
      t.kind = Token::Kind::Symbol;
      t.text = std::string(1, c);
      if (c == '(' || c == '[' || c == '{') ++depth;
      if ((c == ')' || c == ']' || c == '}') && depth > 0) --depth;
      advance(1);
    } else {
      throw ParseError(at, std::string("unexpected character '") + c + "'");
    }
    tokens.push_back(std::move(t));
  }
  tokens.push_back({Token::Kind::End, "", at, true});
  return tokens;
}

struct Signature {
  std::vector<Argument::Kind> args;
  std::set<std::string> options;
};

const std::map<std::string, Signature>& signatures() {
  using K = Argument::Kind;
  static const std::map<std::string, Signature> table = {
      {"gb", {{K::Ideal}, {"order"}}},
      {"gin", {{K::Ideal}, {"order", "seed", "trials"}}},
      {"hilbert", {{K::Ideal}, {"order"}}},
      {"radical", {{K::Ideal}, {"expect"}}},
      {"borel", {{K::Ideal}, {"expect"}}},
      {"dual", {{K::Ideal}, {}}},
      {"polarize", {{K::Ideal}, {}}},
      {"minors", {{K::Matrix, K::Integer}, {}}},
      {"cs", {{K::Ideal}, {"expect", "seed", "trials"}}},
      {"csstar", {{K::Ideal}, {"expect", "seed", "trials"}}},
      {"ugb", {{K::Ideal}, {"expect", "orders", "seed"}}},
      {"closure", {{K::Ideal, K::Poly}, {"expect", "seed", "trials"}}},
      {"bounds", {{K::Ideal}, {"bound", "mode", "orders", "seed", "expect"}}},
      {"main-theorem", {{K::Matrix}, {"expect", "orders", "seed", "trials"}}},
      {"colon", {{K::Ideal, K::Poly}, {}}},
      {"intersect", {{K::Ideal, K::Ideal}, {}}},
      {"dual-theorem", {{K::Ideal}, {"expect", "seed", "trials"}}},
  };
  return table;
}

const std::set<std::string> kReserved = {"ring", "ideal", "poly", "matrix", "minors", "colon", "intersect", "x"};

class Parser {
 public:
  Parser(std::vector<Token> tokens, const ParseOptions& options) : tokens_(std::move(tokens)), options_(options) {}

  SessionScript run() {
    skip_newlines();
    if (!is_ident("ring")) throw ParseError(peek().where, "script must start with a ring declaration");
    parse_ring();
    end_statement();
    while (peek().kind != Token::Kind::End) {
      if (is_ident("ring")) throw ParseError(peek().where, "ring declared twice");
      if (is_ident("ideal")) {
        script_.statements.emplace_back(parse_ideal_decl());
      } else if (is_ident("poly")) {
        script_.statements.emplace_back(parse_poly_decl());
      } else if (is_ident("matrix")) {
        script_.statements.emplace_back(parse_matrix_decl());
      } else {
        script_.statements.emplace_back(parse_command());
      }
      end_statement();
    }
    return std::move(script_);
  }

 private:
  enum class NameKind { Ideal, Poly, Matrix };

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool is_ident(const std::string& word, std::size_t ahead = 0) const {
    return peek(ahead).kind == Token::Kind::Ident && peek(ahead).text == word;
  }
  bool is_symbol(const std::string& s, std::size_t ahead = 0) const {
    return peek(ahead).kind == Token::Kind::Symbol && peek(ahead).text == s;
  }
  [[noreturn]] void fail(const Token& t, const std::string& message) const {
    throw ParseError(t.where, message + (t.kind == Token::Kind::End ? " at end of input"
                                         : t.kind == Token::Kind::Newline ? " at end of line"
                                                                         : " near '" + t.text + "'"));
  }
  void expect_symbol(const std::string& s) {
    if (!is_symbol(s)) fail(peek(), "expected '" + s + "'");
    next();
  }
  std::string expect_ident() {
    if (peek().kind != Token::Kind::Ident) fail(peek(), "expected a name");
    return next().text;
  }
  void expect_keyword(const std::string& word) {
    if (!is_ident(word)) fail(peek(), "expected '" + word + "'");
    next();
  }
  long long expect_int() {
    const auto& t = peek();
    if (t.kind != Token::Kind::Int) fail(t, "expected an integer");
    next();
    try {
      return std::stoll(t.text);
    } catch (const std::out_of_range&) {
      throw ParseError(t.where, "integer too large: " + t.text);
    }
  }
  void skip_newlines() {
    while (peek().kind == Token::Kind::Newline) next();
  }
  void end_statement() {
    if (peek().kind == Token::Kind::End) return;
    if (peek().kind != Token::Kind::Newline) fail(peek(), "expected end of statement");
    skip_newlines();
  }

  void parse_ring() {
    next();
    expect_keyword("v");
    expect_symbol("=");
    const auto v_token = peek();
    const auto v = expect_int();
    expect_keyword("blocks");
    expect_symbol("=");
    expect_symbol("[");
    auto& blocks = script_.ring.blocks;
    while (true) {
      const auto& t = peek();
      const auto n = expect_int();
      if (n < 1) throw ParseError(t.where, "block sizes must be positive");
      blocks.push_back(static_cast<int>(n));
      if (is_symbol("]")) break;
      expect_symbol(",");
    }
    next();
    if (static_cast<long long>(blocks.size()) != v) {
      throw ParseError(v_token.where, "v=" + std::to_string(v) + " but " + std::to_string(blocks.size()) +
                                          " block sizes given");
    }
    if (is_ident("char")) {
      next();
      expect_symbol("=");
      const auto& t = peek();
      const auto p = expect_int();
      if (p < 2 || p >= (1LL << 31)) throw ParseError(t.where, "characteristic out of range");
      script_.ring.characteristic = static_cast<mg::Coefficient>(p);
    }
    if (options_.characteristic) script_.ring.characteristic = *options_.characteristic;
    try {
      ring_.emplace(script_.ring.blocks, script_.ring.characteristic);
    } catch (const mg::Error& e) {
      throw ParseError(v_token.where, e.what());
    }
  }

  std::string new_name(NameKind kind) {
    const auto& t = peek();
    const auto name = expect_ident();
    if (kReserved.count(name) || signatures().count(name)) throw ParseError(t.where, "'" + name + "' is reserved");
    if (names_.count(name)) throw ParseError(t.where, "name '" + name + "' already defined");
    names_[name] = kind;
    return name;
  }

  const mg::BlockRing& ring() const { return *ring_; }
  mg::Coefficient prime() const { return ring_->characteristic(); }

  // poly := [sign] term (sign term)*
  mg::Polynomial parse_poly() {
    mg::Polynomial result(prime());
    bool negative = false;
    if (is_symbol("+") || is_symbol("-")) negative = next().text == "-";
    auto term = parse_term();
    result = negative ? -term : term;
    while (is_symbol("+") || is_symbol("-")) {
      negative = next().text == "-";
      term = parse_term();
      result = negative ? result - term : result + term;
    }
    return result;
  }

  mg::Polynomial parse_term() {
    auto value = parse_factor();
    while (is_symbol("*")) {
      next();
      value = value * parse_factor();
    }
    return value;
  }

  mg::Polynomial parse_factor() {
    auto base = parse_primary();
    if (is_symbol("^")) {
      next();
      const auto& t = peek();
      const auto e = expect_int();
      if (e > 255) throw ParseError(t.where, "exponent too large");
      base = base.pow(static_cast<int>(e));
    }
    return base;
  }

  mg::Polynomial parse_primary() {
    const auto& t = peek();
    if (t.kind == Token::Kind::Int) {
      const auto c = expect_int();
      return mg::Polynomial::constant(prime(), c);
    }
    if (is_symbol("(")) {
      next();
      auto p = parse_poly();
      expect_symbol(")");
      return p;
    }
    if (is_ident("x") && is_symbol("[", 1)) {
      next();
      next();
      const auto& bt = peek();
      const auto block = expect_int();
      expect_symbol(",");
      const auto& pt = peek();
      const auto position = expect_int();
      expect_symbol("]");
      if (block < 1 || block > static_cast<long long>(ring().num_blocks())) {
        throw ParseError(bt.where, "block out of range: " + std::to_string(block));
      }
      if (position < 1 || position > ring().block_size(static_cast<std::size_t>(block - 1))) {
        throw ParseError(pt.where, "position out of range: " + std::to_string(position));
      }
      return mg::Polynomial::variable(
          prime(), ring().var(static_cast<std::size_t>(block - 1), static_cast<std::size_t>(position - 1)));
    }
    if (t.kind == Token::Kind::Ident) {
      const auto it = polys_.find(t.text);
      if (it == polys_.end()) {
        if (names_.count(t.text)) throw ParseError(t.where, "'" + t.text + "' is not a polynomial");
        throw ParseError(t.where, "undefined name '" + t.text + "'");
      }
      next();
      return it->second;
    }
    fail(t, "expected a polynomial");
  }

  IdealItem parse_poly_item() {
    IdealItem item;
    item.kind = IdealItem::Kind::Poly;
    item.poly = parse_poly();
    return item;
  }

  IdealItem parse_ideal_item() {
    const auto& t = peek();
    IdealItem item;
    if (is_ident("minors") && is_symbol("(", 1)) {
      next();
      next();
      item.kind = IdealItem::Kind::Minors;
      item.name = expect_matrix();
      expect_symbol(",");
      const auto& tt = peek();
      item.t = static_cast<int>(expect_int());
      const auto& m = matrices_.at(item.name);
      if (item.t < 1 || item.t > static_cast<int>(std::min(m.rows, m.cols))) {
        throw ParseError(tt.where, "minor size out of range");
      }
      expect_symbol(")");
      return item;
    }
    if ((is_ident("colon") || is_ident("intersect")) && is_symbol("(", 1)) {
      const bool colon = t.text == "colon";
      next();
      next();
      item.kind = colon ? IdealItem::Kind::Colon : IdealItem::Kind::Intersect;
      item.operands.push_back(parse_ideal_item());
      expect_symbol(",");
      item.operands.push_back(colon ? parse_poly_item() : parse_ideal_item());
      expect_symbol(")");
      return item;
    }
    if (t.kind == Token::Kind::Ident && !is_ident("x")) {
      const auto it = names_.find(t.text);
      if (it == names_.end()) throw ParseError(t.where, "undefined name '" + t.text + "'");
      if (it->second == NameKind::Matrix) throw ParseError(t.where, "'" + t.text + "' is a matrix, not an ideal");
      if (it->second == NameKind::Ideal) {
        next();
        item.kind = IdealItem::Kind::Ref;
        item.name = t.text;
        return item;
      }
    }
    return parse_poly_item();
  }

  std::string expect_matrix() {
    const auto& t = peek();
    const auto name = expect_ident();
    const auto it = names_.find(name);
    if (it == names_.end()) throw ParseError(t.where, "undefined name '" + name + "'");
    if (it->second != NameKind::Matrix) throw ParseError(t.where, "'" + name + "' is not a matrix");
    return name;
  }

  IdealDecl parse_ideal_decl() {
    next();
    IdealDecl decl;
    const auto& t = peek();
    const auto name = expect_ident();
    expect_symbol("=");
    decl.items.push_back(parse_ideal_item());
    while (is_symbol(",")) {
      next();
      decl.items.push_back(parse_ideal_item());
    }
    if (kReserved.count(name) || signatures().count(name)) throw ParseError(t.where, "'" + name + "' is reserved");
    if (names_.count(name)) throw ParseError(t.where, "name '" + name + "' already defined");
    names_[name] = NameKind::Ideal;
    decl.name = name;
    return decl;
  }

  PolyDecl parse_poly_decl() {
    next();
    PolyDecl decl;
    const auto& t = peek();
    const auto name = expect_ident();
    expect_symbol("=");
    decl.poly = parse_poly();
    if (kReserved.count(name) || signatures().count(name)) throw ParseError(t.where, "'" + name + "' is reserved");
    if (names_.count(name)) throw ParseError(t.where, "name '" + name + "' already defined");
    names_[name] = NameKind::Poly;
    polys_[name] = decl.poly;
    decl.name = name;
    return decl;
  }

  MatrixDecl parse_matrix_decl() {
    next();
    MatrixDecl decl;
    decl.name = new_name(NameKind::Matrix);
    const auto& mode_token = peek();
    const auto mode = expect_ident();
    if (mode == "colgraded") {
      decl.mode = mg::Grading::Column;
    } else if (mode == "rowgraded") {
      decl.mode = mg::Grading::Row;
    } else {
      throw ParseError(mode_token.where, "expected 'colgraded' or 'rowgraded'");
    }
    const auto& shape_token = peek();
    decl.rows = static_cast<std::size_t>(expect_int());
    if (is_ident("x")) {
      next();
      decl.cols = static_cast<std::size_t>(expect_int());
    } else if (peek().kind == Token::Kind::Ident && peek().text.size() > 1 && peek().text[0] == 'x' &&
               std::all_of(peek().text.begin() + 1, peek().text.end(),
                           [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; })) {
      decl.cols = std::stoul(next().text.substr(1));
    } else {
      fail(peek(), "expected a shape like 2x3");
    }
    if (decl.rows == 0 || decl.cols == 0) throw ParseError(shape_token.where, "matrix shape must be positive");
    if (is_ident("random")) {
      next();
      expect_keyword("seed");
      expect_symbol("=");
      decl.seed = static_cast<std::uint64_t>(expect_int());
      const auto needed = decl.mode == mg::Grading::Column ? decl.cols : decl.rows;
      if (needed != ring().num_blocks()) {
        throw ParseError(shape_token.where, std::string("random ") + to_string(decl.mode) + " matrix needs v = " +
                                                (decl.mode == mg::Grading::Column ? "n" : "m"));
      }
    } else {
      expect_symbol("{");
      const auto& body = peek();
      for (std::size_t r = 0; r < decl.rows; ++r) {
        for (std::size_t c = 0; c < decl.cols; ++c) {
          decl.entries.push_back(parse_poly());
          if (c + 1 < decl.cols) expect_symbol(",");
        }
        if (r + 1 < decl.rows) expect_symbol(";");
      }
      expect_symbol("}");
      try {
        mg::GradedMatrix(ring(), decl.rows, decl.cols, decl.entries, decl.mode);
      } catch (const mg::Error& e) {
        throw ParseError(body.where, e.what());
      }
    }
    matrices_[decl.name] = decl;
    return decl;
  }

  Command parse_command() {
    Command cmd;
    const auto& t = peek();
    cmd.where = t.where;
    cmd.name = expect_ident();
    while (is_symbol("-") && !peek().space_before && peek(1).kind == Token::Kind::Ident && !peek(1).space_before) {
      next();
      cmd.name += "-" + next().text;
    }
    const auto sig = signatures().find(cmd.name);
    if (sig == signatures().end()) throw ParseError(t.where, "unknown command '" + cmd.name + "'");
    for (const auto kind : sig->second.args) {
      if (peek().kind == Token::Kind::Newline || peek().kind == Token::Kind::End || is_option()) {
        fail(peek(), "missing argument for '" + cmd.name + "'");
      }
      Argument arg;
      arg.kind = kind;
      switch (kind) {
        case Argument::Kind::Ideal: arg.item = parse_ideal_item(); break;
        case Argument::Kind::Poly: arg.item = parse_poly_item(); break;
        case Argument::Kind::Matrix: arg.name = expect_matrix(); break;
        case Argument::Kind::Integer: {
          const auto& it = peek();
          arg.value = expect_int();
          if (cmd.args.size() == 1 && cmd.args[0].kind == Argument::Kind::Matrix) {
            const auto& m = matrices_.at(cmd.args[0].name);
            if (arg.value < 1 || arg.value > static_cast<long long>(std::min(m.rows, m.cols))) {
              throw ParseError(it.where, "minor size out of range");
            }
          }
          break;
        }
      }
      cmd.args.push_back(std::move(arg));
    }
    while (is_option()) {
      const auto& key_token = peek();
      const auto key = next().text;
      next();
      if (!sig->second.options.count(key)) {
        throw ParseError(key_token.where, "unknown option '" + key + "' for '" + cmd.name + "'");
      }
      if (cmd.options.count(key)) throw ParseError(key_token.where, "option '" + key + "' given twice");
      cmd.options[key] = parse_option_value(key, key_token);
    }
    if (sig->second.options.count("bound") && !cmd.options.count("bound")) {
      throw ParseError(t.where, "'" + cmd.name + "' needs bound=(...)");
    }
    return cmd;
  }

  bool is_option() const { return peek().kind == Token::Kind::Ident && is_symbol("=", 1); }

  std::string parse_option_value(const std::string& key, const Token& key_token) {
    const auto& t = peek();
    if (key == "bound") {
      expect_symbol("(");
      std::string value = "(";
      std::size_t count = 0;
      while (true) {
        const auto n = expect_int();
        value += std::to_string(n);
        ++count;
        if (is_symbol(")")) break;
        expect_symbol(",");
        value += ",";
      }
      next();
      if (count != ring().num_blocks()) throw ParseError(t.where, "bound needs one entry per block");
      return value + ")";
    }
    if (key == "seed" || key == "orders" || key == "trials") {
      const auto n = expect_int();
      if (key == "trials" && n < 1) throw ParseError(t.where, "trials must be positive");
      return std::to_string(n);
    }
    const auto value = expect_ident();
    static const std::map<std::string, std::set<std::string>> allowed = {
        {"expect", {"yes", "no", "error"}},
        {"mode", {"atmost", "exactly"}},
        {"order", {"lex", "degrevlex"}},
    };
    const auto& ok = allowed.at(key);
    if (!ok.count(value)) throw ParseError(t.where, "invalid value '" + value + "' for " + key_token.text);
    return value;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  ParseOptions options_;
  SessionScript script_;
  std::optional<mg::BlockRing> ring_;
  std::map<std::string, NameKind> names_;
  std::map<std::string, mg::Polynomial> polys_;
  std::map<std::string, MatrixDecl> matrices_;
};

}  // namespace

SessionScript parse(const std::string& text, const ParseOptions& options) {
  return Parser(lex(text), options).run();
}

std::string serialize(const IdealItem& item, const mg::BlockRing& ring) {
  switch (item.kind) {
    case IdealItem::Kind::Poly: return item.poly.to_string(ring);
    case IdealItem::Kind::Ref: return item.name;
    case IdealItem::Kind::Minors: return "minors(" + item.name + ", " + std::to_string(item.t) + ")";
    case IdealItem::Kind::Colon:
      return "colon(" + serialize(item.operands[0], ring) + ", " + serialize(item.operands[1], ring) + ")";
    case IdealItem::Kind::Intersect:
      return "intersect(" + serialize(item.operands[0], ring) + ", " + serialize(item.operands[1], ring) + ")";
  }
  return {};
}

std::string serialize(const SessionScript& script) {
  const auto ring = script.block_ring();
  std::ostringstream out;
  out << "ring v=" << script.ring.blocks.size() << " blocks=[";
  for (std::size_t i = 0; i < script.ring.blocks.size(); ++i) out << (i ? "," : "") << script.ring.blocks[i];
  out << "] char=" << script.ring.characteristic << "\n";
  // Polynomials that are not a single term are parenthesized so signs and
  // juxtaposed arguments never merge.
  const auto wrap = [&](const IdealItem& item) {
    auto s = serialize(item, ring);
    if (item.kind == IdealItem::Kind::Poly && (item.poly.size() > 1 || s.front() == '-')) s = "(" + s + ")";
    return s;
  };
  for (const auto& st : script.statements) {
    if (const auto* d = std::get_if<IdealDecl>(&st)) {
      out << "ideal " << d->name << " =";
      for (std::size_t i = 0; i < d->items.size(); ++i) out << (i ? ", " : " ") << serialize(d->items[i], ring);
      out << "\n";
    } else if (const auto* p = std::get_if<PolyDecl>(&st)) {
      out << "poly " << p->name << " = " << p->poly.to_string(ring) << "\n";
    } else if (const auto* m = std::get_if<MatrixDecl>(&st)) {
      out << "matrix " << m->name << " " << mg::to_string(m->mode) << " " << m->rows << "x" << m->cols;
      if (m->seed) {
        out << " random seed=" << *m->seed << "\n";
      } else {
        out << " {";
        for (std::size_t r = 0; r < m->rows; ++r) {
          out << (r ? "; " : " ");
          for (std::size_t c = 0; c < m->cols; ++c) {
            out << (c ? ", " : "") << m->entries[r * m->cols + c].to_string(ring);
          }
        }
        out << " }\n";
      }
    } else {
      const auto& c = std::get<Command>(st);
      out << c.name;
      for (const auto& a : c.args) {
        out << " ";
        switch (a.kind) {
          case Argument::Kind::Ideal:
          case Argument::Kind::Poly: out << wrap(a.item); break;
          case Argument::Kind::Matrix: out << a.name; break;
          case Argument::Kind::Integer: out << a.value; break;
        }
      }
      for (const auto& [k, v] : c.options) out << " " << k << "=" << v;
      out << "\n";
    }
  }
  return out.str();
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, sig] : signatures()) out.push_back(name);
    return out;
  }();
  return names;
}

}  // namespace mgcli
