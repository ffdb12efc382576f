// Copyright 2026 The qreuse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <stdexcept>
#include <unordered_map>

#include "qreuse/qasm.hpp"

namespace qreuse {
namespace {

struct Pos {
  std::uint32_t line = 1;
  std::uint32_t column = 1;
};

struct ParseError {
  Pos pos;
  std::string message;
};

[[noreturn]] void fail(Pos pos, std::string msg) {
  throw ParseError{pos, std::move(msg)};
}

// ---------------------------------------------------------------------------
// Lexer

enum class Tok {
  Ident, Number, String,
  LParen, RParen, LBracket, RBracket, LBrace, RBrace,
  Comma, Semicolon, Arrow, Plus, Minus, Star, Slash,
  Eof,
};

struct Token {
  Tok kind = Tok::Eof;
  std::string text;
  double value = 0.0;     // Number only
  bool is_integer = false;
  Pos pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_space();
    current_ = Token{};
    current_.pos = pos_;
    if (at_end()) return;

    char c = src_[i_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(src_[i_])) ||
                           src_[i_] == '_'))
        bump();
      current_.kind = Tok::Ident;
      current_.text = std::string(src_.substr(start, i_ - start));
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && i_ + 1 < src_.size() &&
         std::isdigit(static_cast<unsigned char>(src_[i_ + 1])))) {
      lex_number();
      return;
    }
    if (c == '"') {
      bump();
      std::size_t start = i_;
      while (!at_end() && src_[i_] != '"' && src_[i_] != '\n') bump();
      if (at_end() || src_[i_] != '"') fail(current_.pos, "unterminated string");
      current_.kind = Tok::String;
      current_.text = std::string(src_.substr(start, i_ - start));
      bump();
      return;
    }
    if (c == '-' && i_ + 1 < src_.size() && src_[i_ + 1] == '>') {
      bump();
      bump();
      current_.kind = Tok::Arrow;
      current_.text = "->";
      return;
    }
    static const std::pair<char, Tok> punct[] = {
        {'(', Tok::LParen},  {')', Tok::RParen},   {'[', Tok::LBracket},
        {']', Tok::RBracket}, {'{', Tok::LBrace},  {'}', Tok::RBrace},
        {',', Tok::Comma},   {';', Tok::Semicolon}, {'+', Tok::Plus},
        {'-', Tok::Minus},   {'*', Tok::Star},     {'/', Tok::Slash},
    };
    for (auto [ch, kind] : punct) {
      if (c == ch) {
        bump();
        current_.kind = kind;
        current_.text = std::string(1, ch);
        return;
      }
    }
    fail(current_.pos, std::string("unexpected character '") + c + "'");
  }

  void lex_number() {
    std::size_t start = i_;
    bool integer = true;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[i_]))) bump();
    if (!at_end() && src_[i_] == '.') {
      integer = false;
      bump();
      while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[i_]))) bump();
    }
    if (!at_end() && (src_[i_] == 'e' || src_[i_] == 'E')) {
      integer = false;
      bump();
      if (!at_end() && (src_[i_] == '+' || src_[i_] == '-')) bump();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(src_[i_])))
        fail(current_.pos, "malformed exponent");
      while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[i_]))) bump();
    }
    current_.kind = Tok::Number;
    current_.text = std::string(src_.substr(start, i_ - start));
    current_.is_integer = integer;
    current_.value = std::stod(current_.text);
  }

  void skip_space() {
    while (!at_end()) {
      char c = src_[i_];
      if (c == '/' && i_ + 1 < src_.size() && src_[i_ + 1] == '/') {
        while (!at_end() && src_[i_] != '\n') bump();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        bump();
      } else {
        break;
      }
    }
  }

  bool at_end() const { return i_ >= src_.size(); }
  void bump() {
    if (src_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  std::string_view src_;
  std::size_t i_ = 0;
  Pos pos_;
  Token current_;
};

// ---------------------------------------------------------------------------
// Parameter expressions. Gate-body parameters stay symbolic until the gate is
// applied, so expressions are small trees evaluated against a name->value
// environment (empty at top level).

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
  enum class Kind { Num, Ref, Neg, Add, Sub, Mul, Div } kind;
  double value = 0.0;   // Num
  std::string name;     // Ref
  Pos pos;
  ExprPtr lhs, rhs;
};

double eval(const Expr& e, const std::map<std::string, double>& env) {
  switch (e.kind) {
    case Expr::Kind::Num: return e.value;
    case Expr::Kind::Ref: {
      auto it = env.find(e.name);
      if (it == env.end())
        fail(e.pos, "unknown identifier '" + e.name + "' in expression");
      return it->second;
    }
    case Expr::Kind::Neg: return -eval(*e.lhs, env);
    case Expr::Kind::Add: return eval(*e.lhs, env) + eval(*e.rhs, env);
    case Expr::Kind::Sub: return eval(*e.lhs, env) - eval(*e.rhs, env);
    case Expr::Kind::Mul: return eval(*e.lhs, env) * eval(*e.rhs, env);
    case Expr::Kind::Div: {
      double d = eval(*e.rhs, env);
      if (d == 0.0) fail(e.pos, "division by zero in expression");
      return eval(*e.lhs, env) / d;
    }
  }
  fail(e.pos, "internal: bad expression node");
}

// ---------------------------------------------------------------------------
// Parser

struct Reg {
  std::uint32_t base = 0;
  std::uint32_t size = 0;
};

struct BodyStmt {
  bool barrier = false;
  std::string name;  // gate application name when !barrier
  std::vector<ExprPtr> params;
  std::vector<std::string> args;  // formal argument names
  Pos pos;
};

struct GateDef {
  std::vector<std::string> params;
  std::vector<std::string> args;
  std::vector<BodyStmt> body;
};

// One operand of a statement before broadcast expansion.
struct Operand {
  std::uint32_t base = 0;
  std::uint32_t size = 0;  // 1 when indexed
  bool indexed = false;
  Pos pos;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  Circuit run() {
    expect_header();
    while (lex_.peek().kind != Tok::Eof) statement();
    if (circuit_.num_qubits == 0)
      fail(lex_.peek().pos, "no quantum register declared");
    return std::move(circuit_);
  }

 private:
  void expect_header() {
    Token t = lex_.take();
    if (t.kind != Tok::Ident || t.text != "OPENQASM")
      fail(t.pos, "expected 'OPENQASM 2.0;' header");
    Token v = lex_.take();
    if (v.kind != Tok::Number)
      fail(v.pos, "expected version number after OPENQASM");
    if (v.text != "2.0" && v.text != "2")
      fail(v.pos, "unsupported OPENQASM version " + v.text +
                      " (only 2.0 is handled)");
    expect(Tok::Semicolon, "';'");
  }

  void statement() {
    const Token& head = lex_.peek();
    if (head.kind != Tok::Ident)
      fail(head.pos, "expected a statement, got '" + head.text + "'");

    if (head.text == "include") return include_stmt();
    if (head.text == "qreg") return reg_stmt(/*quantum=*/true);
    if (head.text == "creg") return reg_stmt(/*quantum=*/false);
    if (head.text == "gate") return gate_def();
    if (head.text == "opaque") return opaque_decl();
    if (head.text == "measure") return measure_stmt();
    if (head.text == "reset") return reset_stmt();
    if (head.text == "barrier") return barrier_stmt();
    if (head.text == "if")
      fail(head.pos, "classical conditionals are not supported");
    if (head.text == "OPENQASM")
      fail(head.pos, "duplicate OPENQASM header");
    return application_stmt();
  }

  void include_stmt() {
    lex_.take();
    Token file = lex_.take();
    if (file.kind != Tok::String)
      fail(file.pos, "expected a quoted filename after include");
    if (file.text != "qelib1.inc")
      fail(file.pos, "cannot include '" + file.text +
                         "' (only qelib1.inc is recognized)");
    expect(Tok::Semicolon, "';'");
  }

  void reg_stmt(bool quantum) {
    lex_.take();
    Token name = expect(Tok::Ident, "register name");
    expect(Tok::LBracket, "'['");
    Token size = lex_.take();
    if (size.kind != Tok::Number || !size.is_integer || size.value < 1)
      fail(size.pos, "register size must be a positive integer");
    expect(Tok::RBracket, "']'");
    expect(Tok::Semicolon, "';'");

    if (qregs_.count(name.text) || cregs_.count(name.text))
      fail(name.pos, "register '" + name.text + "' already declared");
    auto n = static_cast<std::uint32_t>(size.value);
    if (quantum) {
      qregs_[name.text] = {circuit_.num_qubits, n};
      circuit_.num_qubits += n;
    } else {
      cregs_[name.text] = {circuit_.num_clbits, n};
      circuit_.num_clbits += n;
    }
  }

  void opaque_decl() {
    lex_.take();
    Token name = expect(Tok::Ident, "gate name");
    if (known_gate(name.text))
      fail(name.pos, "gate '" + name.text + "' already defined");
    std::uint32_t nparams = 0;
    if (lex_.peek().kind == Tok::LParen) {
      lex_.take();
      if (lex_.peek().kind != Tok::RParen) {
        expect(Tok::Ident, "parameter name");
        ++nparams;
        while (lex_.peek().kind == Tok::Comma) {
          lex_.take();
          expect(Tok::Ident, "parameter name");
          ++nparams;
        }
      }
      expect(Tok::RParen, "')'");
    }
    std::uint32_t nargs = 1;
    expect(Tok::Ident, "argument name");
    while (lex_.peek().kind == Tok::Comma) {
      lex_.take();
      expect(Tok::Ident, "argument name");
      ++nargs;
    }
    expect(Tok::Semicolon, "';'");
    opaque_[name.text] = {nparams, nargs};
    circuit_.opaque_decls.push_back({name.text, nparams, nargs});
  }

  void gate_def() {
    lex_.take();
    Token name = expect(Tok::Ident, "gate name");
    if (known_gate(name.text))
      fail(name.pos, "gate '" + name.text + "' already defined");

    GateDef def;
    if (lex_.peek().kind == Tok::LParen) {
      lex_.take();
      if (lex_.peek().kind != Tok::RParen) {
        def.params.push_back(expect(Tok::Ident, "parameter name").text);
        while (lex_.peek().kind == Tok::Comma) {
          lex_.take();
          def.params.push_back(expect(Tok::Ident, "parameter name").text);
        }
      }
      expect(Tok::RParen, "')'");
    }
    def.args.push_back(expect(Tok::Ident, "argument name").text);
    while (lex_.peek().kind == Tok::Comma) {
      lex_.take();
      def.args.push_back(expect(Tok::Ident, "argument name").text);
    }
    expect(Tok::LBrace, "'{'");
    while (lex_.peek().kind != Tok::RBrace) {
      if (lex_.peek().kind == Tok::Eof)
        fail(lex_.peek().pos, "unterminated gate body");
      def.body.push_back(body_stmt(def));
    }
    lex_.take();  // '}'
    defs_[name.text] = std::move(def);
  }

  BodyStmt body_stmt(const GateDef& def) {
    BodyStmt stmt;
    Token head = expect(Tok::Ident, "gate application");
    stmt.pos = head.pos;
    if (head.text == "barrier") {
      stmt.barrier = true;
    } else {
      stmt.name = head.text;
      // Arity checks happen here so a bad body fails at its own position
      // rather than at some later call site.
      if (!known_gate(stmt.name))
        fail(head.pos, "unknown gate '" + stmt.name + "' in gate body");
      if (lex_.peek().kind == Tok::LParen) {
        lex_.take();
        if (lex_.peek().kind != Tok::RParen) {
          stmt.params.push_back(expr());
          while (lex_.peek().kind == Tok::Comma) {
            lex_.take();
            stmt.params.push_back(expr());
          }
        }
        expect(Tok::RParen, "')'");
      }
      if (stmt.params.size() != gate_param_count(stmt.name))
        fail(head.pos, "gate '" + stmt.name + "' expects " +
                           std::to_string(gate_param_count(stmt.name)) +
                           " parameter(s)");
    }
    auto formal = [&](const Token& t) {
      for (const std::string& a : def.args)
        if (a == t.text) return;
      fail(t.pos, "'" + t.text + "' is not an argument of this gate");
    };
    Token a = expect(Tok::Ident, "argument name");
    formal(a);
    stmt.args.push_back(a.text);
    while (lex_.peek().kind == Tok::Comma) {
      lex_.take();
      Token b = expect(Tok::Ident, "argument name");
      formal(b);
      stmt.args.push_back(b.text);
    }
    expect(Tok::Semicolon, "';'");
    if (!stmt.barrier && stmt.args.size() != gate_qubit_count(stmt.name))
      fail(stmt.pos, "gate '" + stmt.name + "' expects " +
                         std::to_string(gate_qubit_count(stmt.name)) +
                         " qubit(s)");
    return stmt;
  }

  void measure_stmt() {
    Token head = lex_.take();
    Operand q = operand(/*quantum=*/true);
    expect(Tok::Arrow, "'->'");
    Operand c = operand(/*quantum=*/false);
    expect(Tok::Semicolon, "';'");
    std::uint32_t span = broadcast_span({q, c}, head.pos);
    for (std::uint32_t i = 0; i < span; ++i) {
      Instruction in;
      in.kind = OpKind::Measure;
      in.qubits.push_back(q.base + (q.indexed ? 0 : i));
      in.clbits.push_back(c.base + (c.indexed ? 0 : i));
      circuit_.instructions.push_back(std::move(in));
    }
  }

  void reset_stmt() {
    Token head = lex_.take();
    Operand q = operand(/*quantum=*/true);
    expect(Tok::Semicolon, "';'");
    std::uint32_t span = broadcast_span({q}, head.pos);
    for (std::uint32_t i = 0; i < span; ++i) {
      Instruction in;
      in.kind = OpKind::Reset;
      in.qubits.push_back(q.base + (q.indexed ? 0 : i));
      circuit_.instructions.push_back(std::move(in));
    }
  }

  void barrier_stmt() {
    Token head = lex_.take();
    std::vector<Operand> ops;
    ops.push_back(operand(/*quantum=*/true));
    while (lex_.peek().kind == Tok::Comma) {
      lex_.take();
      ops.push_back(operand(/*quantum=*/true));
    }
    expect(Tok::Semicolon, "';'");
    // A barrier spans the union of its operands rather than broadcasting.
    Instruction in;
    in.kind = OpKind::Barrier;
    for (const Operand& o : ops)
      for (std::uint32_t i = 0; i < (o.indexed ? 1u : o.size); ++i)
        in.qubits.push_back(o.base + i);
    check_distinct(in.qubits, head.pos);
    circuit_.instructions.push_back(std::move(in));
  }

  void application_stmt() {
    Token head = lex_.take();
    std::string name = head.text;

    std::vector<double> params;
    if (lex_.peek().kind == Tok::LParen) {
      lex_.take();
      if (lex_.peek().kind != Tok::RParen) {
        params.push_back(eval(*expr(), {}));
        while (lex_.peek().kind == Tok::Comma) {
          lex_.take();
          params.push_back(eval(*expr(), {}));
        }
      }
      expect(Tok::RParen, "')'");
    }
    std::vector<Operand> ops;
    ops.push_back(operand(/*quantum=*/true));
    while (lex_.peek().kind == Tok::Comma) {
      lex_.take();
      ops.push_back(operand(/*quantum=*/true));
    }
    expect(Tok::Semicolon, "';'");

    if (!known_gate(name)) fail(head.pos, "unknown gate '" + name + "'");
    if (params.size() != gate_param_count(name))
      fail(head.pos, "gate '" + name + "' expects " +
                         std::to_string(gate_param_count(name)) +
                         " parameter(s)");
    if (ops.size() != gate_qubit_count(name))
      fail(head.pos, "gate '" + name + "' expects " +
                         std::to_string(gate_qubit_count(name)) + " qubit(s)");

    std::uint32_t span = broadcast_span(ops, head.pos);
    for (std::uint32_t i = 0; i < span; ++i) {
      std::vector<QubitId> qubits;
      qubits.reserve(ops.size());
      for (const Operand& o : ops) qubits.push_back(o.base + (o.indexed ? 0 : i));
      check_distinct(qubits, head.pos);
      emit_gate(name, params, qubits, head.pos, 0);
    }
  }

  // Emits one (possibly user-defined) gate application onto concrete qubits,
  // inlining definitions recursively. Definition bodies can only reference
  // gates that existed before them, so recursion terminates; the depth guard
  // is belt and braces.
  void emit_gate(const std::string& name, const std::vector<double>& params,
                 const std::vector<QubitId>& qubits, Pos pos, int depth) {
    if (depth > 128) fail(pos, "gate inlining too deep");

    if (auto it = defs_.find(name); it != defs_.end()) {
      const GateDef& def = it->second;
      std::map<std::string, double> env;
      for (std::size_t i = 0; i < def.params.size(); ++i)
        env[def.params[i]] = params[i];
      std::map<std::string, QubitId> bind;
      for (std::size_t i = 0; i < def.args.size(); ++i)
        bind[def.args[i]] = qubits[i];

      for (const BodyStmt& stmt : def.body) {
        std::vector<QubitId> mapped;
        mapped.reserve(stmt.args.size());
        for (const std::string& a : stmt.args) mapped.push_back(bind.at(a));
        if (stmt.barrier) {
          Instruction in;
          in.kind = OpKind::Barrier;
          in.qubits = mapped;
          check_distinct(in.qubits, pos);
          circuit_.instructions.push_back(std::move(in));
          continue;
        }
        check_distinct(mapped, pos);
        std::vector<double> values;
        values.reserve(stmt.params.size());
        for (const ExprPtr& e : stmt.params) values.push_back(eval(*e, env));
        emit_gate(stmt.name, values, mapped, pos, depth + 1);
      }
      return;
    }

    Instruction in;
    in.kind = OpKind::Gate;
    if (name == "U") in.name = "u3";        // OPENQASM primitive spellings
    else if (name == "CX") in.name = "cx";
    else in.name = name;
    in.params = params;
    in.qubits = qubits;
    circuit_.instructions.push_back(std::move(in));
  }

  Operand operand(bool quantum) {
    Token name = expect(Tok::Ident, quantum ? "qubit operand" : "clbit operand");
    const auto& regs = quantum ? qregs_ : cregs_;
    auto it = regs.find(name.text);
    if (it == regs.end()) {
      const char* kind = quantum ? "quantum" : "classical";
      fail(name.pos, std::string("unknown ") + kind + " register '" +
                         name.text + "'");
    }
    Operand op;
    op.base = it->second.base;
    op.size = it->second.size;
    op.pos = name.pos;
    if (lex_.peek().kind == Tok::LBracket) {
      lex_.take();
      Token idx = lex_.take();
      if (idx.kind != Tok::Number || !idx.is_integer || idx.value < 0)
        fail(idx.pos, "register index must be a non-negative integer");
      expect(Tok::RBracket, "']'");
      if (idx.value >= it->second.size)
        fail(idx.pos, "index " + idx.text + " out of range for '" + name.text +
                          "[" + std::to_string(it->second.size) + "]'");
      op.base += static_cast<std::uint32_t>(idx.value);
      op.size = 1;
      op.indexed = true;
    }
    return op;
  }

  // All full-register operands in one statement must agree on size; indexed
  // operands repeat across the expansion.
  std::uint32_t broadcast_span(const std::vector<Operand>& ops, Pos pos) {
    std::uint32_t span = 1;
    for (const Operand& o : ops) {
      if (o.indexed) continue;
      if (span != 1 && o.size != span)
        fail(pos, "register operands of mismatched sizes (" +
                      std::to_string(span) + " vs " + std::to_string(o.size) +
                      ")");
      span = o.size;
    }
    return span;
  }

  void check_distinct(const std::vector<QubitId>& qs, Pos pos) {
    for (std::size_t a = 0; a < qs.size(); ++a)
      for (std::size_t b = a + 1; b < qs.size(); ++b)
        if (qs[a] == qs[b])
          fail(pos, "duplicate qubit operand q" + std::to_string(qs[a]));
  }

  bool known_gate(const std::string& name) const {
    return name == "U" || name == "CX" || standard_gate(name).has_value() ||
           defs_.count(name) > 0 || opaque_.count(name) > 0;
  }
  std::uint32_t gate_param_count(const std::string& name) const {
    if (name == "U") return 3;
    if (name == "CX") return 0;
    if (auto sig = standard_gate(name)) return sig->num_params;
    if (auto it = defs_.find(name); it != defs_.end())
      return static_cast<std::uint32_t>(it->second.params.size());
    return opaque_.at(name).first;
  }
  std::uint32_t gate_qubit_count(const std::string& name) const {
    if (name == "U") return 1;
    if (name == "CX") return 2;
    if (auto sig = standard_gate(name)) return sig->num_qubits;
    if (auto it = defs_.find(name); it != defs_.end())
      return static_cast<std::uint32_t>(it->second.args.size());
    return opaque_.at(name).second;
  }

  // expr := term (('+'|'-') term)* ; term := factor (('*'|'/') factor)* ;
  // factor := '-'* primary ; primary := number | pi | ident | '(' expr ')'
  ExprPtr expr() {
    ExprPtr node = term();
    while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
      Token op = lex_.take();
      auto parent = std::make_unique<Expr>();
      parent->kind = op.kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub;
      parent->pos = op.pos;
      parent->lhs = std::move(node);
      parent->rhs = term();
      node = std::move(parent);
    }
    return node;
  }

  ExprPtr term() {
    ExprPtr node = factor();
    while (lex_.peek().kind == Tok::Star || lex_.peek().kind == Tok::Slash) {
      Token op = lex_.take();
      auto parent = std::make_unique<Expr>();
      parent->kind = op.kind == Tok::Star ? Expr::Kind::Mul : Expr::Kind::Div;
      parent->pos = op.pos;
      parent->lhs = std::move(node);
      parent->rhs = factor();
      node = std::move(parent);
    }
    return node;
  }

  ExprPtr factor() {
    if (lex_.peek().kind == Tok::Minus) {
      Token op = lex_.take();
      auto node = std::make_unique<Expr>();
      node->kind = Expr::Kind::Neg;
      node->pos = op.pos;
      node->lhs = factor();
      return node;
    }
    return primary();
  }

  ExprPtr primary() {
    Token t = lex_.take();
    auto node = std::make_unique<Expr>();
    node->pos = t.pos;
    switch (t.kind) {
      case Tok::Number:
        node->kind = Expr::Kind::Num;
        node->value = t.value;
        return node;
      case Tok::LParen: {
        ExprPtr inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Ident:
        if (t.text == "pi") {
          node->kind = Expr::Kind::Num;
          node->value = 3.14159265358979323846;
          return node;
        }
        if (lex_.peek().kind == Tok::LParen)
          fail(t.pos, "function calls are not supported in expressions");
        node->kind = Expr::Kind::Ref;
        node->name = t.text;
        return node;
      default:
        fail(t.pos, "expected an expression, got '" + t.text + "'");
    }
  }

  Token expect(Tok kind, const char* what) {
    Token t = lex_.take();
    if (t.kind != kind)
      fail(t.pos, std::string("expected ") + what + ", got '" +
                      (t.kind == Tok::Eof ? "end of input" : t.text) + "'");
    return t;
  }

  Lexer lex_;
  Circuit circuit_;
  std::unordered_map<std::string, Reg> qregs_, cregs_;
  std::unordered_map<std::string, GateDef> defs_;
  std::unordered_map<std::string, std::pair<std::uint32_t, std::uint32_t>>
      opaque_;  // name -> (params, qubits)
};

}  // namespace

ParseResult parse_qasm(std::string_view text) {
  ParseResult out;
  try {
    Parser parser(text);
    out.circuit = parser.run();
  } catch (const ParseError& e) {
    out.diagnostics.push_back(
        {Severity::Error, e.pos.line, e.pos.column, e.message});
  }
  return out;
}

}  // namespace qreuse
