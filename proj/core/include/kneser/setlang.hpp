#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kneser/hybrid.hpp"
#include "kneser/profinite.hpp"

namespace kneser::setlang {

struct GroupDecl {
  std::string name;
  std::vector<std::uint32_t> moduli;  // empty for the trivial group
  int torus_dim = 0;
  friend bool operator==(const GroupDecl&, const GroupDecl&) = default;
};

struct FiberArc {
  Rational a, b;  // closed [a,b]; a = b is a point
  friend bool operator==(const FiberArc&, const FiberArc&) = default;
};

struct Fiber {
  bool full = false;
  std::vector<FiberArc> arcs;
  friend bool operator==(const Fiber&, const Fiber&) = default;
};

// Either `ref` names an earlier set, or `elements` (each a coordinate tuple)
// optionally crossed with a fiber.
struct Term {
  std::string ref;
  std::vector<std::vector<long long>> elements;
  std::optional<Fiber> fiber;
  friend bool operator==(const Term&, const Term&) = default;
};

struct SetDecl {
  std::string name;
  std::string group;
  std::vector<Term> terms;  // empty: the empty set
  friend bool operator==(const SetDecl&, const SetDecl&) = default;
};

struct RsetDecl {
  std::string name;
  RecursiveSetDef def;
  friend bool operator==(const RsetDecl&, const RsetDecl&) = default;
};

enum class QueryKind { Classify, Check, Transform, Profinite };

struct QueryDecl {
  QueryKind kind = QueryKind::Classify;
  std::string suite;               // check only
  std::vector<std::string> args;   // set or rset names
  std::uint32_t count = 0;         // transform steps or profinite depth
  friend bool operator==(const QueryDecl&, const QueryDecl&) = default;
};

using Declaration = std::variant<GroupDecl, SetDecl, RsetDecl, QueryDecl>;

struct Program {
  std::vector<Declaration> declarations;
  friend bool operator==(const Program&, const Program&) = default;
};

// Throws ParseError with kind SyntaxError or SemanticError.
Program parse(std::string_view text);
std::string print(const Program& program);

struct Environment {
  std::vector<std::string> order;  // declaration order of named values
  std::map<std::string, HybridGroup> groups;
  std::map<std::string, HybridSet> sets;
  std::map<std::string, std::string> set_group;
  std::map<std::string, RecursiveSetDef> rsets;
  std::vector<QueryDecl> queries;

  const HybridSet& set(const std::string& name) const;    // throws EvaluationError
  const RecursiveSetDef& rset(const std::string& name) const;
};

// Throws EvaluationError naming the declaration.
Environment evaluate(const Program& program);
inline Environment load(std::string_view text) { return evaluate(parse(text)); }

// Declarations reproducing a group and a set in canonical form.
GroupDecl group_decl(const std::string& name, const HybridGroup& g);
SetDecl set_decl(const std::string& name, const std::string& group, const HybridSet& s);
// "group G = ...", "set A in G = ...", "set B in G = ..." plus an optional query line.
std::string pair_program(const HybridSet& a, const HybridSet& b, const std::string& query = "classify A B");

}  // namespace kneser::setlang
