#include "kneser/setlang.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "kneser/errors.hpp"
#include "kneser/rational.hpp"

namespace kneser::setlang {

namespace {

enum class Tok { Ident, Int, Decimal, Slash, LBrace, RBrace, LBrack, RBrack, LParen, RParen, Comma, Equals, Bar, Cross,
                 Plus, Star, Minus, Semi, Empty, End };

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::Decimal: return "decimal";
    case Tok::Slash: return "'/'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LBrack: return "'['";
    case Tok::RBrack: return "']'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Equals: return "'='";
    case Tok::Bar: return "'|'";
    case Tok::Cross: return "'x'";
    case Tok::Plus: return "'+'";
    case Tok::Star: return "'*'";
    case Tok::Minus: return "'-'";
    case Tok::Semi: return "';'";
    case Tok::Empty: return "'∅'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) {
        ++col;
      }
    }
  };
  auto after_operand = [&] {
    if (out.empty()) return false;
    Tok k = out.back().kind;
    return k == Tok::RBrace || k == Tok::RParen || k == Tok::RBrack || k == Tok::Int;
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t{Tok::End, "", line, col};
    if (s.substr(i, 3) == "\xE2\x88\xAA") {  // ∪
      t.kind = Tok::Bar;
      t.text = "|";
      out.push_back(t);
      advance(3);
      continue;
    }
    if (s.substr(i, 3) == "\xE2\x88\x85") {  // ∅
      t.kind = Tok::Empty;
      out.push_back(t);
      advance(3);
      continue;
    }
    if (s.substr(i, 2) == "\xC3\x97") {  // ×
      t.kind = Tok::Cross;
      out.push_back(t);
      advance(2);
      continue;
    }
    if (c == 'x' && (after_operand() || i + 1 == s.size() || !ident_char(s[i + 1]))) {
      t.kind = Tok::Cross;
      out.push_back(t);
      advance(1);
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && (ident_char(s[j]) || (s[j] == '-' && j + 1 < s.size() && ident_start(s[j + 1])))) ++j;
      t.kind = Tok::Ident;
      t.text = std::string(s.substr(i, j - i));
      out.push_back(t);
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      t.kind = Tok::Int;
      if (j + 1 < s.size() && s[j] == '.' && std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
        ++j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        t.kind = Tok::Decimal;
      }
      t.text = std::string(s.substr(i, j - i));
      out.push_back(t);
      advance(j - i);
      continue;
    }
    switch (c) {
      case '/': t.kind = Tok::Slash; break;
      case '{': t.kind = Tok::LBrace; break;
      case '}': t.kind = Tok::RBrace; break;
      case '[': t.kind = Tok::LBrack; break;
      case ']': t.kind = Tok::RBrack; break;
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      case ',': t.kind = Tok::Comma; break;
      case '=': t.kind = Tok::Equals; break;
      case '|': t.kind = Tok::Bar; break;
      case '+': t.kind = Tok::Plus; break;
      case '*': t.kind = Tok::Star; break;
      case '-': t.kind = Tok::Minus; break;
      case ';': t.kind = Tok::Semi; break;
      default:
        throw ParseError(ErrorKind::SyntaxError, std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back(t);
    advance(1);
  }
  out.push_back(Token{Tok::End, "", line, col});
  return out;
}

const std::set<std::string> kKeywords = {"group", "set", "rset", "in", "over", "classify", "check", "transform",
                                         "profinite", "depth"};

struct GroupInfo {
  std::size_t coords;
  int torus_dim;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Program run() {
    Program p;
    while (peek().kind != Tok::End) {
      if (peek().kind == Tok::Semi) {
        ++pos_;
        continue;
      }
      const Token& t = peek();
      if (t.kind != Tok::Ident) syntax("a declaration keyword");
      if (t.text == "group") p.declarations.push_back(group());
      else if (t.text == "set") p.declarations.push_back(set());
      else if (t.text == "rset") p.declarations.push_back(rset());
      else if (t.text == "classify" || t.text == "check" || t.text == "transform" || t.text == "profinite")
        p.declarations.push_back(query());
      else
        syntax("group, set, rset, classify, check, transform or profinite");
    }
    return p;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, GroupInfo> groups_;
  std::map<std::string, std::string> sets_;  // set -> group
  std::set<std::string> rsets_;
  std::string last_group_;

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }

  [[noreturn]] void syntax(const std::string& expected) const {
    const Token& t = peek();
    std::string got = t.kind == Tok::Ident || t.kind == Tok::Int || t.kind == Tok::Decimal ? "'" + t.text + "'"
                                                                                          : describe(t.kind);
    throw ParseError(ErrorKind::SyntaxError, "expected " + expected + ", found " + got, t.line, t.column);
  }
  [[noreturn]] void semantic(const Token& at, const std::string& msg) const {
    throw ParseError(ErrorKind::SemanticError, msg, at.line, at.column);
  }

  const Token& expect(Tok k) {
    if (peek().kind != k) syntax(describe(k));
    return toks_[pos_++];
  }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  void keyword(const char* kw) {
    if (peek().kind != Tok::Ident || peek().text != kw) syntax(std::string("'") + kw + "'");
    ++pos_;
  }
  bool at_keyword(const char* kw) const { return peek().kind == Tok::Ident && peek().text == kw; }

  const Token& fresh_name() {
    const Token& t = expect(Tok::Ident);
    if (kKeywords.count(t.text)) semantic(t, "'" + t.text + "' is a keyword");
    if (groups_.count(t.text) || sets_.count(t.text) || rsets_.count(t.text)) {
      semantic(t, "name '" + t.text + "' is already declared");
    }
    return t;
  }

  long long integer(bool allow_sign) {
    bool neg = allow_sign && accept(Tok::Minus);
    const Token& t = expect(Tok::Int);
    if (t.text.size() > 17) semantic(t, "integer literal too large");
    long long v = std::stoll(t.text);
    return neg ? -v : v;
  }

  Rational number() {
    bool neg = accept(Tok::Minus);
    const Token& t = peek();
    std::string text;
    if (t.kind == Tok::Int || t.kind == Tok::Decimal) {
      text = t.text;
      ++pos_;
    } else {
      syntax("a number");
    }
    if (accept(Tok::Slash)) text += "/" + expect(Tok::Int).text;
    Rational r;
    try {
      r = parse_rational(text);
    } catch (const Error& e) {
      semantic(t, e.what());
    }
    return neg ? Rational(-r) : r;
  }

  GroupDecl group() {
    keyword("group");
    GroupDecl g;
    g.name = fresh_name().text;
    expect(Tok::Equals);
    while (true) {
      const Token& t = expect(Tok::Ident);
      if (t.text == "T") {
        if (g.torus_dim) semantic(t, "at most one torus factor is supported");
        g.torus_dim = 1;
      } else if (t.text == "Z") {
        if (g.torus_dim) semantic(t, "the torus factor must come last");
        expect(Tok::Slash);
        const Token& n = peek();
        long long m = integer(false);
        if (m < 1 || m > 1000000) semantic(n, "modulus out of range");
        if (m > 1) g.moduli.push_back(static_cast<std::uint32_t>(m));
      } else {
        semantic(t, "unknown group factor '" + t.text + "'");
      }
      if (!accept(Tok::Cross)) break;
    }
    groups_[g.name] = GroupInfo{std::max<std::size_t>(1, g.moduli.size()), g.torus_dim};
    last_group_ = g.name;
    return g;
  }

  Fiber fiber() {
    Fiber f;
    if (at_keyword("T")) {
      ++pos_;
      f.full = true;
      return f;
    }
    if (accept(Tok::LParen)) {
      do {
        Fiber part = fiber();
        if (part.full) f.full = true;
        f.arcs.insert(f.arcs.end(), part.arcs.begin(), part.arcs.end());
      } while (accept(Tok::Bar));
      expect(Tok::RParen);
      if (f.full) f.arcs.clear();
      return f;
    }
    if (accept(Tok::LBrace)) {
      Rational x = number();
      expect(Tok::RBrace);
      f.arcs.push_back({x, x});
      return f;
    }
    if (peek().kind != Tok::LBrack) syntax("'T', an interval, a point or a parenthesised union");
    const Token& open = expect(Tok::LBrack);
    Rational a = number();
    expect(Tok::Comma);
    Rational b = number();
    expect(Tok::RBrack);
    if (b < a) semantic(open, "interval right end is below its left end");
    f.arcs.push_back({a, b});
    return f;
  }

  std::vector<long long> element(const GroupInfo& g) {
    const Token& at = peek();
    std::vector<long long> e;
    if (accept(Tok::LParen)) {
      do e.push_back(integer(true));
      while (accept(Tok::Comma));
      expect(Tok::RParen);
    } else {
      e.push_back(integer(true));
    }
    if (e.size() != g.coords) {
      semantic(at, "element has " + std::to_string(e.size()) + " coordinates, group needs " + std::to_string(g.coords));
    }
    return e;
  }

  Term term(const std::string& group_name, const GroupInfo& g) {
    Term t;
    if (peek().kind == Tok::Ident) {
      const Token& r = expect(Tok::Ident);
      auto it = sets_.find(r.text);
      if (it == sets_.end()) semantic(r, "unknown set '" + r.text + "'");
      if (it->second != group_name) semantic(r, "set '" + r.text + "' lives in group '" + it->second + "'");
      t.ref = r.text;
      return t;
    }
    const Token& open = expect(Tok::LBrace);
    if (!accept(Tok::RBrace)) {
      do t.elements.push_back(element(g));
      while (accept(Tok::Comma));
      expect(Tok::RBrace);
    }
    if (accept(Tok::Cross)) {
      if (!g.torus_dim) semantic(open, "group '" + group_name + "' has no torus factor");
      t.fiber = fiber();
    } else if (g.torus_dim && !t.elements.empty()) {
      semantic(open, "fiber form required when the group has a torus factor, e.g. {0}xT");
    }
    return t;
  }

  SetDecl set() {
    keyword("set");
    SetDecl s;
    const Token& name = fresh_name();
    s.name = name.text;
    if (at_keyword("in")) {
      ++pos_;
      const Token& g = expect(Tok::Ident);
      if (!groups_.count(g.text)) semantic(g, "unknown group '" + g.text + "'");
      s.group = g.text;
    } else {
      if (last_group_.empty()) semantic(name, "no group declared before set '" + s.name + "'");
      s.group = last_group_;
    }
    expect(Tok::Equals);
    const GroupInfo info = groups_.at(s.group);
    if (accept(Tok::Empty)) {
      sets_[s.name] = s.group;
      return s;
    }
    do {
      Term t = term(s.group, info);
      if (t.ref.empty() && t.elements.empty()) continue;  // {} contributes nothing
      s.terms.push_back(std::move(t));
    } while (accept(Tok::Bar));
    sets_[s.name] = s.group;
    return s;
  }

  RsetDecl rset() {
    keyword("rset");
    RsetDecl r;
    r.name = fresh_name().text;
    keyword("over");
    const Token& pt = peek();
    if (!at_keyword("p")) syntax("'p'");
    ++pos_;
    expect(Tok::Equals);
    long long p = integer(false);
    if (p > 1000000 || !is_prime(static_cast<std::uint64_t>(p))) semantic(pt, "rset base " + std::to_string(p) + " is not prime");
    r.def.p = static_cast<std::uint32_t>(p);
    expect(Tok::Equals);
    bool have_recursion = false;
    do {
      expect(Tok::LParen);
      if (peek().kind == Tok::LBrace) {
        if (have_recursion) syntax("the recursive term last");
        ++pos_;
        std::vector<long long> residues;
        do residues.push_back(integer(false));
        while (accept(Tok::Comma));
        expect(Tok::RBrace);
        expect(Tok::Plus);
        const Token& mt = peek();
        long long m = integer(false);
        keyword("Z");
        std::uint32_t level = 0;
        for (long long q = 1; q < m && level < 40; q *= p) ++level;
        std::uint64_t mod = 1;
        for (std::uint32_t k = 0; k < level; ++k) mod *= static_cast<std::uint64_t>(p);
        if (level == 0 || mod != static_cast<std::uint64_t>(m)) semantic(mt, "modulus must be a positive power of p");
        for (long long res : residues) {
          if (static_cast<std::uint64_t>(res) >= mod) semantic(mt, "residue " + std::to_string(res) + " not reduced");
          r.def.base.push_back({static_cast<std::uint64_t>(res), level});
        }
      } else {
        if (have_recursion) semantic(peek(), "only one recursive term is allowed");
        const Token& ct = peek();
        long long c = integer(false);
        if (c >= p) semantic(ct, "offset must be reduced mod p");
        expect(Tok::Plus);
        const Token& st = peek();
        long long scale = integer(false);
        if (scale != p) semantic(st, "recursion scale must equal p");
        expect(Tok::Star);
        const Token& self = expect(Tok::Ident);
        if (self.text != r.name) semantic(self, "recursive term must refer to '" + r.name + "'");
        r.def.offset = static_cast<std::uint64_t>(c);
        have_recursion = true;
      }
      expect(Tok::RParen);
    } while (accept(Tok::Bar));
    if (!have_recursion) semantic(pt, "rset needs a recursive term (c + p*" + r.name + ")");
    rsets_.insert(r.name);
    return r;
  }

  std::string set_ref() {
    const Token& t = expect(Tok::Ident);
    if (!sets_.count(t.text)) semantic(t, "unknown set '" + t.text + "'");
    return t.text;
  }

  QueryDecl query() {
    QueryDecl q;
    const std::string kw = expect(Tok::Ident).text;
    if (kw == "profinite") {
      q.kind = QueryKind::Profinite;
      while (peek().kind == Tok::Ident && !at_keyword("depth")) {
        const Token& t = expect(Tok::Ident);
        if (!rsets_.count(t.text)) semantic(t, "unknown rset '" + t.text + "'");
        q.args.push_back(t.text);
      }
      if (q.args.empty() || q.args.size() > 2) syntax("one or two rset names");
      keyword("depth");
      const Token& d = peek();
      long long n = integer(false);
      if (n < 1 || n > 12) semantic(d, "depth must lie in 1..12");
      q.count = static_cast<std::uint32_t>(n);
      return q;
    }
    if (kw == "check") {
      q.kind = QueryKind::Check;
      q.suite = expect(Tok::Ident).text;
    } else if (kw == "transform") {
      q.kind = QueryKind::Transform;
    }
    const Token& first = peek();
    q.args.push_back(set_ref());
    q.args.push_back(set_ref());
    if (sets_.at(q.args[0]) != sets_.at(q.args[1])) semantic(first, "sets of a query must share a group");
    if (q.kind == QueryKind::Transform) {
      long long n = integer(false);
      q.count = static_cast<std::uint32_t>(std::min<long long>(n, 100000));
    }
    return q;
  }
};

std::string print_fiber(const Fiber& f) {
  if (f.full) return "T";
  auto one = [](const FiberArc& a) {
    if (a.a == a.b) return "{" + to_string(a.a) + "}";
    return "[" + to_string(a.a) + "," + to_string(a.b) + "]";
  };
  if (f.arcs.size() == 1) return one(f.arcs[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < f.arcs.size(); ++i) {
    if (i) s += " | ";
    s += one(f.arcs[i]);
  }
  return s + ")";
}

std::string print_element(const std::vector<long long>& e) {
  if (e.size() == 1) return std::to_string(e[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

std::string print_decl(const Declaration& d) {
  if (auto g = std::get_if<GroupDecl>(&d)) {
    std::string s = "group " + g->name + " = ";
    std::vector<std::string> parts;
    for (auto m : g->moduli) parts.push_back("Z/" + std::to_string(m));
    if (g->torus_dim) parts.push_back("T");
    if (parts.empty()) parts.push_back("Z/1");
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " x " : "") + parts[i];
    return s;
  }
  if (auto st = std::get_if<SetDecl>(&d)) {
    std::string s = "set " + st->name + " in " + st->group + " = ";
    if (st->terms.empty()) return s + "{}";
    for (std::size_t i = 0; i < st->terms.size(); ++i) {
      const Term& t = st->terms[i];
      if (i) s += " | ";
      if (!t.ref.empty()) {
        s += t.ref;
        continue;
      }
      s += "{";
      for (std::size_t j = 0; j < t.elements.size(); ++j) s += (j ? "," : "") + print_element(t.elements[j]);
      s += "}";
      if (t.fiber) s += "x" + print_fiber(*t.fiber);
    }
    return s;
  }
  if (auto r = std::get_if<RsetDecl>(&d)) return r->def.to_string(r->name);
  const auto& q = std::get<QueryDecl>(d);
  switch (q.kind) {
    case QueryKind::Classify: return "classify " + q.args[0] + " " + q.args[1];
    case QueryKind::Check: return "check " + q.suite + " " + q.args[0] + " " + q.args[1];
    case QueryKind::Transform:
      return "transform " + q.args[0] + " " + q.args[1] + " " + std::to_string(q.count);
    case QueryKind::Profinite: {
      std::string s = "profinite";
      for (const auto& a : q.args) s += " " + a;
      return s + " depth " + std::to_string(q.count);
    }
  }
  return {};
}

long long residue(long long v, std::uint32_t m) {
  long long r = v % static_cast<long long>(m);
  return r < 0 ? r + m : r;
}

}  // namespace

Program parse(std::string_view text) { return Parser(lex(text)).run(); }

std::string print(const Program& program) {
  std::string out;
  for (const auto& d : program.declarations) out += print_decl(d) + "\n";
  return out;
}

const HybridSet& Environment::set(const std::string& name) const {
  auto it = sets.find(name);
  if (it == sets.end()) fail(ErrorKind::EvaluationError, "no set named '" + name + "'");
  return it->second;
}

const RecursiveSetDef& Environment::rset(const std::string& name) const {
  auto it = rsets.find(name);
  if (it == rsets.end()) fail(ErrorKind::EvaluationError, "no rset named '" + name + "'");
  return it->second;
}

Environment evaluate(const Program& program) {
  Environment env;
  for (const auto& d : program.declarations) {
    if (auto g = std::get_if<GroupDecl>(&d)) {
      env.groups.emplace(g->name, HybridGroup(FiniteAbelianGroup(g->moduli), g->torus_dim));
      env.order.push_back(g->name);
    } else if (auto s = std::get_if<SetDecl>(&d)) {
      auto git = env.groups.find(s->group);
      if (git == env.groups.end()) fail(ErrorKind::EvaluationError, "set " + s->name + ": unknown group " + s->group);
      const HybridGroup& g = git->second;
      const auto& f = g.finite();
      HybridSet acc(g);
      try {
        for (const auto& t : s->terms) {
          if (!t.ref.empty()) {
            acc = unite(acc, env.set(t.ref));
            continue;
          }
          std::vector<std::pair<ElementId, IntervalUnion>> fibers;
          IntervalUnion u = IntervalUnion::full();
          if (t.fiber && !t.fiber->full) {
            std::vector<Arc> arcs;
            for (const auto& a : t.fiber->arcs) arcs.push_back(Arc{a.a, a.b - a.a});
            u = IntervalUnion::from_arcs(std::move(arcs));
          }
          for (const auto& e : t.elements) {
            std::vector<std::uint32_t> coords;
            for (std::size_t i = 0; i < e.size(); ++i) coords.push_back(static_cast<std::uint32_t>(residue(e[i], f.moduli()[i])));
            fibers.emplace_back(f.from_coords(coords), u);
          }
          acc = unite(acc, HybridSet::from_fibers(g, std::move(fibers)));
        }
      } catch (const Error& e) {
        fail(ErrorKind::EvaluationError, "set " + s->name + ": " + e.what());
      }
      env.sets.emplace(s->name, std::move(acc));
      env.set_group.emplace(s->name, s->group);
      env.order.push_back(s->name);
    } else if (auto r = std::get_if<RsetDecl>(&d)) {
      try {
        r->def.validate();
      } catch (const Error& e) {
        fail(ErrorKind::EvaluationError, "rset " + r->name + ": " + e.what());
      }
      env.rsets.emplace(r->name, r->def);
      env.order.push_back(r->name);
    } else {
      env.queries.push_back(std::get<QueryDecl>(d));
    }
  }
  return env;
}

GroupDecl group_decl(const std::string& name, const HybridGroup& g) {
  GroupDecl d{name, {}, g.torus_dim()};
  for (auto m : g.finite().moduli())
    if (m > 1) d.moduli.push_back(m);
  return d;
}

SetDecl set_decl(const std::string& name, const std::string& group, const HybridSet& s) {
  SetDecl d{name, group, {}};
  const auto& f = s.group().finite();
  auto elem = [&](ElementId e) {
    std::vector<long long> out;
    for (auto c : f.coords(e)) out.push_back(c);
    return out;
  };
  if (!s.group().has_torus()) {
    if (s.empty()) return d;
    Term t;
    for (auto e : s.support()) t.elements.push_back(elem(e));
    d.terms.push_back(std::move(t));
    return d;
  }
  // Group support elements sharing a fiber, ordered by first occurrence.
  std::vector<std::pair<IntervalUnion, std::vector<ElementId>>> groups;
  for (std::size_t i = 0; i < s.fiber_count(); ++i) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& p) { return p.first == s.fiber_at(i); });
    if (it == groups.end()) groups.push_back({s.fiber_at(i), {s.support()[i]}});
    else it->second.push_back(s.support()[i]);
  }
  for (const auto& [u, elems] : groups) {
    Term t;
    for (auto e : elems) t.elements.push_back(elem(e));
    Fiber fb;
    fb.full = u.is_full();
    if (!fb.full)
      for (const auto& a : u.arcs()) fb.arcs.push_back({a.left, a.right()});
    t.fiber = std::move(fb);
    d.terms.push_back(std::move(t));
  }
  return d;
}

std::string pair_program(const HybridSet& a, const HybridSet& b, const std::string& query) {
  Program p;
  p.declarations.push_back(group_decl("G", a.group()));
  p.declarations.push_back(set_decl("A", "G", a));
  p.declarations.push_back(set_decl("B", "G", b));
  std::string out = print(p);
  if (!query.empty()) out += query + "\n";
  return out;
}

}  // namespace kneser::setlang
