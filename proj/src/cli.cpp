#include "rq/cli.hpp"

#include <json.hpp>

#include <istream>
#include <ostream>
#include <sstream>

namespace rq {

using nlohmann::json;

// ---------------------------------------------------------------------------
// tokens
// ---------------------------------------------------------------------------

namespace {

struct Token {
  enum class Type { Ident, Int, Sym, End };
  Type type = Type::End;
  std::string s;
  long long v = 0;
  int line = 1, col = 1;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto bump = [&](char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') bump(text[i++]);
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      bump(c);
      ++i;
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (isalpha((unsigned char)c) || c == '_') {
      t.type = Token::Type::Ident;
      while (i < text.size() &&
             (isalnum((unsigned char)text[i]) || text[i] == '_')) {
        t.s += text[i];
        bump(text[i++]);
      }
    } else if (isdigit((unsigned char)c)) {
      t.type = Token::Type::Int;
      while (i < text.size() && isdigit((unsigned char)text[i])) {
        t.s += text[i];
        bump(text[i++]);
      }
      t.v = std::stoll(t.s);
    } else if (std::string("()[],;=^*+-").find(c) != std::string::npos) {
      t.type = Token::Type::Sym;
      t.s = std::string(1, c);
      bump(c);
      ++i;
    } else {
      throw ParseError(line, col, "a token");
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

// ---------------------------------------------------------------------------
// expressions
// ---------------------------------------------------------------------------

struct Expr {
  enum class K { Int, Var, Neg, Add, Sub, Mul, Pow } k = K::Int;
  long long v = 0;
  std::string name;
  std::vector<Expr> ch;
  int line = 1, col = 1;
};

struct Parser {
  const std::vector<Token>& toks;
  size_t pos = 0;

  const Token& peek(int ahead = 0) const {
    size_t k = pos + ahead;
    return k < toks.size() ? toks[k] : toks.back();
  }
  const Token& get() { return toks[pos < toks.size() - 1 ? pos++ : pos]; }
  bool at_sym(const std::string& s) const {
    return peek().type == Token::Type::Sym && peek().s == s;
  }
  bool at_ident(const std::string& s) const {
    return peek().type == Token::Type::Ident && peek().s == s;
  }
  void expect_sym(const std::string& s) {
    if (!at_sym(s)) throw ParseError(peek().line, peek().col, "'" + s + "'");
    get();
  }
  std::string expect_ident(const std::string& what = "an identifier") {
    if (peek().type != Token::Type::Ident)
      throw ParseError(peek().line, peek().col, what);
    return get().s;
  }
  long long expect_int() {
    if (peek().type != Token::Type::Int)
      throw ParseError(peek().line, peek().col, "an integer");
    return get().v;
  }
  void expect_kw(const std::string& kw) {
    if (!at_ident(kw))
      throw ParseError(peek().line, peek().col, "'" + kw + "'");
    get();
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    while (at_sym("+") || at_sym("-")) {
      bool plus = peek().s == "+";
      const Token& op = get();
      Expr node;
      node.k = plus ? Expr::K::Add : Expr::K::Sub;
      node.line = op.line;
      node.col = op.col;
      node.ch.push_back(std::move(lhs));
      node.ch.push_back(parse_term());
      lhs = std::move(node);
    }
    return lhs;
  }

  Expr parse_term() {
    Expr lhs = parse_factor();
    while (at_sym("*")) {
      const Token& op = get();
      Expr node;
      node.k = Expr::K::Mul;
      node.line = op.line;
      node.col = op.col;
      node.ch.push_back(std::move(lhs));
      node.ch.push_back(parse_factor());
      lhs = std::move(node);
    }
    return lhs;
  }

  Expr parse_factor() {
    if (at_sym("-")) {
      const Token& op = get();
      Expr node;
      node.k = Expr::K::Neg;
      node.line = op.line;
      node.col = op.col;
      node.ch.push_back(parse_factor());
      return node;
    }
    Expr base = parse_atom();
    if (at_sym("^")) {
      const Token& op = get();
      Expr node;
      node.k = Expr::K::Pow;
      node.line = op.line;
      node.col = op.col;
      node.v = expect_int();
      if (node.v < 0)
        throw ParseError(op.line, op.col, "a nonnegative exponent");
      node.ch.push_back(std::move(base));
      return node;
    }
    return base;
  }

  Expr parse_atom() {
    const Token& t = peek();
    if (t.type == Token::Type::Int) {
      Expr e;
      e.k = Expr::K::Int;
      e.v = get().v;
      e.line = t.line;
      e.col = t.col;
      return e;
    }
    if (t.type == Token::Type::Ident) {
      Expr e;
      e.k = Expr::K::Var;
      e.name = get().s;
      e.line = t.line;
      e.col = t.col;
      return e;
    }
    if (at_sym("(")) {
      get();
      Expr e = parse_expr();
      expect_sym(")");
      return e;
    }
    throw ParseError(t.line, t.col, "an expression");
  }
};

int expr_prec(const Expr& e) {
  switch (e.k) {
    case Expr::K::Add:
    case Expr::K::Sub:
      return 1;
    case Expr::K::Neg:
      return 2;
    case Expr::K::Mul:
      return 3;
    case Expr::K::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string render_expr(const Expr& e, int parent = 0) {
  std::string s;
  switch (e.k) {
    case Expr::K::Int:
      s = std::to_string(e.v);
      break;
    case Expr::K::Var:
      s = e.name;
      break;
    case Expr::K::Neg:
      s = "-" + render_expr(e.ch[0], 2);
      break;
    case Expr::K::Add:
      s = render_expr(e.ch[0], 1) + " + " + render_expr(e.ch[1], 2);
      break;
    case Expr::K::Sub:
      s = render_expr(e.ch[0], 1) + " - " + render_expr(e.ch[1], 2);
      break;
    case Expr::K::Mul:
      s = render_expr(e.ch[0], 3) + "*" + render_expr(e.ch[1], 3);
      break;
    case Expr::K::Pow:
      s = render_expr(e.ch[0], 5) + "^" + std::to_string(e.v);
      break;
  }
  if (expr_prec(e) < parent) s = "(" + s + ")";
  return s;
}

Poly eval_poly(const Expr& e, const AmbientPtr& amb) {
  switch (e.k) {
    case Expr::K::Int:
      return Poly::constant(amb, amb->cint(e.v));
    case Expr::K::Var: {
      int idx = amb->var_index(e.name);
      if (idx < 0)
        throw ParseError(e.line, e.col, "a variable of the ring");
      return Poly::var(amb, idx);
    }
    case Expr::K::Neg:
      return -eval_poly(e.ch[0], amb);
    case Expr::K::Add:
      return eval_poly(e.ch[0], amb) + eval_poly(e.ch[1], amb);
    case Expr::K::Sub:
      return eval_poly(e.ch[0], amb) - eval_poly(e.ch[1], amb);
    case Expr::K::Mul:
      return eval_poly(e.ch[0], amb) * eval_poly(e.ch[1], amb);
    case Expr::K::Pow:
      return eval_poly(e.ch[0], amb).pow((unsigned)e.v);
  }
  return Poly::zero(amb);
}

long long eval_int(const Expr& e) {
  switch (e.k) {
    case Expr::K::Int:
      return e.v;
    case Expr::K::Var:
      throw ParseError(e.line, e.col, "an integer expression");
    case Expr::K::Neg:
      return -eval_int(e.ch[0]);
    case Expr::K::Add:
      return eval_int(e.ch[0]) + eval_int(e.ch[1]);
    case Expr::K::Sub:
      return eval_int(e.ch[0]) - eval_int(e.ch[1]);
    case Expr::K::Mul:
      return eval_int(e.ch[0]) * eval_int(e.ch[1]);
    case Expr::K::Pow: {
      long long r = 1, b = eval_int(e.ch[0]);
      for (long long k = 0; k < e.v; ++k) r *= b;
      return r;
    }
  }
  return 0;
}

}  // namespace

Poly parse_poly(const std::string& text, const AmbientPtr& amb) {
  std::vector<Token> toks = tokenize(text);
  Parser p{toks};
  Expr e = p.parse_expr();
  if (p.peek().type != Token::Type::End)
    throw ParseError(p.peek().line, p.peek().col, "end of expression");
  return eval_poly(e, amb);
}

long long parse_int_expr(const std::string& text) {
  std::vector<Token> toks = tokenize(text);
  Parser p{toks};
  Expr e = p.parse_expr();
  if (p.peek().type != Token::Type::End)
    throw ParseError(p.peek().line, p.peek().col, "end of expression");
  return eval_int(e);
}

// ---------------------------------------------------------------------------
// statements
// ---------------------------------------------------------------------------

namespace {

const char* kQueryKinds[] = {"is_reduced",     "is_domain",    "fiber",
                             "minimal_primes", "localization", "recognize"};

bool valid_query_kind(const std::string& s) {
  for (const char* k : kQueryKinds)
    if (s == k) return true;
  return false;
}

std::string canon_expr(Parser& p) { return render_expr(p.parse_expr()); }

std::vector<std::string> parse_expr_list(Parser& p) {
  std::vector<std::string> out;
  p.expect_sym("[");
  if (!p.at_sym("]")) {
    out.push_back(canon_expr(p));
    while (p.at_sym(",")) {
      p.get();
      out.push_back(canon_expr(p));
    }
  }
  p.expect_sym("]");
  return out;
}

std::vector<std::string> parse_prime_clause(Parser& p) {
  p.expect_kw("prime");
  p.expect_sym("=");
  return parse_expr_list(p);
}

Command parse_statement(Parser& p) {
  Command c;
  const Token& head = p.peek();
  if (head.type != Token::Type::Ident)
    throw ParseError(head.line, head.col, "a statement keyword");
  std::string kw = p.get().s;

  if (kw == "ring") {
    c.name = p.expect_ident("a ring name");
    p.expect_sym("=");
    std::string ctor = p.expect_ident("'quotient' or 'zmod'");
    if (ctor == "zmod") {
      c.kind = Command::Kind::DefineRingZmod;
      p.expect_sym("(");
      c.number = p.expect_int();
      p.expect_sym(")");
    } else if (ctor == "quotient") {
      c.kind = Command::Kind::DefineRingQuotient;
      p.expect_sym("(");
      std::string fld = p.expect_ident("'GF' or 'QQ'");
      if (fld == "QQ") {
        c.rational_field = true;
      } else if (fld == "GF") {
        p.expect_sym("(");
        c.number = p.expect_int();
        p.expect_sym(")");
      } else {
        throw ParseError(head.line, head.col, "'GF' or 'QQ'");
      }
      p.expect_sym(",");
      p.expect_kw("vars");
      p.expect_sym("=");
      p.expect_sym("[");
      c.vars.push_back(p.expect_ident("a variable name"));
      while (p.at_sym(",")) {
        p.get();
        c.vars.push_back(p.expect_ident("a variable name"));
      }
      p.expect_sym("]");
      p.expect_sym(",");
      p.expect_kw("mod");
      p.expect_sym("=");
      c.exprs = parse_expr_list(p);
      p.expect_sym(")");
    } else {
      throw ParseError(head.line, head.col, "'quotient' or 'zmod'");
    }
  } else if (kw == "ideal") {
    c.kind = Command::Kind::DefineIdeal;
    c.name = p.expect_ident("an ideal name");
    p.expect_sym("=");
    p.expect_kw("span");
    p.expect_sym("(");
    c.ring_name = p.expect_ident("a ring name");
    p.expect_sym(",");
    c.exprs = parse_expr_list(p);
    p.expect_sym(")");
  } else if (kw == "rab") {
    c.kind = Command::Kind::DefineRab;
    c.name = p.expect_ident("a name");
    p.expect_sym("=");
    p.expect_kw("rab");
    p.expect_sym("(");
    c.ring_name = p.expect_ident("a ring name");
    p.expect_sym(",");
    c.ideal_name = p.expect_ident("an ideal name");
    p.expect_sym(",");
    p.expect_kw("a");
    p.expect_sym("=");
    c.a_expr = canon_expr(p);
    p.expect_sym(",");
    p.expect_kw("b");
    p.expect_sym("=");
    c.b_expr = canon_expr(p);
    p.expect_sym(")");
  } else if (kw == "roots") {
    c.kind = Command::Kind::AttachRoots;
    c.name = p.expect_ident("a rab name");
    p.expect_kw("with");
    p.expect_kw("alpha");
    p.expect_sym("=");
    c.alpha = canon_expr(p);
    p.expect_sym(",");
    p.expect_kw("beta");
    p.expect_sym("=");
    c.beta = canon_expr(p);
    p.expect_sym(",");
    p.expect_kw("gamma");
    p.expect_sym("=");
    c.gamma = canon_expr(p);
    if (p.at_sym(",")) {
      p.get();
      p.expect_kw("p");
      p.expect_sym("=");
      c.pcorr = canon_expr(p);
    }
    if (p.at_ident("mod")) {
      p.get();
      c.prime = parse_prime_clause(p);
      c.has_prime = true;
    }
  } else if (kw == "query") {
    c.kind = Command::Kind::Query;
    c.field = p.expect_ident("a query kind");
    if (!valid_query_kind(c.field))
      throw ParseError(head.line, head.col, "a query kind");
    c.name = p.expect_ident("a rab name");
    if (p.at_ident("over")) {
      p.get();
      c.prime = parse_prime_clause(p);
      c.has_prime = true;
    }
  } else if (kw == "check") {
    c.kind = Command::Kind::OracleCheck;
    p.expect_kw("oracle");
    c.name = p.expect_ident("a rab name");
  } else if (kw == "search") {
    c.kind = Command::Kind::Search;
    p.expect_kw("locq");
    if (p.peek().type == Token::Type::Ident) {
      c.kv.emplace_back(p.expect_ident(), 0);
      p.expect_sym("=");
      c.kv.back().second = p.expect_int();
      while (p.at_sym(",")) {
        p.get();
        c.kv.emplace_back(p.expect_ident("a bound name"), 0);
        p.expect_sym("=");
        c.kv.back().second = p.expect_int();
      }
    }
  } else if (kw == "set") {
    c.kind = Command::Kind::SetConfig;
    c.field = p.expect_ident("a config key");
    c.number = p.expect_int();
  } else {
    throw ParseError(head.line, head.col, "a statement keyword");
  }
  p.expect_sym(";");
  return c;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += xs[i];
  }
  return s;
}

}  // namespace

std::string Command::render() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::DefineRingQuotient:
      os << "ring " << name << " = quotient(";
      if (rational_field)
        os << "QQ";
      else
        os << "GF(" << number << ")";
      os << ", vars=[" << join(vars, ", ") << "], mod=[" << join(exprs, ", ")
         << "])";
      break;
    case Kind::DefineRingZmod:
      os << "ring " << name << " = zmod(" << number << ")";
      break;
    case Kind::DefineIdeal:
      os << "ideal " << name << " = span(" << ring_name << ", ["
         << join(exprs, ", ") << "])";
      break;
    case Kind::DefineRab:
      os << "rab " << name << " = rab(" << ring_name << ", " << ideal_name
         << ", a = " << a_expr << ", b = " << b_expr << ")";
      break;
    case Kind::AttachRoots:
      os << "roots " << name << " with alpha = " << alpha
         << ", beta = " << beta << ", gamma = " << gamma;
      if (!pcorr.empty()) os << ", p = " << pcorr;
      if (has_prime) os << " mod prime=[" << join(prime, ", ") << "]";
      break;
    case Kind::Query:
      os << "query " << field << " " << name;
      if (has_prime) os << " over prime=[" << join(prime, ", ") << "]";
      break;
    case Kind::OracleCheck:
      os << "check oracle " << name;
      break;
    case Kind::Search: {
      os << "search locq";
      for (size_t i = 0; i < kv.size(); ++i)
        os << (i ? ", " : " ") << kv[i].first << "=" << kv[i].second;
      break;
    }
    case Kind::SetConfig:
      os << "set " << field << " " << number;
      break;
  }
  os << ";";
  return os.str();
}

std::vector<Command> parse_script(const std::string& text) {
  std::vector<Token> toks = tokenize(text);
  Parser p{toks};
  std::vector<Command> out;
  while (p.peek().type != Token::Type::End) out.push_back(parse_statement(p));
  return out;
}

// ---------------------------------------------------------------------------
// execution
// ---------------------------------------------------------------------------

namespace {

bool name_taken(const Session& s, const std::string& n) {
  return s.rings.count(n) || s.ideals.count(n) || s.rabs.count(n);
}

const RingPtr& find_ring(const Session& s, const std::string& n) {
  auto it = s.rings.find(n);
  if (it == s.rings.end()) throw NameError("undefined ring '" + n + "'");
  return it->second;
}

const Ideal& find_ideal(const Session& s, const std::string& n) {
  auto it = s.ideals.find(n);
  if (it == s.ideals.end()) throw NameError("undefined ideal '" + n + "'");
  return it->second;
}

const RabPtr& find_rab(const Session& s, const std::string& n) {
  auto it = s.rabs.find(n);
  if (it == s.rabs.end()) throw NameError("undefined rab ring '" + n + "'");
  return it->second;
}

RingElem eval_elem(const RingPtr& R, const std::string& expr) {
  if (R->backend() == Ring::Backend::ZMod)
    return R->from_int(parse_int_expr(expr));
  return R->from_poly(parse_poly(expr, R->ambient()));
}

Ideal eval_prime(const RingPtr& R, const std::vector<std::string>& exprs) {
  std::vector<RingElem> gens;
  for (auto& e : exprs) gens.push_back(eval_elem(R, e));
  return R->ideal(gens).asserting_prime();
}

struct Emitter {
  std::ostream& out;
  bool json_only;
  bool any_error = false;

  void line(const std::string& cmd, const std::string& status,
            const json& result, const std::string& witness,
            const std::string& text) {
    if (status == "error") any_error = true;
    if (!json_only && !text.empty()) out << "-- " << text << "\n";
    json j;
    j["cmd"] = cmd;
    j["status"] = status;
    j["result"] = result;
    j["witness"] = witness;
    out << j.dump() << "\n";
  }
};

json tristate_json(const TriState& t) {
  json j;
  j["answer"] = t.str();
  j["reason"] = t.witness;
  return j;
}

void run_query(Session& s, const Command& c, Emitter& em) {
  const std::string cmd = c.render();
  const RabPtr& rab = find_rab(s, c.name);
  const RingPtr& R = rab->base();

  if (c.field == "is_reduced") {
    std::optional<RabElem> w;
    TriState t = is_reduced_rab(*rab, &w);
    std::string witness = w ? w->str() : t.witness;
    em.line(cmd, t.is_unknown() ? "unknown" : "ok", tristate_json(t), witness,
            "is_reduced(" + c.name + ") = " + t.str());
  } else if (c.field == "is_domain") {
    TriState t = is_domain_rab(*rab);
    em.line(cmd, t.is_unknown() ? "unknown" : "ok", tristate_json(t),
            t.witness, "is_domain(" + c.name + ") = " + t.str());
  } else if (c.field == "fiber" || c.field == "localization") {
    if (!c.has_prime)
      throw BadPrime("query " + c.field + " needs an 'over prime=[...]'");
    Ideal p = eval_prime(R, c.prime);
    std::optional<RootData> roots;
    if (rab->roots() && rab->roots()->modulus &&
        rab->roots()->modulus->same_ideal(p))
      roots = rab->roots();
    if (c.field == "fiber") {
      FiberResult fr = fiber_over_prime(*rab, p, roots);
      json r;
      r["reducible"] = fr.reducible;
      r["merged"] = fr.merged;
      json primes = json::array();
      for (auto& d : fr.primes()) primes.push_back(d.str());
      r["primes"] = primes;
      r["count"] = fr.primes().size();
      em.line(cmd, "ok", r, fr.merged_witness,
              "fiber over " + p.str() + ": " +
                  std::to_string(fr.primes().size()) + " prime(s)" +
                  (fr.merged ? " (merged)" : ""));
    } else {
      LocalizationReport lr = localization_class(*rab, p, roots);
      json r;
      r["case"] = lr.case_name();
      r["lambda"] = lr.lambda ? json(lr.lambda->str()) : json(nullptr);
      r["notes"] = lr.notes;
      bool open = lr.kase == LocalizationReport::Case::OpenQuestion;
      em.line(cmd, open ? "unknown" : "ok", r, lr.notes,
              "localization over " + p.str() + ": " + lr.case_name());
    }
  } else if (c.field == "minimal_primes") {
    auto mp = minimal_primes_rab(*rab);
    if (!mp) {
      em.line(cmd, "unknown", "minimal primes of the base ring undetermined",
              "", "minimal_primes(" + c.name + ") unknown");
      return;
    }
    json r;
    json primes = json::array();
    for (auto& d : *mp) primes.push_back(d.str());
    r["count"] = mp->size();
    r["primes"] = primes;
    em.line(cmd, "ok", r, "",
            "minimal_primes(" + c.name + "): " + std::to_string(mp->size()) +
                " descriptor(s)");
  } else if (c.field == "recognize") {
    SpecialReport sp = recognize_special(*rab);
    json r;
    r["idealization"] = tristate_json(sp.idealization);
    r["duplication"] = tristate_json(sp.duplication);
    r["idealization_map"] =
        sp.idealization_map ? json(sp.idealization_map->desc) : json(nullptr);
    r["duplication_map"] =
        sp.duplication_map ? json(sp.duplication_map->desc) : json(nullptr);
    bool unknown = sp.idealization.is_unknown() || sp.duplication.is_unknown();
    em.line(cmd, unknown ? "unknown" : "ok", r, "",
            "recognize(" + c.name + "): idealization " +
                sp.idealization.str() + ", duplication " +
                sp.duplication.str());
  }
}

void run_command(Session& s, const Command& c, Emitter& em) {
  const std::string cmd = c.render();
  switch (c.kind) {
    case Command::Kind::DefineRingZmod:
    case Command::Kind::DefineRingQuotient: {
      if (name_taken(s, c.name))
        throw NameError("name '" + c.name + "' already bound");
      RingPtr R;
      if (c.kind == Command::Kind::DefineRingZmod) {
        R = Ring::zmod(c.number);
      } else {
        long long p = c.rational_field ? 0 : c.number;
        AmbientPtr amb = make_ambient(p, c.vars);
        std::vector<Poly> jgens;
        for (auto& e : c.exprs) jgens.push_back(parse_poly(e, amb));
        R = Ring::quotient(p, c.vars, MonomialOrder::degrevlex(), jgens);
      }
      s.rings.emplace(c.name, R);
      json r;
      r["defined"] = c.name;
      r["ring"] = R->str();
      em.line(cmd, "ok", r, "", "ring " + c.name + " = " + R->str());
      break;
    }
    case Command::Kind::DefineIdeal: {
      if (name_taken(s, c.name))
        throw NameError("name '" + c.name + "' already bound");
      const RingPtr& R = find_ring(s, c.ring_name);
      std::vector<RingElem> gens;
      for (auto& e : c.exprs) gens.push_back(eval_elem(R, e));
      Ideal I = R->ideal(gens);
      s.ideals.emplace(c.name, I);
      json r;
      r["defined"] = c.name;
      r["ideal"] = I.str();
      em.line(cmd, "ok", r, "", "ideal " + c.name + " = " + I.str());
      break;
    }
    case Command::Kind::DefineRab: {
      if (name_taken(s, c.name))
        throw NameError("name '" + c.name + "' already bound");
      const RingPtr& R = find_ring(s, c.ring_name);
      const Ideal& I = find_ideal(s, c.ideal_name);
      RabPtr rr = RabRing::make(R, I, eval_elem(R, c.a_expr),
                                eval_elem(R, c.b_expr));
      s.rabs.emplace(c.name, rr);
      json r;
      r["defined"] = c.name;
      r["rab"] = rr->str();
      em.line(cmd, "ok", r, "", "rab " + c.name + " = " + rr->str());
      break;
    }
    case Command::Kind::AttachRoots: {
      const RabPtr& rab = find_rab(s, c.name);
      const RingPtr& R = rab->base();
      RootData rd;
      rd.alpha = eval_elem(R, c.alpha);
      rd.beta = eval_elem(R, c.beta);
      rd.gamma = eval_elem(R, c.gamma);
      rd.p_corr = c.pcorr.empty() ? R->zero() : eval_elem(R, c.pcorr);
      if (c.has_prime) rd.modulus = eval_prime(R, c.prime);
      rab->verify_and_attach(rd);
      json r;
      r["attached"] = rd.str();
      em.line(cmd, "ok", r, "", "roots attached to " + c.name);
      break;
    }
    case Command::Kind::Query:
      run_query(s, c, em);
      break;
    case Command::Kind::OracleCheck: {
      const RabPtr& rab = find_rab(s, c.name);
      CrosscheckReport rep = crosscheck(rab, s.cap);
      json r;
      r["model_size"] = rep.model_size;
      r["primes"] = rep.primes_bf_count;
      r["reduced"] = rep.reduced_sym;
      r["open_questions"] = rep.open_questions;
      r["detail"] = rep.detail;
      em.line(cmd, "ok", r, "", "oracle agrees on " + c.name + " (" +
                                    rep.detail + ")");
      break;
    }
    case Command::Kind::Search: {
      SweepSpec spec;
      spec.n_hi = 12;
      spec.full_upto = 12;
      spec.seed = s.seed;
      spec.cap = s.cap;
      for (auto& [k, v] : c.kv) {
        if (k == "max_n")
          spec.n_hi = v;
        else if (k == "min_n")
          spec.n_lo = v;
        else if (k == "pairs")
          spec.random_pairs = (int)v;
        else if (k == "full_upto")
          spec.full_upto = v;
        else if (k == "seed")
          spec.seed = (unsigned)v;
        else
          throw NameError("unknown search bound '" + k + "'");
      }
      auto findings = search_localization_question(spec);
      for (auto& f : findings) {
        json r;
        r["n"] = f.item.n;
        r["d"] = f.item.d;
        r["a"] = f.item.a;
        r["b"] = f.item.b;
        r["prime"] = f.prime;
        r["resolved"] = f.resolved;
        r["iso_base_local"] = f.iso_base_local;
        r["local_size"] = f.local_size;
        r["base_local_size"] = f.base_local_size;
        em.line(cmd, "ok", r, f.notes,
                "locq instance n=" + std::to_string(f.item.n) + " d=" +
                    std::to_string(f.item.d) + " a=" +
                    std::to_string(f.item.a) + " b=" +
                    std::to_string(f.item.b) + ": " + f.notes);
      }
      bool counterexample = false;
      for (auto& f : findings)
        if (f.resolved && !f.iso_base_local) counterexample = true;
      json r;
      r["instances"] = findings.size();
      r["counterexample"] = counterexample;
      em.line(cmd, "ok", r, "",
              counterexample
                  ? "counterexample found, see instance lines above"
                  : "no counterexample (" + std::to_string(findings.size()) +
                        " undecided instance(s) checked)");
      break;
    }
    case Command::Kind::SetConfig: {
      if (c.field == "cap")
        s.cap = (unsigned long long)c.number;
      else if (c.field == "seed")
        s.seed = (unsigned)c.number;
      else
        throw NameError("unknown config key '" + c.field + "'");
      json r;
      r[c.field] = c.number;
      em.line(cmd, "ok", r, "", "set " + c.field);
      break;
    }
  }
}

}  // namespace

int execute(Session& session, const std::vector<Command>& commands,
            std::ostream& out) {
  Emitter em{out, session.json_only};
  for (const Command& c : commands) {
    try {
      run_command(session, c, em);
    } catch (const Error& e) {
      json r;
      r["code"] = e.code();
      r["message"] = e.what();
      em.line(c.render(), "error", r, "", std::string("error: ") + e.what());
    }
  }
  return em.any_error ? 1 : 0;
}

int repl(Session& session, std::istream& in, std::ostream& out) {
  Emitter em{out, session.json_only};
  std::string buffer, line;
  while (std::getline(in, line)) {
    buffer += line + "\n";
    size_t cut = buffer.rfind(';');
    if (cut == std::string::npos) continue;
    std::string chunk = buffer.substr(0, cut + 1);
    buffer.erase(0, cut + 1);
    try {
      for (const Command& c : parse_script(chunk)) {
        try {
          run_command(session, c, em);
        } catch (const Error& e) {
          json r;
          r["code"] = e.code();
          r["message"] = e.what();
          em.line(c.render(), "error", r, "",
                  std::string("error: ") + e.what());
        }
      }
    } catch (const ParseError& e) {
      json r;
      r["code"] = e.code();
      r["message"] = e.what();
      em.line(chunk, "error", r, "", std::string("error: ") + e.what());
    }
  }
  return em.any_error ? 1 : 0;
}

}  // namespace rq
