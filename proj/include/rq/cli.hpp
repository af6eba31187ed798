#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rq/finoracle.hpp"

namespace rq {

/// Parse a polynomial expression (precedence ^ > * > binary +/-, unary
/// minus, integer and variable atoms, parentheses) over the given ambient.
Poly parse_poly(const std::string& text, const AmbientPtr& amb);

/// Same expression grammar evaluated over the integers; variables are a
/// parse error.
long long parse_int_expr(const std::string& text);

struct Command {
  enum class Kind {
    DefineRingQuotient,
    DefineRingZmod,
    DefineIdeal,
    DefineRab,
    AttachRoots,
    Query,
    OracleCheck,
    Search,
    SetConfig
  };
  Kind kind = Kind::Query;

  std::string name;                  // defined name, or the queried object
  std::string field;                 // query kind / config key
  long long number = 0;              // zmod n / GF p / config value
  bool rational_field = false;       // quotient over QQ
  std::vector<std::string> vars;     // quotient variables
  std::vector<std::string> exprs;    // mod list / span generators
  std::string ring_name, ideal_name;
  std::string a_expr, b_expr;
  std::string alpha, beta, gamma, pcorr;  // roots clause ("" when absent)
  std::vector<std::string> prime;         // over prime=[...] / roots modulus
  bool has_prime = false;
  std::vector<std::pair<std::string, long long>> kv;  // search bounds

  std::string render() const;
  bool operator==(const Command& o) const { return render() == o.render(); }
};

std::vector<Command> parse_script(const std::string& text);

struct Session {
  std::map<std::string, RingPtr> rings;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, RabPtr> rabs;
  unsigned long long cap = 10000;
  unsigned seed = 1;
  bool json_only = false;
};

/// Run the commands in order, writing JSON lines (and, unless json_only,
/// text renderings) to `out`. Returns 0 when no command ended in an error
/// status, 1 otherwise.
int execute(Session& session, const std::vector<Command>& commands,
            std::ostream& out);

/// Line-oriented REPL over in/out; each ';'-terminated statement runs
/// immediately. Returns like execute.
int repl(Session& session, std::istream& in, std::ostream& out);

}  // namespace rq
