#include "bibucalc/diagram.hpp"

#include <cctype>
#include <vector>

namespace bibu {

namespace {

struct Token {
  enum Kind { Name, Semi, Star, LParen, RParen, End } kind;
  std::string text;
  int line, col;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&] {
    if (s[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      advance();
      continue;
    }
    int l0 = line, c0 = col;
    if (std::isalpha(c) || c == '_') {
      std::string name;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '\'')) {
        name += s[i];
        advance();
      }
      out.push_back({Token::Name, name, l0, c0});
      continue;
    }
    Token::Kind k;
    switch (c) {
      case ';': k = Token::Semi; break;
      case '*': k = Token::Star; break;
      case '(': k = Token::LParen; break;
      case ')': k = Token::RParen; break;
      default:
        throw DiagramError(l0, c0, std::string("unexpected character '") + s[i] + "'");
    }
    out.push_back({k, std::string(1, s[i]), l0, c0});
    advance();
  }
  out.push_back({Token::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  DiagramAST top() {
    auto e = expr();
    if (peek().kind != Token::End) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return t_[p_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw DiagramError(peek().line, peek().col, msg);
  }

  static DiagramAST node(DiagramNode::Kind k, DiagramAST a, DiagramAST b) {
    auto n = std::make_shared<DiagramNode>();
    n->kind = k;
    n->line = a->line;
    n->col = a->col;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
  }

  DiagramAST expr() {
    auto a = term();
    while (peek().kind == Token::Semi) {
      ++p_;
      a = node(DiagramNode::Kind::Seq, a, term());
    }
    return a;
  }

  DiagramAST term() {
    auto a = factor();
    while (peek().kind == Token::Star) {
      ++p_;
      a = node(DiagramNode::Kind::Tensor, a, factor());
    }
    return a;
  }

  DiagramAST factor() {
    const Token& tk = peek();
    if (tk.kind == Token::Name) {
      auto n = std::make_shared<DiagramNode>();
      n->name = tk.text;
      n->line = tk.line;
      n->col = tk.col;
      ++p_;
      return n;
    }
    if (tk.kind == Token::LParen) {
      ++p_;
      auto e = expr();
      if (peek().kind != Token::RParen) fail("expected ')'");
      ++p_;
      return e;
    }
    if (tk.kind == Token::End) fail("unexpected end of input, expected a name or '('");
    fail("expected a name or '(' but found '" + tk.text + "'");
  }

  std::vector<Token> t_;
  std::size_t p_ = 0;
};

}  // namespace

DiagramAST parse_diagram(const std::string& text) { return Parser(lex(text)).top(); }

std::string print_diagram(const DiagramAST& a) {
  using K = DiagramNode::Kind;
  switch (a->kind) {
    case K::Gen:
      return a->name;
    case K::Tensor: {
      auto wrap = [](const DiagramAST& x, bool also_tensor) {
        bool paren = x->kind == K::Seq || (also_tensor && x->kind == K::Tensor);
        return paren ? "(" + print_diagram(x) + ")" : print_diagram(x);
      };
      return wrap(a->lhs, false) + " * " + wrap(a->rhs, true);
    }
    case K::Seq: {
      std::string r = print_diagram(a->rhs);
      if (a->rhs->kind == K::Seq) r = "(" + r + ")";
      return print_diagram(a->lhs) + " ; " + r;
    }
  }
  return {};
}

bool same_diagram(const DiagramAST& a, const DiagramAST& b) {
  if (a->kind != b->kind) return false;
  if (a->kind == DiagramNode::Kind::Gen) return a->name == b->name;
  return same_diagram(a->lhs, b->lhs) && same_diagram(a->rhs, b->rhs);
}

DiagramEnv::DiagramEnv(GroupoidPtr G) : G_(std::move(G)) {
  gens_.emplace("id", Gen{identity_bibundle(G_), 1, 1});
  gens_.emplace("tau", Gen{flip(G_, G_), 2, 2});
  gens_.emplace("delta", Gen{diagonal(G_), 1, 2});
  gens_.emplace("eps", Gen{terminal_morphism(G_), 1, 0});
  gens_.emplace("ev", Gen{ev(G_), 2, 0});
  gens_.emplace("cv", Gen{cv(G_), 0, 2});
  gens_.emplace("one", Gen{identity_bibundle(unit_groupoid()), 0, 0});
}

void DiagramEnv::bind(const std::string& name, Bibundle M, int in, int out) {
  if (!same_groupoid(M.left(), power(G_, in)) || !same_groupoid(M.right(), power(G_, out)))
    throw StructuralError("binding '" + name + "' does not live over G^" + std::to_string(in) +
                          " and G^" + std::to_string(out));
  gens_.insert_or_assign(name, Gen{std::move(M), in, out});
}

void DiagramEnv::bind(const std::string& name, Bibundle M) {
  auto find_power = [&](const GroupoidPtr& X) {
    for (int k = 0; k <= 6; ++k)
      if (same_groupoid(X, power(G_, k))) return k;
    throw StructuralError("binding '" + name + "' is not over a power of the base groupoid");
  };
  int in = find_power(M.left()), out = find_power(M.right());
  gens_.insert_or_assign(name, Gen{std::move(M), in, out});
}

std::pair<int, int> DiagramEnv::arity(const std::string& name) const {
  auto it = gens_.find(name);
  if (it == gens_.end()) throw StructuralError("unknown generator '" + name + "'");
  return {it->second.in, it->second.out};
}

const Bibundle& DiagramEnv::generator(const std::string& name) const {
  auto it = gens_.find(name);
  if (it == gens_.end()) throw StructuralError("unknown generator '" + name + "'");
  return it->second.bundle;
}

std::pair<int, int> typecheck(const DiagramAST& a, const DiagramEnv& env) {
  using K = DiagramNode::Kind;
  if (a->kind == K::Gen) {
    if (!env.has(a->name)) throw DiagramError(a->line, a->col, "unknown generator '" + a->name + "'");
    return env.arity(a->name);
  }
  auto [li, lo] = typecheck(a->lhs, env);
  auto [ri, ro] = typecheck(a->rhs, env);
  if (a->kind == K::Tensor) return {li + ri, lo + ro};
  if (lo != ri)
    throw DiagramError(a->rhs->line, a->rhs->col,
                       "arity mismatch: '" + print_diagram(a->lhs) + "' has " + std::to_string(lo) +
                           " outputs but '" + print_diagram(a->rhs) + "' has " +
                           std::to_string(ri) + " inputs");
  return {li, ro};
}

namespace {

Bibundle eval_rec(const DiagramAST& a, const DiagramEnv& env) {
  using K = DiagramNode::Kind;
  switch (a->kind) {
    case K::Gen:
      return env.generator(a->name);
    case K::Tensor:
      return tensor(eval_rec(a->lhs, env), eval_rec(a->rhs, env));
    case K::Seq:
      return compose(eval_rec(a->lhs, env), eval_rec(a->rhs, env)).bundle;
  }
  throw StructuralError("bad diagram node");
}

}  // namespace

Bibundle evaluate(const DiagramAST& ast, const DiagramEnv& env) {
  typecheck(ast, env);
  Bibundle B = eval_rec(ast, env);
  B.provenance = print_diagram(ast);
  return B;
}

Bibundle evaluate(const std::string& text, const DiagramEnv& env) {
  return evaluate(parse_diagram(text), env);
}

std::optional<IsoWitness> check_identity(const std::string& lhs, const std::string& rhs,
                                         const DiagramEnv& env) {
  auto a = parse_diagram(lhs);
  auto b = parse_diagram(rhs);
  auto ta = typecheck(a, env);
  auto tb = typecheck(b, env);
  if (ta != tb)
    throw DiagramError(b->line, b->col,
                       "sides have different arities: " + std::to_string(ta.first) + "->" +
                           std::to_string(ta.second) + " vs " + std::to_string(tb.first) + "->" +
                           std::to_string(tb.second));
  return find_iso(evaluate(a, env), evaluate(b, env));
}

}  // namespace bibu
