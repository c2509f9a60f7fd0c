#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "bibucalc/calculus.hpp"

namespace bibu {

/// Syntax or arity error in a diagram expression, located at line:col.
class DiagramError : public StructuralError {
 public:
  DiagramError(int line, int col, const std::string& msg)
      : StructuralError(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_, col_;
};

struct DiagramNode;
using DiagramAST = std::shared_ptr<const DiagramNode>;

/// expr := term (';' term)*, term := factor ('*' factor)*,
/// factor := NAME | '(' expr ')'. ';' stacks top to bottom, '*' juxtaposes.
struct DiagramNode {
  enum class Kind { Gen, Tensor, Seq };
  Kind kind = Kind::Gen;
  std::string name;
  DiagramAST lhs, rhs;
  int line = 1, col = 1;
};

DiagramAST parse_diagram(const std::string& text);
/// Prints with the fewest parentheses that parse back to the same tree.
std::string print_diagram(const DiagramAST& ast);
/// Structural equality, ignoring source positions.
bool same_diagram(const DiagramAST& a, const DiagramAST& b);

/// Generators over one base groupoid G plus named bindings. Built-ins:
/// id 1->1, tau 2->2, delta 1->2, eps 1->0, ev 2->0, cv 0->2, one 0->0.
/// mu 2->1, e 0->1 and inv 1->1 are ordinary bindings.
class DiagramEnv {
 public:
  explicit DiagramEnv(GroupoidPtr G);

  const GroupoidPtr& base() const { return G_; }
  /// Throws unless M lives over G^in and G^out.
  void bind(const std::string& name, Bibundle M, int in, int out);
  /// Smallest arities whose powers of G match M's groupoids.
  void bind(const std::string& name, Bibundle M);
  bool has(const std::string& name) const { return gens_.count(name) != 0; }
  std::pair<int, int> arity(const std::string& name) const;
  const Bibundle& generator(const std::string& name) const;

 private:
  struct Gen {
    Bibundle bundle;
    int in, out;
  };
  GroupoidPtr G_;
  std::map<std::string, Gen> gens_;
};

std::pair<int, int> typecheck(const DiagramAST& ast, const DiagramEnv& env);
Bibundle evaluate(const DiagramAST& ast, const DiagramEnv& env);
Bibundle evaluate(const std::string& text, const DiagramEnv& env);

std::optional<IsoWitness> check_identity(const std::string& lhs, const std::string& rhs,
                                         const DiagramEnv& env);

}  // namespace bibu
