#ifndef TBA_FORMULA_HPP_
#define TBA_FORMULA_HPP_

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

// Object-language AST. Connective semantics are fixed by a model's primitive
// closure operator at evaluation time (see eval.hpp); here only the syntax
// lives: nodes, a recursive-descent parser and a pretty-printer that
// round-trips through it.

namespace tba {

enum class FormulaKind {
  Var, Top, Bot,
  CNot,                    // classical complement  -
  And, Or, Impl, Iff,
  Diff, SymDiff,           // programmatic only; printed desugared
  NegC, NegI, NegIC, NegCI,
  Cons, Det, Undet,
  Box, Dia,                // interior / closure modalities
  OpCl, OpInt, OpExt, OpBdr, OpFrt,
  ForallProp, ExistsProp,  // propositional quantifiers (forall / exists)
  ForallInd, ExistsInd,    // individual quantifiers (Forall / Exists)
  PredApp,                 // P(x)
};

enum class QuantFilterKind { None, Open, Closed, NamedDomain, NamedDelta };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  FormulaKind kind;
  std::string name;         // Var: variable; quantifiers: bound variable;
                            // PredApp: predicate name
  std::string arg_name;     // PredApp: individual variable
  QuantFilterKind filter = QuantFilterKind::None;
  std::string filter_name;  // named domain or domain-function
  FormulaPtr lhs;
  FormulaPtr rhs;
};

FormulaPtr make_var(std::string name);
FormulaPtr make_const(bool top);
FormulaPtr make_unary(FormulaKind kind, FormulaPtr sub);
FormulaPtr make_binary(FormulaKind kind, FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr make_quant(FormulaKind kind, std::string var, FormulaPtr body,
                      QuantFilterKind filter = QuantFilterKind::None,
                      std::string filter_name = "");
FormulaPtr make_pred_app(std::string pred, std::string var);

enum class ConsequenceMode { Local, Global };

// Empty premises read as top, empty conclusions as bottom (comma is
// conjunctive on the left, disjunctive on the right).
struct Sequent {
  std::vector<FormulaPtr> premises;
  std::vector<FormulaPtr> conclusions;
  ConsequenceMode mode = ConsequenceMode::Local;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) +
                           ")"),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

FormulaPtr parse_formula(std::string_view text);
Sequent parse_sequent(std::string_view text);
// A sequent if the text contains a turnstile, otherwise a formula.
std::variant<FormulaPtr, Sequent> parse(std::string_view text);

std::string to_string(const FormulaPtr& f);
std::string to_string(const Sequent& s);

// Free propositional variables (quantifier-bound ones excluded).
std::set<std::string> free_variables(const FormulaPtr& f);
std::set<std::string> free_variables(const Sequent& s);

}  // namespace tba

#endif  // TBA_FORMULA_HPP_
