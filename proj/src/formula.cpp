#include "tba/formula.hpp"

#include <cctype>
#include <map>

namespace tba {

FormulaPtr make_var(std::string name) {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::Var;
  f->name = std::move(name);
  return f;
}

FormulaPtr make_const(bool top) {
  auto f = std::make_shared<Formula>();
  f->kind = top ? FormulaKind::Top : FormulaKind::Bot;
  return f;
}

FormulaPtr make_unary(FormulaKind kind, FormulaPtr sub) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->lhs = std::move(sub);
  return f;
}

FormulaPtr make_binary(FormulaKind kind, FormulaPtr lhs, FormulaPtr rhs) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->lhs = std::move(lhs);
  f->rhs = std::move(rhs);
  return f;
}

FormulaPtr make_quant(FormulaKind kind, std::string var, FormulaPtr body,
                      QuantFilterKind filter, std::string filter_name) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->name = std::move(var);
  f->filter = filter;
  f->filter_name = std::move(filter_name);
  f->lhs = std::move(body);
  return f;
}

FormulaPtr make_pred_app(std::string pred, std::string var) {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::PredApp;
  f->name = std::move(pred);
  f->arg_name = std::move(var);
  return f;
}

namespace {

// --- lexer -------------------------------------------------------------

enum class Tok {
  End, LParen, RParen, LBracket, RBracket, LBrace, RBrace,
  Dot, Comma, Minus, Amp, Pipe, Arrow, DArrow,
  TurnstileLocal, TurnstileGlobal,
  Ident,   // lowercase identifier (variable or reserved word)
  UIdent,  // identifier starting uppercase (T, F, Forall, Exists, predicates)
};

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token next() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {Tok::End, "", start};
      return;
    }
    char c = text_[pos_];
    auto single = [&](Tok k) {
      ++pos_;
      current_ = {k, std::string(1, c), start};
    };
    switch (c) {
      case '(': single(Tok::LParen); return;
      case ')': single(Tok::RParen); return;
      case '[': single(Tok::LBracket); return;
      case ']': single(Tok::RBracket); return;
      case '{': single(Tok::LBrace); return;
      case '}': single(Tok::RBrace); return;
      case '.': single(Tok::Dot); return;
      case ',': single(Tok::Comma); return;
      case '&': single(Tok::Amp); return;
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          pos_ += 2;
          current_ = {Tok::Arrow, "->", start};
          return;
        }
        single(Tok::Minus);
        return;
      case '<':
        if (pos_ + 2 < text_.size() && text_[pos_ + 1] == '-' &&
            text_[pos_ + 2] == '>') {
          pos_ += 3;
          current_ = {Tok::DArrow, "<->", start};
          return;
        }
        throw ParseError("unexpected '<'", start);
      case '|':
        // '|-' must be immediately adjacent; a spaced '-' after '|' reads as
        // disjunction with complement.
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-' &&
            !(pos_ + 2 < text_.size() && text_[pos_ + 2] == '>')) {
          pos_ += 2;
          if (pos_ < text_.size() && text_[pos_] == 'g' &&
              (pos_ + 1 >= text_.size() || !ident_char(text_[pos_ + 1]))) {
            ++pos_;
            current_ = {Tok::TurnstileGlobal, "|-g", start};
          } else {
            current_ = {Tok::TurnstileLocal, "|-", start};
          }
          return;
        }
        single(Tok::Pipe);
        return;
      default:
        break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t end = pos_;
      while (end < text_.size() && ident_char(text_[end])) ++end;
      std::string word(text_.substr(pos_, end - pos_));
      pos_ = end;
      bool upper = std::isupper(static_cast<unsigned char>(c));
      current_ = {upper ? Tok::UIdent : Tok::Ident, std::move(word), start};
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

  std::string_view text_;
  size_t pos_ = 0;
  Token current_{Tok::End, "", 0};
};

// --- parser ------------------------------------------------------------

const std::map<std::string, FormulaKind>& unary_keywords() {
  static const std::map<std::string, FormulaKind> kw = {
      {"negC", FormulaKind::NegC},   {"negI", FormulaKind::NegI},
      {"negIC", FormulaKind::NegIC}, {"negCI", FormulaKind::NegCI},
      {"cons", FormulaKind::Cons},   {"det", FormulaKind::Det},
      {"undet", FormulaKind::Undet}, {"box", FormulaKind::Box},
      {"dia", FormulaKind::Dia},     {"cl", FormulaKind::OpCl},
      {"int", FormulaKind::OpInt},   {"ext", FormulaKind::OpExt},
      {"bdr", FormulaKind::OpBdr},   {"frt", FormulaKind::OpFrt},
  };
  return kw;
}

bool is_reserved(const std::string& word) {
  return unary_keywords().count(word) || word == "forall" || word == "exists";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  FormulaPtr parse_formula_all() {
    FormulaPtr f = formula();
    expect_end();
    return f;
  }

  Sequent parse_sequent_all() {
    Sequent s = sequent();
    expect_end();
    return s;
  }

  std::variant<FormulaPtr, Sequent> parse_any() {
    std::vector<FormulaPtr> lhs = formula_list();
    const Token& t = lex_.peek();
    if (t.kind == Tok::TurnstileLocal || t.kind == Tok::TurnstileGlobal) {
      lex_.next();
      Sequent s;
      s.mode = (t.kind == Tok::TurnstileGlobal) ? ConsequenceMode::Global
                                                : ConsequenceMode::Local;
      s.premises = std::move(lhs);
      s.conclusions = formula_list();
      expect_end();
      return s;
    }
    if (lhs.size() != 1)
      throw ParseError("expected '|-' after premise list", t.pos);
    expect_end();
    return lhs.front();
  }

 private:
  void expect_end() {
    if (lex_.peek().kind != Tok::End)
      throw ParseError("trailing input after formula", lex_.peek().pos);
  }

  Sequent sequent() {
    Sequent s;
    s.premises = formula_list();
    const Token& t = lex_.peek();
    if (t.kind == Tok::TurnstileLocal)
      s.mode = ConsequenceMode::Local;
    else if (t.kind == Tok::TurnstileGlobal)
      s.mode = ConsequenceMode::Global;
    else
      throw ParseError("expected '|-' in sequent", t.pos);
    lex_.next();
    s.conclusions = formula_list();
    return s;
  }

  std::vector<FormulaPtr> formula_list() {
    std::vector<FormulaPtr> out;
    const Token& t = lex_.peek();
    if (t.kind == Tok::End || t.kind == Tok::TurnstileLocal ||
        t.kind == Tok::TurnstileGlobal)
      return out;  // empty side
    out.push_back(formula());
    while (lex_.peek().kind == Tok::Comma) {
      lex_.next();
      out.push_back(formula());
    }
    return out;
  }

  FormulaPtr formula() { return iff_level(); }

  FormulaPtr iff_level() {
    FormulaPtr lhs = impl_level();
    if (lex_.peek().kind == Tok::DArrow) {
      lex_.next();
      return make_binary(FormulaKind::Iff, std::move(lhs), iff_level());
    }
    return lhs;
  }

  FormulaPtr impl_level() {
    FormulaPtr lhs = or_level();
    if (lex_.peek().kind == Tok::Arrow) {
      lex_.next();
      return make_binary(FormulaKind::Impl, std::move(lhs), impl_level());
    }
    return lhs;
  }

  FormulaPtr or_level() {
    FormulaPtr lhs = and_level();
    while (lex_.peek().kind == Tok::Pipe) {
      lex_.next();
      lhs = make_binary(FormulaKind::Or, std::move(lhs), and_level());
    }
    return lhs;
  }

  FormulaPtr and_level() {
    FormulaPtr lhs = unary_level();
    while (lex_.peek().kind == Tok::Amp) {
      lex_.next();
      lhs = make_binary(FormulaKind::And, std::move(lhs), unary_level());
    }
    return lhs;
  }

  FormulaPtr unary_level() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Minus) {
      lex_.next();
      return make_unary(FormulaKind::CNot, unary_level());
    }
    if (t.kind == Tok::Ident) {
      auto it = unary_keywords().find(t.text);
      if (it != unary_keywords().end()) {
        FormulaKind kind = it->second;
        lex_.next();
        return make_unary(kind, unary_level());
      }
      if (t.text == "forall" || t.text == "exists")
        return quantifier(t.text == "forall" ? FormulaKind::ForallProp
                                             : FormulaKind::ExistsProp);
    }
    if (t.kind == Tok::UIdent && (t.text == "Forall" || t.text == "Exists"))
      return quantifier(t.text == "Forall" ? FormulaKind::ForallInd
                                           : FormulaKind::ExistsInd);
    return atom();
  }

  FormulaPtr quantifier(FormulaKind kind) {
    lex_.next();  // the quantifier word
    QuantFilterKind filter = QuantFilterKind::None;
    std::string filter_name;
    if (kind == FormulaKind::ForallProp || kind == FormulaKind::ExistsProp) {
      if (lex_.peek().kind == Tok::LBracket) {
        lex_.next();
        Token name = lex_.next();
        if (name.kind != Tok::Ident && name.kind != Tok::UIdent)
          throw ParseError("expected domain name in '[...]'", name.pos);
        if (name.text == "open") {
          filter = QuantFilterKind::Open;
        } else if (name.text == "closed") {
          filter = QuantFilterKind::Closed;
        } else {
          filter = QuantFilterKind::NamedDomain;
          filter_name = name.text;
        }
        if (lex_.peek().kind != Tok::RBracket)
          throw ParseError("expected ']'", lex_.peek().pos);
        lex_.next();
      } else if (lex_.peek().kind == Tok::LBrace) {
        lex_.next();
        Token name = lex_.next();
        if (name.kind != Tok::Ident && name.kind != Tok::UIdent)
          throw ParseError("expected domain-function name in '{...}'",
                           name.pos);
        filter = QuantFilterKind::NamedDelta;
        filter_name = name.text;
        if (lex_.peek().kind != Tok::RBrace)
          throw ParseError("expected '}'", lex_.peek().pos);
        lex_.next();
      }
    }
    Token var = lex_.next();
    if (var.kind != Tok::Ident || is_reserved(var.text))
      throw ParseError("expected bound variable after quantifier", var.pos);
    if (lex_.peek().kind != Tok::Dot)
      throw ParseError("expected '.' after bound variable", lex_.peek().pos);
    lex_.next();
    return make_quant(kind, var.text, formula(), filter,
                      std::move(filter_name));
  }

  FormulaPtr atom() {
    Token t = lex_.next();
    switch (t.kind) {
      case Tok::LParen: {
        FormulaPtr f = formula();
        if (lex_.peek().kind != Tok::RParen)
          throw ParseError("expected ')'", lex_.peek().pos);
        lex_.next();
        return f;
      }
      case Tok::UIdent: {
        if (t.text == "T") return make_const(true);
        if (t.text == "F") return make_const(false);
        // predicate application
        if (lex_.peek().kind != Tok::LParen)
          throw ParseError("expected '(' after predicate '" + t.text + "'",
                           lex_.peek().pos);
        lex_.next();
        Token arg = lex_.next();
        if (arg.kind != Tok::Ident || is_reserved(arg.text))
          throw ParseError("expected individual variable in application",
                           arg.pos);
        if (lex_.peek().kind != Tok::RParen)
          throw ParseError("expected ')'", lex_.peek().pos);
        lex_.next();
        return make_pred_app(t.text, arg.text);
      }
      case Tok::Ident:
        if (is_reserved(t.text))
          throw ParseError("reserved word '" + t.text + "' cannot be a variable",
                           t.pos);
        return make_var(t.text);
      default:
        throw ParseError("expected formula", t.pos);
    }
  }

  Lexer lex_;
};

// --- printer -----------------------------------------------------------

int precedence(FormulaKind k) {
  switch (k) {
    case FormulaKind::Iff: return 1;
    case FormulaKind::Impl: return 2;
    case FormulaKind::Or: return 3;
    case FormulaKind::And: return 4;
    case FormulaKind::Diff:
    case FormulaKind::SymDiff: return 3;  // printed via Or of Ands
    case FormulaKind::ForallProp:
    case FormulaKind::ExistsProp:
    case FormulaKind::ForallInd:
    case FormulaKind::ExistsInd: return 0;
    case FormulaKind::Var:
    case FormulaKind::Top:
    case FormulaKind::Bot:
    case FormulaKind::PredApp: return 6;
    default: return 5;  // unary
  }
}

void print(const FormulaPtr& f, int parent_prec, std::string& out) {
  int prec = precedence(f->kind);
  bool parens = prec < parent_prec;
  if (parens) out += "(";
  switch (f->kind) {
    case FormulaKind::Var: out += f->name; break;
    case FormulaKind::Top: out += "T"; break;
    case FormulaKind::Bot: out += "F"; break;
    case FormulaKind::PredApp:
      out += f->name;
      out += "(";
      out += f->arg_name;
      out += ")";
      break;
    case FormulaKind::CNot:
      out += "-";
      print(f->lhs, 5, out);
      break;
    case FormulaKind::NegC: case FormulaKind::NegI: case FormulaKind::NegIC:
    case FormulaKind::NegCI: case FormulaKind::Cons: case FormulaKind::Det:
    case FormulaKind::Undet: case FormulaKind::Box: case FormulaKind::Dia:
    case FormulaKind::OpCl: case FormulaKind::OpInt: case FormulaKind::OpExt:
    case FormulaKind::OpBdr: case FormulaKind::OpFrt: {
      for (const auto& [word, kind] : unary_keywords()) {
        if (kind == f->kind) {
          out += word;
          out += " ";
          break;
        }
      }
      print(f->lhs, 5, out);
      break;
    }
    case FormulaKind::And:
      print(f->lhs, 4, out);
      out += " & ";
      print(f->rhs, 5, out);
      break;
    case FormulaKind::Or:
      print(f->lhs, 3, out);
      out += " | ";
      print(f->rhs, 4, out);
      break;
    case FormulaKind::Impl:
      print(f->lhs, 3, out);
      out += " -> ";
      print(f->rhs, 2, out);
      break;
    case FormulaKind::Iff:
      print(f->lhs, 2, out);
      out += " <-> ";
      print(f->rhs, 1, out);
      break;
    // Diff and SymDiff have no surface syntax; print equivalent forms.
    case FormulaKind::Diff: {
      FormulaPtr desugared = make_binary(
          FormulaKind::And, f->lhs, make_unary(FormulaKind::CNot, f->rhs));
      print(desugared, parent_prec > 0 ? 5 : 0, out);
      break;
    }
    case FormulaKind::SymDiff: {
      FormulaPtr desugared = make_unary(
          FormulaKind::CNot, make_binary(FormulaKind::Iff, f->lhs, f->rhs));
      print(desugared, parent_prec > 0 ? 5 : 0, out);
      break;
    }
    case FormulaKind::ForallProp:
    case FormulaKind::ExistsProp: {
      out += (f->kind == FormulaKind::ForallProp) ? "forall" : "exists";
      switch (f->filter) {
        case QuantFilterKind::None: break;
        case QuantFilterKind::Open: out += "[open]"; break;
        case QuantFilterKind::Closed: out += "[closed]"; break;
        case QuantFilterKind::NamedDomain:
          out += "[" + f->filter_name + "]";
          break;
        case QuantFilterKind::NamedDelta:
          out += "{" + f->filter_name + "}";
          break;
      }
      out += " " + f->name + " . ";
      print(f->lhs, 0, out);
      break;
    }
    case FormulaKind::ForallInd:
    case FormulaKind::ExistsInd:
      out += (f->kind == FormulaKind::ForallInd) ? "Forall" : "Exists";
      out += " " + f->name + " . ";
      print(f->lhs, 0, out);
      break;
  }
  if (parens) out += ")";
}

void collect_free(const FormulaPtr& f, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  switch (f->kind) {
    case FormulaKind::Var:
      if (!bound.count(f->name)) out.insert(f->name);
      return;
    case FormulaKind::ForallProp:
    case FormulaKind::ExistsProp:
    case FormulaKind::ForallInd:
    case FormulaKind::ExistsInd: {
      bool was_bound = bound.count(f->name);
      bound.insert(f->name);
      collect_free(f->lhs, bound, out);
      if (!was_bound) bound.erase(f->name);
      return;
    }
    default:
      if (f->lhs) collect_free(f->lhs, bound, out);
      if (f->rhs) collect_free(f->rhs, bound, out);
      return;
  }
}

}  // namespace

FormulaPtr parse_formula(std::string_view text) {
  return Parser(text).parse_formula_all();
}

Sequent parse_sequent(std::string_view text) {
  return Parser(text).parse_sequent_all();
}

std::variant<FormulaPtr, Sequent> parse(std::string_view text) {
  return Parser(text).parse_any();
}

std::string to_string(const FormulaPtr& f) {
  std::string out;
  print(f, 0, out);
  return out;
}

std::string to_string(const Sequent& s) {
  std::string out;
  for (size_t i = 0; i < s.premises.size(); ++i) {
    if (i) out += ", ";
    out += to_string(s.premises[i]);
  }
  if (!s.premises.empty()) out += " ";
  out += (s.mode == ConsequenceMode::Global) ? "|-g" : "|-";
  for (size_t i = 0; i < s.conclusions.size(); ++i) {
    out += (i == 0) ? " " : ", ";
    out += to_string(s.conclusions[i]);
  }
  return out;
}

std::set<std::string> free_variables(const FormulaPtr& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

std::set<std::string> free_variables(const Sequent& s) {
  std::set<std::string> out;
  for (const auto& f : s.premises) {
    auto v = free_variables(f);
    out.insert(v.begin(), v.end());
  }
  for (const auto& f : s.conclusions) {
    auto v = free_variables(f);
    out.insert(v.begin(), v.end());
  }
  return out;
}

}  // namespace tba
