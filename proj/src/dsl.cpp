#include "rdfqa/dsl.hpp"

#include <map>

#include "rdfqa/eval.hpp"

namespace rdfqa::dsl {

std::string format_diagnostic(const Diagnostic& d) {
  std::string out = d.severity == Severity::Error ? "error: " : "warning: ";
  out += d.message;
  out += " (line " + std::to_string(d.span.line) + ", column " +
         std::to_string(d.span.column) + ")";
  return out;
}

namespace {

enum class TokKind {
  Ident,     // rule names and keywords
  Position,  // ?s ?p ?o
  String,    // "..." (metric files only)
  LParen,
  RParen,
  Comma,
  Plus,
  Minus,
  Star,
  Slash,
  AmpAmp,
  PipePipe,
  Bang,
  Intersect,  // ∩ (alias of AND)
  Union,      // ∪ (alias of OR)
  Assign,     // :=
  End,
};

struct Token {
  TokKind kind = TokKind::End;
  std::string text;
  Position pos = Position::Subject;  // Position tokens only
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  // Tokenizes the whole input; on a bad byte, records a diagnostic and stops.
  std::vector<Token> run(std::vector<Diagnostic>& diags) {
    std::vector<Token> tokens;
    while (true) {
      skip_trivia();
      if (at_end()) break;
      std::size_t start = pos_;
      std::size_t line = line_, col = col_;
      char c = peek();
      if (is_ident_start(c)) {
        while (!at_end() && is_ident_char(peek())) advance();
        tokens.push_back(make(TokKind::Ident, start, line, col));
        continue;
      }
      if (c == '?') {
        advance();
        if (!at_end() && (peek() == 's' || peek() == 'p' || peek() == 'o')) {
          char which = peek();
          advance();
          Token t = make(TokKind::Position, start, line, col);
          t.pos = which == 's' ? Position::Subject
                  : which == 'p' ? Position::Predicate
                                 : Position::Object;
          tokens.push_back(t);
          continue;
        }
        error(diags, start, line, col, "expected ?s, ?p or ?o");
        break;
      }
      if (c == '"') {
        advance();
        while (!at_end() && peek() != '"') advance();
        if (at_end()) {
          error(diags, start, line, col, "unterminated string");
          break;
        }
        advance();
        Token t = make(TokKind::String, start, line, col);
        t.text = t.text.substr(1, t.text.size() - 2);
        tokens.push_back(t);
        continue;
      }
      if (c == ':' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '=') {
        advance();
        advance();
        tokens.push_back(make(TokKind::Assign, start, line, col));
        continue;
      }
      if (c == '&' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '&') {
        advance();
        advance();
        tokens.push_back(make(TokKind::AmpAmp, start, line, col));
        continue;
      }
      if (c == '|' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '|') {
        advance();
        advance();
        tokens.push_back(make(TokKind::PipePipe, start, line, col));
        continue;
      }
      // UTF-8 set operators: ∩ = E2 88 A9, ∪ = E2 88 AA.
      if (static_cast<unsigned char>(c) == 0xE2 && pos_ + 2 < src_.size() &&
          static_cast<unsigned char>(src_[pos_ + 1]) == 0x88) {
        unsigned char third = static_cast<unsigned char>(src_[pos_ + 2]);
        if (third == 0xA9 || third == 0xAA) {
          advance();
          advance();
          advance();
          tokens.push_back(make(
              third == 0xA9 ? TokKind::Intersect : TokKind::Union, start,
              line, col));
          continue;
        }
      }
      TokKind kind;
      switch (c) {
        case '(': kind = TokKind::LParen; break;
        case ')': kind = TokKind::RParen; break;
        case ',': kind = TokKind::Comma; break;
        case '+': kind = TokKind::Plus; break;
        case '-': kind = TokKind::Minus; break;
        case '*': kind = TokKind::Star; break;
        case '/': kind = TokKind::Slash; break;
        case '!': kind = TokKind::Bang; break;
        default:
          error(diags, start, line, col,
                std::string("unexpected character '") + c + "'");
          return tokens;
      }
      advance();
      tokens.push_back(make(kind, start, line, col));
    }
    Token end;
    end.kind = TokKind::End;
    end.span = {pos_, pos_, line_, col_};
    tokens.push_back(end);
    return tokens;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  static bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  }
  static bool is_ident_char(char c) {
    return is_ident_start(c) || (c >= '0' && c <= '9');
  }

  Token make(TokKind kind, std::size_t start, std::size_t line,
             std::size_t col) {
    Token t;
    t.kind = kind;
    t.text = std::string(src_.substr(start, pos_ - start));
    t.span = {start, pos_, line, col};
    return t;
  }

  void error(std::vector<Diagnostic>& diags, std::size_t start,
             std::size_t line, std::size_t col, std::string message) {
    Diagnostic d;
    d.message = std::move(message);
    d.span = {start, pos_ == start ? start + 1 : pos_, line, col};
    diags.push_back(d);
  }
};

const std::map<std::string_view, RuleKind>& rule_table() {
  static const std::map<std::string_view, RuleKind> table = {
      {"isURI", RuleKind::IsUri},
      {"isIRI", RuleKind::IsIri},
      {"isInternal", RuleKind::IsInternal},
      {"isExternal", RuleKind::IsExternal},
      {"isLiteral", RuleKind::IsLiteral},
      {"isLabeled", RuleKind::IsLabeled},
      {"hasLicenceAssociated", RuleKind::HasLicenceAssociated},
      {"hasLicenceIndications", RuleKind::HasLicenceIndications},
      {"isLicenseStatement", RuleKind::IsLicenseStatement},
      {"hasType", RuleKind::HasType},
      {"resTooLong", RuleKind::ResTooLong},
      {"getDatatype", RuleKind::GetDatatype},
      {"lexicalFormCompatibleWithDatatype",
       RuleKind::LexicalFormCompatibleWithDatatype},
      {"isBroken", RuleKind::IsBroken},
      {"hasPredicateP", RuleKind::HasPredicateP},
  };
  return table;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<Diagnostic>& diags)
      : tokens_(std::move(tokens)), diags_(diags) {}

  MetricPtr parse_expression_only() {
    MetricPtr m = parse_metric();
    if (m && !check(TokKind::End)) {
      fail("unexpected trailing input after metric expression");
      return nullptr;
    }
    return m;
  }

  // metric <name> "<description>" := <expr>
  std::vector<NamedMetric> parse_file() {
    std::vector<NamedMetric> out;
    while (!check(TokKind::End)) {
      std::size_t start_tok = cursor_;
      if (!check_ident("metric")) {
        fail("expected 'metric' at start of stanza");
        break;
      }
      advance();
      if (!check(TokKind::Ident)) {
        fail("expected metric name");
        break;
      }
      NamedMetric nm;
      nm.name = current().text;
      advance();
      if (check(TokKind::String)) {
        nm.description = current().text;
        advance();
      }
      if (!check(TokKind::Assign)) {
        fail("expected ':=' after metric name");
        break;
      }
      advance();
      nm.expr = parse_metric();
      if (!nm.expr) break;
      nm.span.start = tokens_[start_tok].span.start;
      nm.span.end = previous_end();
      nm.span.line = tokens_[start_tok].span.line;
      nm.span.column = tokens_[start_tok].span.column;
      out.push_back(std::move(nm));
    }
    return out;
  }

 private:
  std::vector<Token> tokens_;
  std::vector<Diagnostic>& diags_;
  std::size_t cursor_ = 0;

  const Token& current() const { return tokens_[cursor_]; }
  bool check(TokKind k) const { return current().kind == k; }
  bool check_ident(std::string_view text) const {
    return check(TokKind::Ident) && current().text == text;
  }
  void advance() {
    if (cursor_ + 1 < tokens_.size()) ++cursor_;
  }
  std::size_t previous_end() const {
    return cursor_ > 0 ? tokens_[cursor_ - 1].span.end : 0;
  }

  std::nullptr_t fail(std::string message) {
    Diagnostic d;
    d.message = std::move(message);
    d.span = current().span;
    diags_.push_back(std::move(d));
    return nullptr;
  }

  bool expect(TokKind k, std::string_view what) {
    if (check(k)) {
      advance();
      return true;
    }
    fail(std::string("expected ") + std::string(what));
    return false;
  }

  // sum := product (('+'|'-') product)*
  MetricPtr parse_metric() {
    MetricPtr left = parse_product();
    if (!left) return nullptr;
    while (check(TokKind::Plus) || check(TokKind::Minus)) {
      ArithOp op = check(TokKind::Plus) ? ArithOp::Add : ArithOp::Sub;
      advance();
      MetricPtr right = parse_product();
      if (!right) return nullptr;
      left = MetricExpr::arith(op, std::move(left), std::move(right));
    }
    return left;
  }

  MetricPtr parse_product() {
    MetricPtr left = parse_unary();
    if (!left) return nullptr;
    while (check(TokKind::Star) || check(TokKind::Slash)) {
      ArithOp op = check(TokKind::Star) ? ArithOp::Mul : ArithOp::Div;
      advance();
      MetricPtr right = parse_unary();
      if (!right) return nullptr;
      left = MetricExpr::arith(op, std::move(left), std::move(right));
    }
    return left;
  }

  MetricPtr parse_unary() {
    if (check_ident("positive")) {
      advance();
      if (!expect(TokKind::LParen, "'(' after positive")) return nullptr;
      MetricPtr inner = parse_metric();
      if (!inner) return nullptr;
      if (!expect(TokKind::RParen, "')' to close positive(...)")) return nullptr;
      return MetricExpr::indicator_positive(std::move(inner));
    }
    if (check(TokKind::LParen)) {
      advance();
      MetricPtr inner = parse_metric();
      if (!inner) return nullptr;
      if (!expect(TokKind::RParen, "')'")) return nullptr;
      return inner;
    }
    if (check_ident("count")) return parse_count();
    fail("expected an action, 'positive(...)', or '('");
    return nullptr;
  }

  MetricPtr parse_count() {
    advance();  // count
    if (!expect(TokKind::LParen, "'(' after count")) return nullptr;
    if (check_ident("triples")) {
      advance();
      if (!expect(TokKind::RParen, "')' to close count(...)")) return nullptr;
      return MetricExpr::action_leaf(ActionExpr::count_all());
    }
    TransformationPtr t = parse_transformation();
    if (!t) return nullptr;
    if (!expect(TokKind::RParen, "')' to close count(...)")) return nullptr;
    return MetricExpr::action_leaf(ActionExpr::count(std::move(t)));
  }

  bool at_or_op() const {
    return check(TokKind::Union) || check_ident("OR");
  }
  bool at_and_op() const {
    return check(TokKind::Intersect) || check_ident("AND");
  }

  TransformationPtr parse_transformation() {
    TransformationPtr left = parse_trans_conj();
    if (!left) return nullptr;
    while (at_or_op()) {
      advance();
      TransformationPtr right = parse_trans_conj();
      if (!right) return nullptr;
      left = TransformationExpr::unite(std::move(left), std::move(right));
    }
    return left;
  }

  TransformationPtr parse_trans_conj() {
    TransformationPtr left = parse_trans_atom();
    if (!left) return nullptr;
    while (at_and_op()) {
      advance();
      TransformationPtr right = parse_trans_atom();
      if (!right) return nullptr;
      left = TransformationExpr::intersect(std::move(left), std::move(right));
    }
    return left;
  }

  TransformationPtr parse_trans_atom() {
    if (check(TokKind::LParen)) {
      advance();
      TransformationPtr inner = parse_transformation();
      if (!inner) return nullptr;
      if (!expect(TokKind::RParen, "')'")) return nullptr;
      return inner;
    }
    if (check(TokKind::Bang)) {
      advance();
      if (!check_ident("isBroken")) {
        fail("'!' is only valid before isBroken");
        return nullptr;
      }
      return parse_rule_application(true);
    }
    if (check_ident("distinct")) {
      // distinct(<filter>) selects and projects; distinct(<transformation>)
      // deduplicates whole statements. Try the filter reading first.
      std::size_t saved = cursor_;
      std::size_t saved_diags = diags_.size();
      advance();
      if (!expect(TokKind::LParen, "'(' after distinct")) return nullptr;
      FilterPtr f = try_parse_filter();
      if (f && check(TokKind::RParen)) {
        advance();
        return TransformationExpr::select_node(FilterExpr::distinct(std::move(f)));
      }
      cursor_ = saved;
      diags_.resize(saved_diags);
      advance();  // distinct
      advance();  // (
      TransformationPtr inner = parse_transformation();
      if (!inner) return nullptr;
      if (!expect(TokKind::RParen, "')' to close distinct(...)")) return nullptr;
      return TransformationExpr::distinct(std::move(inner));
    }
    if (check(TokKind::Ident)) return parse_rule_application(false);
    fail("expected a rule application, distinct(...), or '('");
    return nullptr;
  }

  TransformationPtr parse_rule_application(bool negated) {
    const Token& name_tok = current();
    auto it = rule_table().find(name_tok.text);
    if (it == rule_table().end()) {
      fail("unknown rule name '" + name_tok.text + "'");
      return nullptr;
    }
    RuleKind kind = it->second;
    advance();
    if (negated && kind != RuleKind::IsBroken) {
      fail("only isBroken may be negated");
      return nullptr;
    }
    if (kind == RuleKind::HasPredicateP) {
      // Bare keyword; the grammar gives it no argument convention.
      return TransformationExpr::rule_node(
          RuleExpr::make(RuleKind::HasPredicateP, nullptr));
    }
    if (kind == RuleKind::ResTooLong) {
      if (!expect(TokKind::LParen, "'(' after resTooLong")) return nullptr;
      const Position want[3] = {Position::Subject, Position::Predicate,
                                Position::Object};
      for (int i = 0; i < 3; ++i) {
        if (!check(TokKind::Position) || current().pos != want[i]) {
          fail("resTooLong requires the argument list (?s, ?p, ?o)");
          return nullptr;
        }
        advance();
        if (i < 2 && !expect(TokKind::Comma, "',' between resTooLong arguments"))
          return nullptr;
      }
      if (!expect(TokKind::RParen, "')' to close resTooLong(...)"))
        return nullptr;
      return TransformationExpr::rule_node(
          RuleExpr::make(RuleKind::ResTooLong, nullptr));
    }
    if (!expect(TokKind::LParen,
                "'(' after rule name (rules take one filter argument)"))
      return nullptr;
    FilterPtr f = parse_filter();
    if (!f) return nullptr;
    if (check(TokKind::Comma)) {
      fail("rule '" + name_tok.text + "' takes exactly one filter argument");
      return nullptr;
    }
    if (!expect(TokKind::RParen, "')' to close rule application"))
      return nullptr;
    return TransformationExpr::rule_node(
        RuleExpr::make(kind, std::move(f), negated));
  }

  // Filter parse that backs off silently (used for the distinct ambiguity).
  FilterPtr try_parse_filter() {
    std::size_t saved = cursor_;
    std::size_t saved_diags = diags_.size();
    FilterPtr f = parse_filter();
    if (!f) {
      cursor_ = saved;
      diags_.resize(saved_diags);
    }
    return f;
  }

  FilterPtr parse_filter() {
    FilterPtr left = parse_filter_conj();
    if (!left) return nullptr;
    while (check(TokKind::PipePipe)) {
      advance();
      FilterPtr right = parse_filter_conj();
      if (!right) return nullptr;
      left = FilterExpr::disj(std::move(left), std::move(right));
    }
    return left;
  }

  FilterPtr parse_filter_conj() {
    FilterPtr left = parse_filter_atom();
    if (!left) return nullptr;
    while (check(TokKind::AmpAmp)) {
      advance();
      FilterPtr right = parse_filter_atom();
      if (!right) return nullptr;
      left = FilterExpr::conj(std::move(left), std::move(right));
    }
    return left;
  }

  FilterPtr parse_filter_atom() {
    if (check(TokKind::Position)) {
      Position p = current().pos;
      advance();
      return FilterExpr::position(p);
    }
    if (check_ident("distinct")) {
      advance();
      if (!expect(TokKind::LParen, "'(' after distinct")) return nullptr;
      FilterPtr inner = parse_filter();
      if (!inner) return nullptr;
      if (!expect(TokKind::RParen, "')' to close distinct(...)"))
        return nullptr;
      return FilterExpr::distinct(std::move(inner));
    }
    if (check(TokKind::LParen)) {
      advance();
      FilterPtr inner = parse_filter();
      if (!inner) return nullptr;
      if (!expect(TokKind::RParen, "')'")) return nullptr;
      return inner;
    }
    fail("expected ?s, ?p, ?o, distinct(...), or '('");
    return nullptr;
  }
};

}  // namespace

ParseOutcome parse_metric_text(std::string_view src) {
  ParseOutcome out;
  Lexer lexer(src);
  std::vector<Token> tokens = lexer.run(out.diagnostics);
  if (!out.diagnostics.empty()) return out;
  Parser parser(std::move(tokens), out.diagnostics);
  MetricPtr m = parser.parse_expression_only();
  if (out.diagnostics.empty()) out.expr = std::move(m);
  return out;
}

FileOutcome parse_metric_file_text(std::string_view src) {
  FileOutcome out;
  Lexer lexer(src);
  std::vector<Token> tokens = lexer.run(out.diagnostics);
  if (!out.diagnostics.empty()) return out;
  Parser parser(std::move(tokens), out.diagnostics);
  out.metrics = parser.parse_file();
  return out;
}

std::vector<Diagnostic> validate(const MetricExpr& m,
                                 const EvaluationContext& ctx,
                                 SourceSpan span) {
  std::vector<Diagnostic> out;
  for (std::string& msg : validate_plan(m)) {
    Diagnostic d;
    d.message = std::move(msg);
    d.span = span;
    out.push_back(std::move(d));
  }
  for (std::string& msg : validate_config_requirements(m, ctx)) {
    Diagnostic d;
    d.message = std::move(msg);
    d.span = span;
    out.push_back(std::move(d));
  }
  return out;
}

// --- pretty printing ---------------------------------------------------------

namespace {

std::string_view position_token(Position p) {
  switch (p) {
    case Position::Subject: return "?s";
    case Position::Predicate: return "?p";
    case Position::Object: return "?o";
  }
  return "?s";
}

// Precedence: higher binds tighter. Or/|| = 1, And/&& = 2 on both levels;
// + - = 1, * / = 2 for arithmetic.
void print_filter(const FilterExpr& f, int parent_prec, std::string& out) {
  switch (f.kind) {
    case FilterExpr::Kind::Pos:
      out += position_token(f.pos);
      return;
    case FilterExpr::Kind::Distinct:
      out += "distinct(";
      print_filter(*f.left, 0, out);
      out += ')';
      return;
    case FilterExpr::Kind::Or:
    case FilterExpr::Kind::And: {
      int prec = f.kind == FilterExpr::Kind::And ? 2 : 1;
      bool parens = prec < parent_prec;
      if (parens) out += '(';
      print_filter(*f.left, prec, out);
      out += f.kind == FilterExpr::Kind::And ? " && " : " || ";
      print_filter(*f.right, prec + 1, out);
      if (parens) out += ')';
      return;
    }
  }
}

void print_rule(const RuleExpr& r, std::string& out) {
  if (r.negated) out += '!';
  out += rule_name(r.kind);
  if (r.kind == RuleKind::ResTooLong) {
    out += "(?s, ?p, ?o)";
    return;
  }
  if (r.kind == RuleKind::HasPredicateP) return;
  out += '(';
  print_filter(*r.filter, 0, out);
  out += ')';
}

void print_transformation(const TransformationExpr& t, int parent_prec,
                          std::string& out) {
  switch (t.kind) {
    case TransformationExpr::Kind::Rule:
      if (t.rule) {
        print_rule(*t.rule, out);
      } else {
        print_filter(*t.filter, 0, out);
      }
      return;
    case TransformationExpr::Kind::Distinct:
      out += "distinct(";
      print_transformation(*t.left, 0, out);
      out += ')';
      return;
    case TransformationExpr::Kind::Union:
    case TransformationExpr::Kind::Intersect: {
      int prec = t.kind == TransformationExpr::Kind::Intersect ? 2 : 1;
      bool parens = prec < parent_prec;
      if (parens) out += '(';
      print_transformation(*t.left, prec, out);
      out += t.kind == TransformationExpr::Kind::Intersect ? " AND " : " OR ";
      print_transformation(*t.right, prec + 1, out);
      if (parens) out += ')';
      return;
    }
  }
}

int arith_prec(ArithOp op) {
  return op == ArithOp::Add || op == ArithOp::Sub ? 1 : 2;
}

void print_metric(const MetricExpr& m, int parent_prec, std::string& out) {
  switch (m.kind) {
    case MetricExpr::Kind::Action:
      if (m.action->kind == ActionExpr::Kind::CountAllTriples) {
        out += "count(triples)";
      } else {
        out += "count(";
        print_transformation(*m.action->transformation, 0, out);
        out += ')';
      }
      return;
    case MetricExpr::Kind::IndicatorPositive:
      out += "positive(";
      print_metric(*m.left, 0, out);
      out += ')';
      return;
    case MetricExpr::Kind::Arith: {
      int prec = arith_prec(m.op);
      bool parens = prec < parent_prec;
      if (parens) out += '(';
      print_metric(*m.left, prec, out);
      out += ' ';
      out += static_cast<char>(m.op);
      out += ' ';
      print_metric(*m.right, prec + 1, out);
      if (parens) out += ')';
      return;
    }
  }
}

}  // namespace

std::string pretty_print(const MetricExpr& m) {
  std::string out;
  print_metric(m, 0, out);
  return out;
}

}  // namespace rdfqa::dsl
