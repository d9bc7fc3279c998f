#include "fobce/tptp.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace fobce::tptp {

namespace fs = std::filesystem;

ParseError::ParseError(const std::string& source, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      source_(source),
      line_(line),
      column_(column),
      message_(message) {}

const Statement* ProblemFile::statement(ClauseId id) const {
  for (const auto& s : statements)
    if (s.id == id) return &s;
  return nullptr;
}

std::string ProblemFile::clause_name(ClauseId id) const {
  if (const auto* s = statement(id)) return s->name;
  return "c" + std::to_string(id);
}

namespace {

enum class Tok { LowerWord, UpperWord, DollarWord, Quoted, Distinct, Number, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, column;
};

class Lexer {
 public:
  Lexer(std::string_view text, std::string source) : text_(text), source_(std::move(source)) {}

  Token next() {
    skip_space();
    Token t{Tok::End, {}, line_, col_};
    if (pos_ >= text_.size()) return t;
    char c = text_[pos_];
    auto word_char = [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; };
    if (std::islower(static_cast<unsigned char>(c)) || std::isupper(static_cast<unsigned char>(c))) {
      t.kind = std::isupper(static_cast<unsigned char>(c)) ? Tok::UpperWord : Tok::LowerWord;
      while (pos_ < text_.size() && word_char(text_[pos_])) t.text += advance();
    } else if (c == '$') {
      t.kind = Tok::DollarWord;
      t.text += advance();
      if (pos_ < text_.size() && text_[pos_] == '$') t.text += advance();
      while (pos_ < text_.size() && word_char(text_[pos_])) t.text += advance();
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               ((c == '-' || c == '+') && pos_ + 1 < text_.size() &&
                std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      t.kind = Tok::Number;
      t.text += advance();
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
                                     text_[pos_] == '/' || text_[pos_] == '_'))
        t.text += advance();
    } else if (c == '\'' || c == '"') {
      t.kind = c == '\'' ? Tok::Quoted : Tok::Distinct;
      advance();
      std::string body;
      while (true) {
        if (pos_ >= text_.size()) throw ParseError(source_, t.line, t.column, "unterminated quoted name");
        char ch = advance();
        if (ch == c) break;
        if (ch == '\\') {
          if (pos_ >= text_.size()) throw ParseError(source_, t.line, t.column, "unterminated quoted name");
          ch = advance();
        }
        body += ch;
      }
      t.text = t.kind == Tok::Distinct ? "\"" + body + "\"" : body;
    } else if (c == '!' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
      t.kind = Tok::Punct;
      t.text = "!=";
      advance();
      advance();
    } else if (std::string_view("(),.|~=[]&!?:<>").find(c) != std::string_view::npos) {
      t.kind = Tok::Punct;
      t.text += advance();
    } else {
      throw ParseError(source_, line_, col_, std::string("unexpected character '") + c + "'");
    }
    return t;
  }

  const std::string& source() const { return source_; }

 private:
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
        std::size_t l = line_, co = col_;
        advance();
        advance();
        while (pos_ + 1 < text_.size() && !(text_[pos_] == '*' && text_[pos_ + 1] == '/')) advance();
        if (pos_ + 1 >= text_.size()) throw ParseError(source_, l, co, "unterminated block comment");
        advance();
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::string source_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

struct RawTerm {
  std::string name;
  Tok kind;
  std::vector<RawTerm> args;
  std::size_t line, column;
};

struct RawLiteral {
  bool positive;
  bool equality;
  RawTerm lhs;  // the atom when not an equality
  RawTerm rhs;
};

class Parser {
 public:
  Parser(ProblemFile& out, const std::vector<fs::path>& include_dirs, std::vector<fs::path>& stack)
      : out_(out), include_dirs_(include_dirs), stack_(stack) {}

  void parse(std::string_view text, const std::string& source, const fs::path& base_dir,
             const std::set<std::string>* selection) {
    Lexer lex(text, source);
    lex_ = &lex;
    base_dir_ = base_dir;
    selection_ = selection;
    shift();
    while (cur_.kind != Tok::End) statement();
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(lex_->source(), t.line, t.column, msg);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(cur_, msg); }

  void shift() { cur_ = lex_->next(); }

  bool at(std::string_view punct) const { return cur_.kind == Tok::Punct && cur_.text == punct; }

  void expect(std::string_view punct) {
    if (!at(punct)) fail("expected '" + std::string(punct) + "'" + found());
    shift();
  }

  std::string found() const {
    if (cur_.kind == Tok::End) return " but reached end of input";
    return " but found '" + cur_.text + "'";
  }

  void statement() {
    if (cur_.kind != Tok::LowerWord) fail("expected a cnf or include statement" + found());
    Token head = cur_;
    if (head.text == "include") {
      shift();
      include(head);
      return;
    }
    if (head.text == "fof" || head.text == "tff" || head.text == "thf" || head.text == "tcf" ||
        head.text == "tpi")
      fail(head, "only CNF input is supported; '" + head.text + "' statements need a clausifier");
    if (head.text != "cnf") fail(head, "unknown statement '" + head.text + "'");
    shift();
    expect("(");
    std::string name = statement_name();
    expect(",");
    if (cur_.kind != Tok::LowerWord) fail("expected a role" + found());
    std::string role = cur_.text;
    shift();
    expect(",");
    Token formula_start = cur_;
    std::vector<RawLiteral> lits;
    disjunction(lits);
    if (at(",")) skip_annotations();
    expect(")");
    expect(".");
    if (selection_ && !selection_->count(name)) return;
    add_clause(name, role, lits, formula_start);
  }

  std::string statement_name() {
    if (cur_.kind != Tok::LowerWord && cur_.kind != Tok::Quoted && cur_.kind != Tok::Number &&
        cur_.kind != Tok::UpperWord)
      fail("expected a statement name" + found());
    std::string name = cur_.text;
    shift();
    return name;
  }

  // Annotations are read and dropped; only their bracket structure matters.
  void skip_annotations() {
    int depth = 0;
    while (true) {
      if (cur_.kind == Tok::End) fail("unterminated annotation");
      if (depth == 0 && at(")")) return;
      if (at("(") || at("[")) ++depth;
      if (at(")") || at("]")) --depth;
      shift();
    }
  }

  void disjunction(std::vector<RawLiteral>& out) {
    literal(out);
    while (at("|")) {
      shift();
      literal(out);
    }
    if (at("&")) fail("conjunction is not allowed in a CNF clause");
  }

  void literal(std::vector<RawLiteral>& out) {
    if (at("(")) {
      shift();
      disjunction(out);
      expect(")");
      return;
    }
    bool positive = true;
    if (at("~")) {
      positive = false;
      shift();
      if (at("(")) {
        Token t = cur_;
        shift();
        std::vector<RawLiteral> inner;
        disjunction(inner);
        expect(")");
        if (inner.size() != 1) fail(t, "negation of a disjunction is not a CNF literal");
        inner[0].positive = !inner[0].positive;
        out.push_back(std::move(inner[0]));
        return;
      }
    }
    RawTerm lhs = term();
    if (at("=") || at("!=")) {
      bool eq = at("=");
      shift();
      RawTerm rhs = term();
      out.push_back({positive == eq, true, std::move(lhs), std::move(rhs)});
      return;
    }
    out.push_back({positive, false, std::move(lhs), {}});
  }

  RawTerm term() {
    RawTerm t{cur_.text, cur_.kind, {}, cur_.line, cur_.column};
    switch (cur_.kind) {
      case Tok::LowerWord:
      case Tok::UpperWord:
      case Tok::DollarWord:
      case Tok::Quoted:
      case Tok::Distinct:
      case Tok::Number:
        break;
      default:
        fail("expected a term" + found());
    }
    shift();
    if (at("(")) {
      if (t.kind == Tok::UpperWord) fail("variable applied to arguments");
      shift();
      t.args.push_back(term());
      while (at(",")) {
        shift();
        t.args.push_back(term());
      }
      expect(")");
    }
    return t;
  }

  void include(const Token& head) {
    expect("(");
    if (cur_.kind != Tok::Quoted) fail("expected a quoted file name" + found());
    Token file = cur_;
    shift();
    std::set<std::string> names;
    bool selective = false;
    if (at(",")) {
      shift();
      expect("[");
      selective = true;
      if (!at("]")) {
        names.insert(statement_name());
        while (at(",")) {
          shift();
          names.insert(statement_name());
        }
      }
      expect("]");
    }
    expect(")");
    expect(".");

    fs::path found_path;
    for (const auto& dir : include_dirs_)
      if (fs::exists(dir / file.text)) {
        found_path = dir / file.text;
        break;
      }
    if (found_path.empty() && fs::exists(base_dir_ / file.text)) found_path = base_dir_ / file.text;
    if (found_path.empty()) fail(file, "cannot resolve include '" + file.text + "'");
    found_path = fs::weakly_canonical(found_path);
    if (std::find(stack_.begin(), stack_.end(), found_path) != stack_.end())
      fail(head, "include cycle through '" + file.text + "'");

    std::ifstream in(found_path, std::ios::binary);
    if (!in) fail(file, "cannot read include '" + found_path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();

    out_.includes.push_back(found_path);
    stack_.push_back(found_path);
    Parser sub(out_, include_dirs_, stack_);
    // A selection in an enclosing include does not filter nested ones.
    sub.parse(text, found_path.string(), found_path.parent_path(), selective ? &names : nullptr);
    stack_.pop_back();
  }

  SymbolId intern(const RawTerm& t, SymbolKind kind) {
    try {
      return out_.formula.symbols().intern_checked(t.name, kind, static_cast<unsigned>(t.args.size()));
    } catch (const ArityError& e) {
      throw ParseError(lex_->source(), t.line, t.column, e.what());
    }
  }

  Term build_term(const RawTerm& t, std::unordered_map<std::string, VarId>& vars) {
    if (t.kind == Tok::UpperWord) {
      auto [it, inserted] = vars.emplace(t.name, static_cast<VarId>(vars.size()));
      return Term::var(it->second);
    }
    if (t.kind == Tok::DollarWord)
      throw ParseError(lex_->source(), t.line, t.column, "unsupported defined term '" + t.name + "'");
    std::vector<Term> args;
    for (const auto& a : t.args) args.push_back(build_term(a, vars));
    SymbolId f = intern(t, t.args.empty() ? SymbolKind::Constant : SymbolKind::Function);
    return Term::app(f, std::move(args));
  }

  void add_clause(const std::string& name, const std::string& role, const std::vector<RawLiteral>& raw,
                  const Token& at_token) {
    std::unordered_map<std::string, VarId> vars;
    std::vector<Literal> lits;
    for (const auto& r : raw) {
      if (r.equality) {
        lits.push_back(Literal::equality(r.positive, build_term(r.lhs, vars), build_term(r.rhs, vars)));
        continue;
      }
      const RawTerm& a = r.lhs;
      if (a.kind == Tok::DollarWord) {
        if (a.name == "$false" && a.args.empty()) {
          if (!r.positive) fail(at_token, "'~$false' is not supported in a clause");
          continue;
        }
        throw ParseError(lex_->source(), a.line, a.column, "unsupported defined predicate '" + a.name + "'");
      }
      if (a.kind == Tok::UpperWord)
        throw ParseError(lex_->source(), a.line, a.column, "variable '" + a.name + "' used as an atom");
      if (a.kind == Tok::Distinct || a.kind == Tok::Number)
        throw ParseError(lex_->source(), a.line, a.column, "'" + a.name + "' cannot be a predicate");
      std::vector<Term> args;
      for (const auto& t : a.args) args.push_back(build_term(t, vars));
      SymbolId p = intern(a, SymbolKind::Predicate);
      lits.emplace_back(r.positive, p, std::move(args));
    }
    ClauseId id;
    try {
      id = out_.formula.add(std::move(lits));
    } catch (const ArityError& e) {
      fail(at_token, e.what());
    }
    out_.statements.push_back({name, role, id});
  }

  ProblemFile& out_;
  const std::vector<fs::path>& include_dirs_;
  std::vector<fs::path>& stack_;
  Lexer* lex_ = nullptr;
  fs::path base_dir_;
  const std::set<std::string>* selection_ = nullptr;
  Token cur_{Tok::End, {}, 0, 0};
};

bool is_lower_word(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

bool is_number(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
}

std::string var_name(std::size_t k) {
  static const char* base[] = {"X", "Y", "Z", "U", "V", "W"};
  std::string s = base[k % 6];
  if (k >= 6) s += std::to_string(k / 6);
  return s;
}

}  // namespace

std::string quote_name(const std::string& name) {
  if (is_lower_word(name) || is_number(name) || (name.size() >= 2 && name.front() == '"' && name.back() == '"'))
    return name;
  std::string out = "'";
  for (char c : name) {
    if (c == '\'' || c == '\\') out += '\\';
    out += c;
  }
  return out + "'";
}

ProblemFile parse_problem(std::string_view text, const std::vector<fs::path>& include_dirs,
                          const std::string& source_name, const fs::path& base_dir) {
  ProblemFile out;
  std::vector<fs::path> stack;
  Parser p(out, include_dirs, stack);
  p.parse(text, source_name, base_dir, nullptr);
  return out;
}

ProblemFile parse_file(const fs::path& path, const std::vector<fs::path>& include_dirs) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  ProblemFile out;
  std::vector<fs::path> stack{fs::weakly_canonical(path)};
  Parser p(out, include_dirs, stack);
  p.parse(text, path.string(), path.parent_path(), nullptr);
  return out;
}

std::string format_term(const SymbolTable& symbols, const Term& t, std::map<VarId, std::string>& names) {
  if (t.is_var()) {
    auto it = names.find(t.var_id());
    if (it == names.end()) it = names.emplace(t.var_id(), var_name(names.size())).first;
    return it->second;
  }
  std::string out = quote_name(symbols.name(t.functor()));
  if (t.arity() == 0) return out;
  out += '(';
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i) out += ',';
    out += format_term(symbols, t.args()[i], names);
  }
  return out + ')';
}

std::string format_literal(const SymbolTable& symbols, const Literal& l, std::map<VarId, std::string>& names) {
  if (l.is_equality()) {
    std::string lhs = format_term(symbols, l.args()[0], names);
    std::string rhs = format_term(symbols, l.args()[1], names);
    return lhs + (l.positive() ? " = " : " != ") + rhs;
  }
  std::string out = l.positive() ? "" : "~";
  out += quote_name(symbols.name(l.predicate()));
  if (l.arity() == 0) return out;
  out += '(';
  for (std::size_t i = 0; i < l.arity(); ++i) {
    if (i) out += ',';
    out += format_term(symbols, l.args()[i], names);
  }
  return out + ')';
}

std::string format_literal(const SymbolTable& symbols, const Literal& l) {
  std::map<VarId, std::string> names;
  return format_literal(symbols, l, names);
}

std::string format_clause(const SymbolTable& symbols, const Clause& c) {
  if (c.empty()) return "$false";
  std::map<VarId, std::string> names;
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += " | ";
    out += format_literal(symbols, c[i], names);
  }
  return out + ")";
}

std::string print_problem(const ProblemFile& p) {
  std::ostringstream out;
  out << "% CNF problem: " << p.formula.size() << " clause" << (p.formula.size() == 1 ? "" : "s") << "\n";
  std::set<ClauseId> printed;
  for (const auto& s : p.statements) {
    const Clause* c = p.formula.find(s.id);
    if (!c || !printed.insert(s.id).second) continue;
    out << "cnf(" << quote_name(s.name) << ", " << s.role << ", " << format_clause(p.formula.symbols(), *c)
        << ").\n";
  }
  for (const auto& [id, c] : p.formula.clauses())
    if (!printed.count(id))
      out << "cnf(" << p.clause_name(id) << ", axiom, " << format_clause(p.formula.symbols(), c) << ").\n";
  return out.str();
}

ProblemFile with_formula(const ProblemFile& p, Formula f) {
  ProblemFile out{std::move(f), {}, p.includes};
  for (const auto& s : p.statements)
    if (out.formula.contains(s.id)) out.statements.push_back(s);
  return out;
}

bool detect_equality(const ProblemFile& p) { return p.formula.contains_equality(); }

}  // namespace fobce::tptp
