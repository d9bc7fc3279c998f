#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fobce/formula.hpp"

namespace fobce::tptp {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, std::size_t column, const std::string& message);

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string source_;
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

struct Statement {
  std::string name;
  std::string role;
  ClauseId id;
};

struct ProblemFile {
  Formula formula;
  /// One entry per cnf statement, in input order (includes expanded in place).
  std::vector<Statement> statements;
  /// Resolved paths of all include directives, in the order they were read.
  std::vector<std::filesystem::path> includes;

  const Statement* statement(ClauseId id) const;
  /// The statement name, or "c<id>" for clauses without one.
  std::string clause_name(ClauseId id) const;
};

/// Parses TPTP CNF text. Includes are looked up in include_dirs in order,
/// then relative to base_dir. Throws ParseError on syntax errors, non-CNF
/// statements, unresolved includes and symbols reused with another arity.
ProblemFile parse_problem(std::string_view text, const std::vector<std::filesystem::path>& include_dirs = {},
                          const std::string& source_name = "<input>", const std::filesystem::path& base_dir = {});

/// Reads and parses a file; a missing file is reported as std::runtime_error.
ProblemFile parse_file(const std::filesystem::path& path, const std::vector<std::filesystem::path>& include_dirs = {});

/// TPTP CNF text for the statements whose clauses are still in the formula,
/// preceded by a comment header. Clauses without a statement are printed
/// with generated names and role "axiom".
std::string print_problem(const ProblemFile& p);

/// Same problem with only the given formula's clauses kept.
ProblemFile with_formula(const ProblemFile& p, Formula f);

bool detect_equality(const ProblemFile& p);

/// Variables are named X, Y, Z, U, V, W, X1, Y1, ... in order of first
/// occurrence within the clause.
std::string format_clause(const SymbolTable& symbols, const Clause& c);
std::string format_literal(const SymbolTable& symbols, const Literal& l);
std::string format_literal(const SymbolTable& symbols, const Literal& l, std::map<VarId, std::string>& names);
std::string format_term(const SymbolTable& symbols, const Term& t, std::map<VarId, std::string>& names);

/// A symbol name as TPTP source: quoted unless it is a lower word, a number
/// or a distinct object.
std::string quote_name(const std::string& name);

}  // namespace fobce::tptp
