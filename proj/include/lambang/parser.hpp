#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lambang/monad.hpp"
#include "lambang/term.hpp"
#include "lambang/type.hpp"

namespace lambang {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " at " + std::to_string(line_) + ":" +
                           std::to_string(col_)),
        line(line_), col(col_) {}
};

// One `def name : type = term` item, in file order.
struct Def {
  std::string name;
  TypePtr type;
  TermPtr body;       // raw, possibly referencing earlier defs
  bool body_is_value;
};

TypePtr parse_type(const std::string& src);
// Standalone term fragments (used by tests and diagnostics). Op symbols are
// validated against the monad's signature.
TermPtr parse_value_str(const std::string& src, Monad m,
                        const std::string& alphabet = "abcdefghijklmnopqrstuvwxyz");
TermPtr parse_comp_str(const std::string& src, Monad m,
                       const std::string& alphabet = "abcdefghijklmnopqrstuvwxyz");

std::vector<Def> parse_defs(const std::string& src, Monad m,
                            const std::string& alphabet = "abcdefghijklmnopqrstuvwxyz");

}  // namespace lambang
