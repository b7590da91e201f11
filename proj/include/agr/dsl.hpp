#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "agr/program.hpp"

namespace agr {

struct ParseError : std::runtime_error {
  ParseError(const std::string& source, size_t line, size_t col, const std::string& msg);
  size_t line, col;
};

struct ValidationError : std::runtime_error {
  ValidationError(const std::string& source, size_t line, const std::string& msg);
  size_t line;
};

struct ParsedProgram {
  Program program;
  bool is_property = false;
};

// Text format, one declaration or edge per line:
//   program NAME | property NAME
//   vars x, y            channels g, h
//   states q0, q1        init q0        accept q0, q3
//   letter ACTION        q0 -> q1 : ACTION      (ACTION may be * in a property)
// Actions: g?x  g!x  (g!x, g?y)  x := 2*x + 1  [x < 2^63 && y != 0]
std::vector<ParsedProgram> parse_dsl(const std::string& text, const std::string& source = "<input>");
ParsedProgram parse_single(const std::string& text, const std::string& source = "<input>");
ParsedProgram load_program_file(const std::string& path);

Action parse_action(const std::string& text);
Formula parse_formula(const std::string& text);
LinExpr parse_linexpr(const std::string& text);
// One action per non-empty line; '//' starts a comment.
Trace parse_trace(const std::string& text, const std::string& source = "<input>");
Trace load_trace_file(const std::string& path);

std::string print_program(const Program& p, bool is_property = false);
std::string read_file(const std::string& path);

}  // namespace agr
