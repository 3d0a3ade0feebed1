#pragma once

#include "layers/ast.hpp"
#include "layers/diagnostics.hpp"
#include "layers/token.hpp"

#include <string>
#include <vector>

namespace layers {

// Recursive-descent recognizer for the experiment grammar. Expects a stream
// produced by tokenize() (ending in Eof). Throws CompileError at the first
// syntax error.
ast::Experiment parse(const std::vector<Token>& tokens);

// Convenience: tokenize + parse.
ast::Experiment parse_source(std::string_view source);

// Canonical, re-parseable rendering of an experiment (the `fmt` output and
// the golden-test format; see docs/ast-dump.md).
std::string dump_ast(const ast::Experiment& exp);

} // namespace layers
