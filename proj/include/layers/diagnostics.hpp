#pragma once

#include "layers/token.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace layers {

// One compiler message. `code` is "E001".."E010" or "W001" for the checks
// that have stable codes, empty for lexical/syntax/io messages.
struct Diagnostic {
    std::string code;
    SourceSpan span;
    std::string message;
    bool warning = false;
};

// "<file>:<line>:<col>: error E00N: <message>"
std::string format_diagnostic(const std::string& file, const Diagnostic& d);

// Thrown by the single-error phases (lexer, parser) and by IR reading.
class CompileError : public std::runtime_error {
  public:
    explicit CompileError(Diagnostic d)
        : std::runtime_error(d.message), diag_(std::move(d)) {}
    const Diagnostic& diagnostic() const { return diag_; }

  private:
    Diagnostic diag_;
};

// Engine/data failures at execution time (exit code 2 territory).
class RuntimeError : public std::runtime_error {
  public:
    explicit RuntimeError(std::string msg) : std::runtime_error(std::move(msg)) {}
};

} // namespace layers
