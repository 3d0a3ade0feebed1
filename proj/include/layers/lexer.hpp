#pragma once

#include "layers/diagnostics.hpp"
#include "layers/token.hpp"

#include <string_view>
#include <vector>

namespace layers {

enum class LexErrorKind { UnexpectedChar, UnterminatedFile, MalformedNumber };

// Tokenize the whole buffer. Comments (`//` to end of line) and whitespace
// produce no tokens; the returned stream always ends with an Eof token.
// Stops at the first lexical error and throws CompileError; the thrown
// diagnostic message starts with the LexErrorKind name.
//
// The tokens' lexemes are views into `source`; the caller keeps the buffer
// alive for as long as the tokens are used.
std::vector<Token> tokenize(std::string_view source);

} // namespace layers
