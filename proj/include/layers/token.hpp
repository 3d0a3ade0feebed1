#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace layers {

// Half-open byte range plus 1-based line/column of its first byte.
struct SourceSpan {
    int line = 1;
    int col = 1;
    std::size_t offset = 0;
    std::size_t length = 0;
};

enum class TokenKind {
    // keywords
    KwConst,
    KwBatch,
    KwThreads,
    KwLog,
    KwData,
    KwFilename,
    KwAscii,
    KwBinary,
    KwNetwork,
    KwTr,
    KwTs,
    KwVa,
    KwFI,
    KwCI,
    KwF,
    KwFO,
    KwC,
    KwMP,
    KwCA,
    KwNz,
    KwNr,
    KwNc,
    KwCr,
    KwCc,
    KwNumnodes,
    KwLocal,
    KwClassification,
    KwRegression,
    KwAutoencoder,
    KwNk,
    KwKr,
    KwKc,
    KwRpad,
    KwCpad,
    KwStride,
    KwSizer,
    KwSizec,
    KwScript,
    KwMu,
    KwMmu,
    KwL2,
    KwL1,
    KwMaxn,
    KwDrop,
    KwNoiser,
    KwNoisesd,
    KwBrightness,
    KwContrast,
    KwLambda,
    KwNoiseb,
    KwBn,
    KwAct,
    KwShift,
    KwFlip,
    KwBalance,
    KwPrintkernels,
    KwTrain,
    KwLoad,
    KwSave,
    KwTestout,
    KwZscore,
    KwYuv,
    KwCenter,
    KwDiv,
    KwTest, // reserved: the command syntax needs it even though it is not a
            // declaration keyword
    // punctuation
    LBrace,
    RBrace,
    LBrack,
    RBrack,
    LParen,
    RParen,
    Dot,
    Comma,
    Eq,
    Arrow,
    // valued tokens
    Id,
    Cte,
    NFile,
    Eof,
};

const char* token_kind_name(TokenKind k);
bool is_keyword(TokenKind k);

// Unsigned decimal literal kept as the written digit strings, so integer
// contexts can reject fractional values without float round-off.
struct Number {
    std::string int_part;  // at least one digit
    std::string frac_part; // digits after the dot, empty when absent

    bool is_integer() const;  // frac_part empty or all zeros
    long long as_int() const; // requires is_integer(); throws on overflow
    double as_double() const;
    std::string text() const; // as written: "12" or "12.50"

    // numeric equality: "1.0" == "1", "007" == "7"
    bool operator==(const Number& other) const;
    bool operator!=(const Number& other) const { return !(*this == other); }
};

Number make_number(long long v);
Number parse_number(std::string_view text); // throws std::invalid_argument

struct Token {
    TokenKind kind = TokenKind::Eof;
    std::string_view lexeme; // slice of the source buffer
    SourceSpan span;
    Number number;    // kind == Cte
    std::string path; // kind == NFile: the content between the quotes
};

} // namespace layers
