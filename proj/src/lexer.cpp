#include "layers/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <limits>

namespace layers {

namespace {

struct KeywordEntry {
    std::string_view lexeme;
    TokenKind kind;
};

// Sorted by lexeme for binary search. Uppercase sorts before lowercase in
// ASCII, hence the layer mnemonics come first.
constexpr std::array<KeywordEntry, 65> kKeywords{{
    {"C", TokenKind::KwC},
    {"CA", TokenKind::KwCA},
    {"CI", TokenKind::KwCI},
    {"F", TokenKind::KwF},
    {"FI", TokenKind::KwFI},
    {"FO", TokenKind::KwFO},
    {"MP", TokenKind::KwMP},
    {"act", TokenKind::KwAct},
    {"ascii", TokenKind::KwAscii},
    {"autoencoder", TokenKind::KwAutoencoder},
    {"balance", TokenKind::KwBalance},
    {"batch", TokenKind::KwBatch},
    {"binary", TokenKind::KwBinary},
    {"bn", TokenKind::KwBn},
    {"brightness", TokenKind::KwBrightness},
    {"cc", TokenKind::KwCc},
    {"center", TokenKind::KwCenter},
    {"classification", TokenKind::KwClassification},
    {"const", TokenKind::KwConst},
    {"contrast", TokenKind::KwContrast},
    {"cpad", TokenKind::KwCpad},
    {"cr", TokenKind::KwCr},
    {"data", TokenKind::KwData},
    {"div", TokenKind::KwDiv},
    {"drop", TokenKind::KwDrop},
    {"filename", TokenKind::KwFilename},
    {"flip", TokenKind::KwFlip},
    {"kc", TokenKind::KwKc},
    {"kr", TokenKind::KwKr},
    {"l1", TokenKind::KwL1},
    {"l2", TokenKind::KwL2},
    {"lambda", TokenKind::KwLambda},
    {"load", TokenKind::KwLoad},
    {"local", TokenKind::KwLocal},
    {"log", TokenKind::KwLog},
    {"maxn", TokenKind::KwMaxn},
    {"mmu", TokenKind::KwMmu},
    {"mu", TokenKind::KwMu},
    {"nc", TokenKind::KwNc},
    {"network", TokenKind::KwNetwork},
    {"nk", TokenKind::KwNk},
    {"noiseb", TokenKind::KwNoiseb},
    {"noiser", TokenKind::KwNoiser},
    {"noisesd", TokenKind::KwNoisesd},
    {"nr", TokenKind::KwNr},
    {"numnodes", TokenKind::KwNumnodes},
    {"nz", TokenKind::KwNz},
    {"printkernels", TokenKind::KwPrintkernels},
    {"regression", TokenKind::KwRegression},
    {"rpad", TokenKind::KwRpad},
    {"save", TokenKind::KwSave},
    {"script", TokenKind::KwScript},
    {"shift", TokenKind::KwShift},
    {"sizec", TokenKind::KwSizec},
    {"sizer", TokenKind::KwSizer},
    {"stride", TokenKind::KwStride},
    {"test", TokenKind::KwTest},
    {"testout", TokenKind::KwTestout},
    {"threads", TokenKind::KwThreads},
    {"tr", TokenKind::KwTr},
    {"train", TokenKind::KwTrain},
    {"ts", TokenKind::KwTs},
    {"va", TokenKind::KwVa},
    {"yuv", TokenKind::KwYuv},
    {"zscore", TokenKind::KwZscore},
}};

const char* kTokenNames[] = {
    "const", "batch", "threads", "log", "data", "filename", "ascii", "binary",
    "network", "tr", "ts", "va", "FI", "CI", "F", "FO", "C", "MP", "CA", "nz",
    "nr", "nc", "cr", "cc", "numnodes", "local", "classification", "regression",
    "autoencoder", "nk", "kr", "kc", "rpad", "cpad", "stride", "sizer", "sizec",
    "script", "mu", "mmu", "l2", "l1", "maxn", "drop", "noiser", "noisesd",
    "brightness", "contrast", "lambda", "noiseb", "bn", "act", "shift", "flip",
    "balance", "printkernels", "train", "load", "save", "testout", "zscore",
    "yuv", "center", "div", "test", "'{'", "'}'", "'['", "']'", "'('", "')'",
    "'.'", "','", "'='", "'->'", "identifier", "number", "file path",
    "end of input",
};

bool is_letter(char ch) {
    return ch == '_' || (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z');
}

bool is_digit(char ch) { return ch >= '0' && ch <= '9'; }

// "blank-class" characters: the ones that may not appear inside a file path
// and that separate word-like tokens.
bool is_blank(char ch) {
    return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r';
}

const char* lex_error_name(LexErrorKind k) {
    switch (k) {
    case LexErrorKind::UnexpectedChar: return "UnexpectedChar";
    case LexErrorKind::UnterminatedFile: return "UnterminatedFile";
    case LexErrorKind::MalformedNumber: return "MalformedNumber";
    }
    return "?";
}

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_trivia();
            if (at_end()) {
                out.push_back(make_eof());
                return out;
            }
            out.push_back(next_token());
        }
    }

  private:
    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;

    bool at_end() const { return pos_ >= src_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    SourceSpan here() const { return {line_, col_, pos_, 0}; }

    [[noreturn]] void fail(LexErrorKind kind, SourceSpan span, std::string msg) {
        if (span.length == 0) span.length = 1;
        throw CompileError(Diagnostic{
            "", span, std::string(lex_error_name(kind)) + ": " + std::move(msg)});
    }

    void skip_trivia() {
        for (;;) {
            if (at_end()) return;
            char ch = peek();
            if (is_blank(ch)) {
                advance();
                continue;
            }
            if (ch == '/' && peek(1) == '/') {
                while (!at_end() && peek() != '\n') {
                    if (peek() == '\0') {
                        fail(LexErrorKind::UnexpectedChar, here(),
                             "NUL byte in source");
                    }
                    advance();
                }
                continue;
            }
            return;
        }
    }

    Token make_eof() const {
        Token t;
        t.kind = TokenKind::Eof;
        t.lexeme = src_.substr(pos_, 0);
        t.span = {line_, col_, pos_, 0};
        return t;
    }

    Token finish(TokenKind kind, SourceSpan start) {
        Token t;
        t.kind = kind;
        t.span = start;
        t.span.length = pos_ - start.offset;
        t.lexeme = src_.substr(start.offset, t.span.length);
        return t;
    }

    Token next_token() {
        SourceSpan start = here();
        char ch = peek();

        if (ch == '\0') {
            fail(LexErrorKind::UnexpectedChar, start, "NUL byte in source");
        }
        if (is_letter(ch)) return lex_word(start);
        if (is_digit(ch)) return lex_number(start);
        if (ch == '"') return lex_nfile(start);

        switch (ch) {
        case '{': advance(); return finish(TokenKind::LBrace, start);
        case '}': advance(); return finish(TokenKind::RBrace, start);
        case '[': advance(); return finish(TokenKind::LBrack, start);
        case ']': advance(); return finish(TokenKind::RBrack, start);
        case '(': advance(); return finish(TokenKind::LParen, start);
        case ')': advance(); return finish(TokenKind::RParen, start);
        case '.': advance(); return finish(TokenKind::Dot, start);
        case ',': advance(); return finish(TokenKind::Comma, start);
        case '=': advance(); return finish(TokenKind::Eq, start);
        case '-':
            if (peek(1) == '>') {
                advance();
                advance();
                return finish(TokenKind::Arrow, start);
            }
            fail(LexErrorKind::UnexpectedChar, start, "'-' is not a token; did you mean '->'?");
        default:
            break;
        }
        std::string shown = std::isprint(static_cast<unsigned char>(ch))
                                ? std::string("'") + ch + "'"
                                : "byte " + std::to_string(static_cast<unsigned char>(ch));
        fail(LexErrorKind::UnexpectedChar, start, "unexpected character " + shown);
    }

    Token lex_word(SourceSpan start) {
        while (is_letter(peek()) || is_digit(peek())) advance();
        Token t = finish(TokenKind::Id, start);
        auto it = std::lower_bound(kKeywords.begin(), kKeywords.end(), t.lexeme,
                                   [](const KeywordEntry& e, std::string_view s) {
                                       return e.lexeme < s;
                                   });
        if (it != kKeywords.end() && it->lexeme == t.lexeme) t.kind = it->kind;
        return t;
    }

    Token lex_number(SourceSpan start) {
        while (is_digit(peek())) advance();
        std::size_t dot = std::string::npos;
        if (peek() == '.' && is_digit(peek(1))) {
            dot = pos_ - start.offset;
            advance();
            while (is_digit(peek())) advance();
        }
        // word characters may not run straight into a number
        if (is_letter(peek())) {
            SourceSpan bad = start;
            bad.length = pos_ + 1 - start.offset;
            fail(LexErrorKind::MalformedNumber, bad,
                 "letter directly after a numeric constant");
        }
        Token t = finish(TokenKind::Cte, start);
        if (dot == std::string::npos) {
            t.number.int_part = std::string(t.lexeme);
        } else {
            t.number.int_part = std::string(t.lexeme.substr(0, dot));
            t.number.frac_part = std::string(t.lexeme.substr(dot + 1));
        }
        return t;
    }

    Token lex_nfile(SourceSpan start) {
        advance(); // opening quote
        std::string value;
        for (;;) {
            if (at_end()) {
                SourceSpan span = start;
                span.length = pos_ - start.offset;
                fail(LexErrorKind::UnterminatedFile, span,
                     "file path not closed before end of input");
            }
            char ch = peek();
            if (ch == '\0') {
                fail(LexErrorKind::UnexpectedChar, here(), "NUL byte in source");
            }
            if (is_blank(ch)) {
                SourceSpan span = start;
                span.length = pos_ - start.offset;
                fail(LexErrorKind::UnterminatedFile, span,
                     "file path not closed before whitespace");
            }
            if (ch == '"') {
                advance();
                break;
            }
            value.push_back(ch);
            advance();
        }
        if (value.empty()) {
            SourceSpan span = start;
            span.length = pos_ - start.offset;
            fail(LexErrorKind::UnterminatedFile, span,
                 "file path must contain at least one character");
        }
        Token t = finish(TokenKind::NFile, start);
        t.path = std::move(value);
        return t;
    }
};

} // namespace

const char* token_kind_name(TokenKind k) {
    return kTokenNames[static_cast<int>(k)];
}

bool is_keyword(TokenKind k) {
    return static_cast<int>(k) <= static_cast<int>(TokenKind::KwTest);
}

bool Number::is_integer() const {
    return frac_part.find_first_not_of('0') == std::string::npos;
}

long long Number::as_int() const {
    if (!is_integer()) throw std::invalid_argument("not an integer: " + text());
    std::string_view digits = int_part;
    std::size_t first = digits.find_first_not_of('0');
    if (first == std::string_view::npos) return 0;
    digits = digits.substr(first);
    if (digits.size() > 18) throw std::out_of_range("integer too large: " + text());
    long long v = 0;
    for (char ch : digits) v = v * 10 + (ch - '0');
    return v;
}

double Number::as_double() const { return std::strtod(text().c_str(), nullptr); }

std::string Number::text() const {
    return frac_part.empty() ? int_part : int_part + "." + frac_part;
}

bool Number::operator==(const Number& other) const {
    auto strip = [](const Number& n) {
        std::string i = n.int_part;
        std::size_t f = i.find_first_not_of('0');
        i = (f == std::string::npos) ? "0" : i.substr(f);
        std::string d = n.frac_part;
        std::size_t l = d.find_last_not_of('0');
        d = (l == std::string::npos) ? "" : d.substr(0, l + 1);
        return std::pair(i, d);
    };
    return strip(*this) == strip(other);
}

Number make_number(long long v) {
    Number n;
    n.int_part = std::to_string(v);
    return n;
}

Number parse_number(std::string_view text) {
    Number n;
    std::size_t dot = text.find('.');
    std::string_view ip = dot == std::string_view::npos ? text : text.substr(0, dot);
    std::string_view fp = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (ip.empty() || ip.find_first_not_of("0123456789") != std::string_view::npos ||
        (dot != std::string_view::npos &&
         (fp.empty() || fp.find_first_not_of("0123456789") != std::string_view::npos))) {
        throw std::invalid_argument("bad numeric constant: " + std::string(text));
    }
    n.int_part = std::string(ip);
    n.frac_part = std::string(fp);
    return n;
}

std::string format_diagnostic(const std::string& file, const Diagnostic& d) {
    std::string out = file + ":" + std::to_string(d.span.line) + ":" +
                      std::to_string(d.span.col) + ": " +
                      (d.warning ? "warning" : "error");
    if (!d.code.empty()) out += " " + d.code;
    out += ": " + d.message;
    return out;
}

} // namespace layers
