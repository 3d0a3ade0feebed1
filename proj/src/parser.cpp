#include "layers/parser.hpp"

#include "layers/lexer.hpp"

#include <initializer_list>
#include <sstream>

namespace layers {

namespace {

bool is_amend_param(TokenKind k) {
    switch (k) {
    case TokenKind::KwMu:
    case TokenKind::KwMmu:
    case TokenKind::KwL2:
    case TokenKind::KwL1:
    case TokenKind::KwMaxn:
    case TokenKind::KwDrop:
    case TokenKind::KwNoiser:
    case TokenKind::KwNoisesd:
    case TokenKind::KwNoiseb:
    case TokenKind::KwBrightness:
    case TokenKind::KwContrast:
    case TokenKind::KwLambda:
    case TokenKind::KwBn:
    case TokenKind::KwAct:
    case TokenKind::KwShift:
    case TokenKind::KwFlip:
    case TokenKind::KwBalance:
        return true;
    default:
        return false;
    }
}

bool is_layer_keyword(TokenKind k) {
    switch (k) {
    case TokenKind::KwFI:
    case TokenKind::KwCI:
    case TokenKind::KwF:
    case TokenKind::KwFO:
    case TokenKind::KwC:
    case TokenKind::KwMP:
    case TokenKind::KwCA:
        return true;
    default:
        return false;
    }
}

class Parser {
  public:
    explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

    ast::Experiment run() {
        ast::Experiment exp;
        if (at(TokenKind::KwConst)) exp.constants = parse_const_block();
        do {
            exp.definitions.push_back(parse_definition());
        } while (!at(TokenKind::Eof));
        return exp;
    }

  private:
    const std::vector<Token>& toks_;
    std::size_t pos_ = 0;

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    bool at(TokenKind k, std::size_t ahead = 0) const { return peek(ahead).kind == k; }

    const Token& advance() {
        const Token& t = peek();
        if (t.kind != TokenKind::Eof) ++pos_;
        return t;
    }

    [[noreturn]] void fail(const std::string& expected) {
        const Token& t = peek();
        std::ostringstream msg;
        msg << "expected " << expected << ", found " << token_kind_name(t.kind);
        if (t.kind == TokenKind::Id || t.kind == TokenKind::Cte)
            msg << " '" << t.lexeme << "'";
        throw CompileError(Diagnostic{"", t.span, msg.str()});
    }

    const Token& expect(TokenKind k, const char* what = nullptr) {
        if (!at(k)) fail(what ? what : token_kind_name(k));
        return advance();
    }

    std::string expect_id(const char* what, SourceSpan* span = nullptr) {
        if (!at(TokenKind::Id)) fail(what);
        const Token& t = advance();
        if (span) *span = t.span;
        return std::string(t.lexeme);
    }

    Number expect_cte(const char* what = "numeric constant") {
        if (!at(TokenKind::Cte)) fail(what);
        return advance().number;
    }

    std::string expect_nfile(const char* what = "file path") {
        if (!at(TokenKind::NFile)) fail(what);
        return advance().path;
    }

    // const { (batch = cte | threads = cte | log = nfile)+ }
    ast::ConstBlock parse_const_block() {
        ast::ConstBlock block;
        block.span = peek().span;
        expect(TokenKind::KwConst);
        expect(TokenKind::LBrace);
        do {
            ast::ConstEntry e;
            e.span = peek().span;
            switch (peek().kind) {
            case TokenKind::KwBatch:
                e.kind = ast::ConstEntry::Kind::Batch;
                advance();
                expect(TokenKind::Eq);
                e.value = expect_cte();
                break;
            case TokenKind::KwThreads:
                e.kind = ast::ConstEntry::Kind::Threads;
                advance();
                expect(TokenKind::Eq);
                e.value = expect_cte();
                break;
            case TokenKind::KwLog:
                e.kind = ast::ConstEntry::Kind::Log;
                advance();
                expect(TokenKind::Eq);
                e.log_path = expect_nfile();
                break;
            default:
                fail("batch, threads, or log");
            }
            block.entries.push_back(std::move(e));
        } while (!at(TokenKind::RBrace));
        expect(TokenKind::RBrace);
        return block;
    }

    ast::Definition parse_definition() {
        switch (peek().kind) {
        case TokenKind::KwData: return parse_data_block();
        case TokenKind::KwNetwork: return parse_network();
        case TokenKind::KwScript: return parse_script();
        default:
            fail("data, network, or script");
        }
    }

    ast::DataBlock parse_data_block() {
        ast::DataBlock block;
        block.span = peek().span;
        expect(TokenKind::KwData);
        expect(TokenKind::LBrace);
        do {
            block.entries.push_back(parse_datum());
        } while (!at(TokenKind::RBrace));
        expect(TokenKind::RBrace);
        return block;
    }

    ast::DatumDef parse_datum() {
        ast::DatumDef d;
        d.name = expect_id("data object name", &d.name_span);
        expect(TokenKind::LBrack);
        for (;;) {
            ast::DatumParam p;
            p.span = peek().span;
            switch (peek().kind) {
            case TokenKind::KwFilename:
                p.kind = ast::DatumParam::Kind::Filename;
                advance();
                expect(TokenKind::Eq);
                p.path = expect_nfile();
                break;
            case TokenKind::KwAscii:
                p.kind = ast::DatumParam::Kind::Ascii;
                advance();
                break;
            case TokenKind::KwBinary:
                p.kind = ast::DatumParam::Kind::Binary;
                advance();
                break;
            default:
                fail("filename, ascii, or binary");
            }
            d.params.push_back(std::move(p));
            if (!at(TokenKind::Comma)) break;
            advance();
        }
        expect(TokenKind::RBrack);
        return d;
    }

    // network id { data tr id (data va id | data ts id)* statement+ }
    ast::NetworkDef parse_network() {
        ast::NetworkDef net;
        net.span = peek().span;
        expect(TokenKind::KwNetwork);
        net.name = expect_id("network name", &net.name_span);
        expect(TokenKind::LBrace);
        expect(TokenKind::KwData);
        expect(TokenKind::KwTr, "tr");
        net.tr = expect_id("training data name", &net.tr_span);
        while (at(TokenKind::KwData)) {
            ast::NetDataRole role;
            role.span = peek().span;
            advance();
            if (at(TokenKind::KwVa)) {
                role.role = ast::NetDataRole::Role::Va;
            } else if (at(TokenKind::KwTs)) {
                role.role = ast::NetDataRole::Role::Ts;
            } else {
                fail("va or ts");
            }
            advance();
            role.id = expect_id("data object name");
            net.extra.push_back(std::move(role));
        }
        do {
            net.statements.push_back(parse_statement());
        } while (!at(TokenKind::RBrace));
        expect(TokenKind::RBrace);
        return net;
    }

    ast::Statement parse_statement() {
        if (is_layer_keyword(peek().kind)) return parse_layer();
        if (at(TokenKind::Id)) return parse_edge();
        fail("a layer declaration or an edge");
    }

    ast::LayerDecl parse_layer() {
        ast::LayerDecl layer;
        layer.span = peek().span;
        TokenKind kw = advance().kind;
        switch (kw) {
        case TokenKind::KwFI: layer.kind = ast::LayerKind::FI; break;
        case TokenKind::KwCI: layer.kind = ast::LayerKind::CI; break;
        case TokenKind::KwF: layer.kind = ast::LayerKind::F; break;
        case TokenKind::KwFO: layer.kind = ast::LayerKind::FO; break;
        case TokenKind::KwC: layer.kind = ast::LayerKind::C; break;
        case TokenKind::KwMP: layer.kind = ast::LayerKind::MP; break;
        case TokenKind::KwCA: layer.kind = ast::LayerKind::CA; break;
        default: fail("layer kind");
        }
        layer.name = expect_id("layer name", &layer.name_span);
        switch (layer.kind) {
        case ast::LayerKind::FI:
        case ast::LayerKind::CA:
            break; // no parameter list
        case ast::LayerKind::CI:
            parse_eq_params(layer, "nz, nr, nc, cr, or cc",
                            {TokenKind::KwNz, TokenKind::KwNr, TokenKind::KwNc,
                             TokenKind::KwCr, TokenKind::KwCc});
            break;
        case ast::LayerKind::C:
            parse_eq_params(layer, "nk, kr, kc, rpad, cpad, or stride",
                            {TokenKind::KwNk, TokenKind::KwKr, TokenKind::KwKc,
                             TokenKind::KwRpad, TokenKind::KwCpad,
                             TokenKind::KwStride});
            break;
        case ast::LayerKind::MP:
            parse_eq_params(layer, "sizer or sizec",
                            {TokenKind::KwSizer, TokenKind::KwSizec});
            break;
        case ast::LayerKind::F:
            parse_f_params(layer);
            break;
        case ast::LayerKind::FO:
            parse_fo_params(layer);
            break;
        }
        return layer;
    }

    static ast::LayerParamName param_name_for(TokenKind k) {
        switch (k) {
        case TokenKind::KwNz: return ast::LayerParamName::Nz;
        case TokenKind::KwNr: return ast::LayerParamName::Nr;
        case TokenKind::KwNc: return ast::LayerParamName::Nc;
        case TokenKind::KwCr: return ast::LayerParamName::Cr;
        case TokenKind::KwCc: return ast::LayerParamName::Cc;
        case TokenKind::KwNumnodes: return ast::LayerParamName::Numnodes;
        case TokenKind::KwLocal: return ast::LayerParamName::Local;
        case TokenKind::KwClassification: return ast::LayerParamName::Classification;
        case TokenKind::KwRegression: return ast::LayerParamName::Regression;
        case TokenKind::KwAutoencoder: return ast::LayerParamName::Autoencoder;
        case TokenKind::KwNk: return ast::LayerParamName::Nk;
        case TokenKind::KwKr: return ast::LayerParamName::Kr;
        case TokenKind::KwKc: return ast::LayerParamName::Kc;
        case TokenKind::KwRpad: return ast::LayerParamName::Rpad;
        case TokenKind::KwCpad: return ast::LayerParamName::Cpad;
        case TokenKind::KwStride: return ast::LayerParamName::Stride;
        case TokenKind::KwSizer: return ast::LayerParamName::Sizer;
        case TokenKind::KwSizec: return ast::LayerParamName::Sizec;
        default: throw std::logic_error("not a layer parameter token");
        }
    }

    // [ name = cte (, name = cte)* ] with the allowed name set
    void parse_eq_params(ast::LayerDecl& layer, const char* what,
                         std::initializer_list<TokenKind> allowed) {
        layer.has_brackets = true;
        expect(TokenKind::LBrack);
        for (;;) {
            ast::LayerParam p;
            p.span = peek().span;
            bool ok = false;
            for (TokenKind k : allowed) ok = ok || at(k);
            if (!ok) fail(what);
            p.name = param_name_for(advance().kind);
            expect(TokenKind::Eq);
            p.value = expect_cte();
            layer.params.push_back(std::move(p));
            if (!at(TokenKind::Comma)) break;
            advance();
        }
        expect(TokenKind::RBrack);
    }

    // [ numnodes = cte ] | [ local ] | [ ]
    void parse_f_params(ast::LayerDecl& layer) {
        layer.has_brackets = true;
        expect(TokenKind::LBrack);
        if (at(TokenKind::KwNumnodes)) {
            ast::LayerParam p;
            p.span = peek().span;
            p.name = ast::LayerParamName::Numnodes;
            advance();
            expect(TokenKind::Eq);
            p.value = expect_cte();
            layer.params.push_back(std::move(p));
        } else if (at(TokenKind::KwLocal)) {
            ast::LayerParam p;
            p.span = peek().span;
            p.name = ast::LayerParamName::Local;
            advance();
            layer.params.push_back(std::move(p));
        }
        expect(TokenKind::RBrack);
    }

    // [ (classification | regression | autoencoder)+ ] — no commas
    void parse_fo_params(ast::LayerDecl& layer) {
        layer.has_brackets = true;
        expect(TokenKind::LBrack);
        do {
            ast::LayerParam p;
            p.span = peek().span;
            if (!at(TokenKind::KwClassification) && !at(TokenKind::KwRegression) &&
                !at(TokenKind::KwAutoencoder)) {
                fail("classification, regression, or autoencoder");
            }
            p.name = param_name_for(advance().kind);
            layer.params.push_back(std::move(p));
        } while (!at(TokenKind::RBrack));
        expect(TokenKind::RBrack);
        return;
    }

    ast::NameLayer parse_name_layer() {
        ast::NameLayer n;
        n.span = peek().span;
        std::string first = expect_id("layer name");
        if (at(TokenKind::Dot)) {
            advance();
            n.net = std::move(first);
            n.layer = expect_id("layer name");
        } else {
            n.layer = std::move(first);
        }
        n.span.length = peek().span.offset - n.span.offset;
        return n;
    }

    ast::EdgeDecl parse_edge() {
        ast::EdgeDecl e;
        e.span = peek().span;
        e.src = parse_name_layer();
        expect(TokenKind::Arrow);
        e.dst = parse_name_layer();
        return e;
    }

    ast::ScriptBlock parse_script() {
        ast::ScriptBlock block;
        block.span = peek().span;
        expect(TokenKind::KwScript);
        expect(TokenKind::LBrace);
        do {
            block.actions.push_back(parse_action());
        } while (!at(TokenKind::RBrace));
        expect(TokenKind::RBrace);
        return block;
    }

    // Dispatch between the amendment forms and the command forms. Everything
    // except joint train starts with an id followed by '.'; three tokens of
    // lookahead decide between `id.param`, `id.cmd(...)`, `id.id.param` and
    // `id.id.printkernels(...)`.
    ast::Action parse_action() {
        if (at(TokenKind::KwTrain)) return parse_joint_train();
        if (!at(TokenKind::Id)) fail("an amendment or a command");

        ast::Amendment am;
        am.span = peek().span;
        am.first = expect_id("network or data name", &am.first_span);
        expect(TokenKind::Dot);

        if (at(TokenKind::Id)) {
            // id . id . (param | printkernels)
            std::string second = expect_id("layer name", &am.layer_span);
            expect(TokenKind::Dot);
            if (at(TokenKind::KwPrintkernels)) {
                advance();
                ast::Command cmd;
                cmd.kind = ast::Command::Kind::PrintKernels;
                cmd.span = am.span;
                cmd.target = std::move(am.first);
                cmd.target_span = am.first_span;
                cmd.layer = std::move(second);
                cmd.layer_span = am.layer_span;
                expect(TokenKind::LParen);
                cmd.file = expect_nfile();
                expect(TokenKind::RParen);
                return cmd;
            }
            if (!is_amend_param(peek().kind)) fail("a parameter name or printkernels");
            am.layer = std::move(second);
            am.param = std::string(advance().lexeme);
            expect(TokenKind::Eq);
            am.value = expect_cte();
            return am;
        }

        if (is_amend_param(peek().kind)) {
            am.param = std::string(advance().lexeme);
            expect(TokenKind::Eq);
            am.value = expect_cte();
            return am;
        }

        ast::Command cmd;
        cmd.span = am.span;
        cmd.target = std::move(am.first);
        cmd.target_span = am.first_span;
        switch (peek().kind) {
        case TokenKind::KwTrain:
            advance();
            cmd.kind = ast::Command::Kind::Train;
            expect(TokenKind::LParen);
            cmd.a = expect_cte("epoch count");
            expect(TokenKind::RParen);
            return cmd;
        case TokenKind::KwTest:
            advance();
            cmd.kind = ast::Command::Kind::Test;
            parse_odata(cmd);
            return cmd;
        case TokenKind::KwLoad:
            advance();
            cmd.kind = ast::Command::Kind::Load;
            expect(TokenKind::LParen);
            cmd.file = expect_nfile();
            expect(TokenKind::RParen);
            return cmd;
        case TokenKind::KwSave:
            advance();
            cmd.kind = ast::Command::Kind::Save;
            expect(TokenKind::LParen);
            cmd.file = expect_nfile();
            expect(TokenKind::RParen);
            return cmd;
        case TokenKind::KwTestout:
            advance();
            cmd.kind = ast::Command::Kind::TestOut;
            expect(TokenKind::LParen);
            cmd.file = expect_nfile();
            expect(TokenKind::RParen);
            return cmd;
        case TokenKind::KwZscore:
            advance();
            cmd.kind = ast::Command::Kind::Zscore;
            parse_odata(cmd);
            return cmd;
        case TokenKind::KwCenter:
            advance();
            cmd.kind = ast::Command::Kind::Center;
            parse_odata(cmd);
            return cmd;
        case TokenKind::KwYuv:
            advance();
            cmd.kind = ast::Command::Kind::Yuv;
            expect(TokenKind::LParen);
            expect(TokenKind::RParen);
            return cmd;
        case TokenKind::KwDiv:
            advance();
            cmd.kind = ast::Command::Kind::Div;
            expect(TokenKind::LParen);
            cmd.a = expect_cte("divisor");
            expect(TokenKind::RParen);
            return cmd;
        default:
            fail("a parameter name or a command");
        }
    }

    void parse_odata(ast::Command& cmd) {
        expect(TokenKind::LParen);
        if (at(TokenKind::Id)) {
            cmd.data_span = peek().span;
            cmd.data = expect_id("data object name");
        }
        expect(TokenKind::RParen);
    }

    // train ( cte , cte (, id)* )
    ast::Command parse_joint_train() {
        ast::Command cmd;
        cmd.kind = ast::Command::Kind::JointTrain;
        cmd.span = peek().span;
        expect(TokenKind::KwTrain);
        expect(TokenKind::LParen);
        cmd.a = expect_cte("epoch count");
        expect(TokenKind::Comma);
        cmd.b = expect_cte("batch count");
        while (at(TokenKind::Comma)) {
            advance();
            SourceSpan s;
            cmd.nets.push_back(expect_id("network name", &s));
            cmd.net_spans.push_back(s);
        }
        expect(TokenKind::RParen);
        return cmd;
    }
};

} // namespace

const char* ast::layer_kind_name(ast::LayerKind k) {
    switch (k) {
    case ast::LayerKind::FI: return "FI";
    case ast::LayerKind::CI: return "CI";
    case ast::LayerKind::F: return "F";
    case ast::LayerKind::FO: return "FO";
    case ast::LayerKind::C: return "C";
    case ast::LayerKind::MP: return "MP";
    case ast::LayerKind::CA: return "CA";
    }
    return "?";
}

const char* ast::layer_param_name(ast::LayerParamName p) {
    switch (p) {
    case ast::LayerParamName::Nz: return "nz";
    case ast::LayerParamName::Nr: return "nr";
    case ast::LayerParamName::Nc: return "nc";
    case ast::LayerParamName::Cr: return "cr";
    case ast::LayerParamName::Cc: return "cc";
    case ast::LayerParamName::Numnodes: return "numnodes";
    case ast::LayerParamName::Local: return "local";
    case ast::LayerParamName::Classification: return "classification";
    case ast::LayerParamName::Regression: return "regression";
    case ast::LayerParamName::Autoencoder: return "autoencoder";
    case ast::LayerParamName::Nk: return "nk";
    case ast::LayerParamName::Kr: return "kr";
    case ast::LayerParamName::Kc: return "kc";
    case ast::LayerParamName::Rpad: return "rpad";
    case ast::LayerParamName::Cpad: return "cpad";
    case ast::LayerParamName::Stride: return "stride";
    case ast::LayerParamName::Sizer: return "sizer";
    case ast::LayerParamName::Sizec: return "sizec";
    }
    return "?";
}

ast::Experiment parse(const std::vector<Token>& tokens) {
    return Parser(tokens).run();
}

ast::Experiment parse_source(std::string_view source) {
    auto tokens = tokenize(source);
    return parse(tokens);
}

} // namespace layers
