#include "layers/parser.hpp"

#include <sstream>

namespace layers {

namespace {

void dump_layer(std::ostringstream& out, const ast::LayerDecl& l) {
    out << "  " << ast::layer_kind_name(l.kind) << " " << l.name;
    if (l.has_brackets) {
        out << " [";
        bool fo = l.kind == ast::LayerKind::FO;
        for (std::size_t i = 0; i < l.params.size(); ++i) {
            if (i) out << (fo ? " " : ", ");
            const auto& p = l.params[i];
            out << ast::layer_param_name(p.name);
            if (p.value) out << " = " << p.value->text();
        }
        out << "]";
    }
    out << "\n";
}

void dump_name(std::ostringstream& out, const ast::NameLayer& n) {
    if (n.net) out << *n.net << ".";
    out << n.layer;
}

void dump_action(std::ostringstream& out, const ast::Action& action) {
    out << "  ";
    if (const auto* am = std::get_if<ast::Amendment>(&action)) {
        out << am->first << ".";
        if (am->layer) out << *am->layer << ".";
        out << am->param << " = " << am->value.text() << "\n";
        return;
    }
    const auto& c = std::get<ast::Command>(action);
    using K = ast::Command::Kind;
    switch (c.kind) {
    case K::PrintKernels:
        out << c.target << "." << c.layer << ".printkernels(\"" << c.file << "\")";
        break;
    case K::JointTrain:
        out << "train(" << c.a.text() << ", " << c.b.text();
        for (const auto& n : c.nets) out << ", " << n;
        out << ")";
        break;
    case K::Train:
        out << c.target << ".train(" << c.a.text() << ")";
        break;
    case K::Test:
        out << c.target << ".test(" << (c.data ? *c.data : "") << ")";
        break;
    case K::Load:
        out << c.target << ".load(\"" << c.file << "\")";
        break;
    case K::Save:
        out << c.target << ".save(\"" << c.file << "\")";
        break;
    case K::TestOut:
        out << c.target << ".testout(\"" << c.file << "\")";
        break;
    case K::Zscore:
        out << c.target << ".zscore(" << (c.data ? *c.data : "") << ")";
        break;
    case K::Center:
        out << c.target << ".center(" << (c.data ? *c.data : "") << ")";
        break;
    case K::Yuv:
        out << c.target << ".yuv()";
        break;
    case K::Div:
        out << c.target << ".div(" << c.a.text() << ")";
        break;
    }
    out << "\n";
}

} // namespace

std::string dump_ast(const ast::Experiment& exp) {
    std::ostringstream out;
    if (exp.constants) {
        out << "const {\n";
        for (const auto& e : exp.constants->entries) {
            switch (e.kind) {
            case ast::ConstEntry::Kind::Batch:
                out << "  batch = " << e.value.text() << "\n";
                break;
            case ast::ConstEntry::Kind::Threads:
                out << "  threads = " << e.value.text() << "\n";
                break;
            case ast::ConstEntry::Kind::Log:
                out << "  log = \"" << e.log_path << "\"\n";
                break;
            }
        }
        out << "}\n";
    }
    for (const auto& def : exp.definitions) {
        if (const auto* data = std::get_if<ast::DataBlock>(&def)) {
            out << "data {\n";
            for (const auto& d : data->entries) {
                out << "  " << d.name << " [";
                for (std::size_t i = 0; i < d.params.size(); ++i) {
                    if (i) out << ", ";
                    switch (d.params[i].kind) {
                    case ast::DatumParam::Kind::Filename:
                        out << "filename = \"" << d.params[i].path << "\"";
                        break;
                    case ast::DatumParam::Kind::Ascii:
                        out << "ascii";
                        break;
                    case ast::DatumParam::Kind::Binary:
                        out << "binary";
                        break;
                    }
                }
                out << "]\n";
            }
            out << "}\n";
        } else if (const auto* net = std::get_if<ast::NetworkDef>(&def)) {
            out << "network " << net->name << " {\n";
            out << "  data tr " << net->tr << "\n";
            for (const auto& role : net->extra) {
                out << "  data "
                    << (role.role == ast::NetDataRole::Role::Va ? "va" : "ts")
                    << " " << role.id << "\n";
            }
            for (const auto& st : net->statements) {
                if (const auto* layer = std::get_if<ast::LayerDecl>(&st)) {
                    dump_layer(out, *layer);
                } else {
                    const auto& e = std::get<ast::EdgeDecl>(st);
                    out << "  ";
                    dump_name(out, e.src);
                    out << " -> ";
                    dump_name(out, e.dst);
                    out << "\n";
                }
            }
            out << "}\n";
        } else {
            const auto& script = std::get<ast::ScriptBlock>(def);
            out << "script {\n";
            for (const auto& action : script.actions) dump_action(out, action);
            out << "}\n";
        }
    }
    return out.str();
}

} // namespace layers
