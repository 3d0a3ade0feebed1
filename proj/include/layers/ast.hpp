#pragma once

#include "layers/token.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

// Abstract syntax mirroring the surface grammar one production to one node.
// No defaults are filled in and no names are resolved here; that is sema's
// job.
namespace layers::ast {

struct ConstEntry {
    enum class Kind { Batch, Threads, Log };
    Kind kind{};
    Number value;         // Batch / Threads
    std::string log_path; // Log
    SourceSpan span;
};

struct ConstBlock {
    std::vector<ConstEntry> entries; // non-empty
    SourceSpan span;
};

struct DatumParam {
    enum class Kind { Filename, Ascii, Binary };
    Kind kind{};
    std::string path; // Filename
    SourceSpan span;
};

struct DatumDef {
    std::string name;
    SourceSpan name_span;
    std::vector<DatumParam> params; // non-empty
};

struct DataBlock {
    std::vector<DatumDef> entries; // non-empty
    SourceSpan span;
};

enum class LayerKind { FI, CI, F, FO, C, MP, CA };
const char* layer_kind_name(LayerKind k);

enum class LayerParamName {
    Nz, Nr, Nc, Cr, Cc,                        // CI
    Numnodes, Local,                           // F
    Classification, Regression, Autoencoder,   // FO
    Nk, Kr, Kc, Rpad, Cpad, Stride,            // C
    Sizer, Sizec,                              // MP
};
const char* layer_param_name(LayerParamName p);

struct LayerParam {
    LayerParamName name{};
    std::optional<Number> value; // absent for the flag params
    SourceSpan span;
};

struct LayerDecl {
    LayerKind kind{};
    std::string name;
    SourceSpan name_span;
    bool has_brackets = false; // FI and CA never do; F [] keeps an empty list
    std::vector<LayerParam> params;
    SourceSpan span;
};

struct NameLayer {
    std::optional<std::string> net; // qualified form "net.layer"
    std::string layer;
    SourceSpan span;
};

struct EdgeDecl {
    NameLayer src;
    NameLayer dst;
    SourceSpan span;
};

struct NetDataRole {
    enum class Role { Va, Ts };
    Role role{};
    std::string id;
    SourceSpan span;
};

using Statement = std::variant<LayerDecl, EdgeDecl>;

struct NetworkDef {
    std::string name;
    SourceSpan name_span;
    std::string tr;
    SourceSpan tr_span;
    std::vector<NetDataRole> extra;
    std::vector<Statement> statements; // non-empty, source order
    SourceSpan span;
};

// `first` may name a network or (for balance) a data object; `layer` is the
// optional middle id of the three-part form.
struct Amendment {
    std::string first;
    SourceSpan first_span;
    std::optional<std::string> layer;
    SourceSpan layer_span;
    std::string param; // one of the 17 parameter keywords, as spelled
    Number value;
    SourceSpan span;
};

struct Command {
    enum class Kind {
        PrintKernels, // net.layer.printkernels(nfile)
        JointTrain,   // train(cte, cte, id...)
        Train,        // id.train(cte)
        Test,         // id.test(odata)
        Load,
        Save,
        TestOut,
        Zscore, // id.zscore(odata)
        Center,
        Yuv,
        Div,
    };
    Kind kind{};
    std::string target; // net or data id; empty for JointTrain
    SourceSpan target_span;
    std::string layer; // PrintKernels
    SourceSpan layer_span;
    std::string file;                // nfile argument
    Number a;                        // epochs / div value
    Number b;                        // joint-train batches
    std::vector<std::string> nets;   // joint-train network list
    std::vector<SourceSpan> net_spans;
    std::optional<std::string> data; // odata argument
    SourceSpan data_span;
    SourceSpan span;
};

using Action = std::variant<Amendment, Command>;

struct ScriptBlock {
    std::vector<Action> actions; // non-empty
    SourceSpan span;
};

using Definition = std::variant<DataBlock, NetworkDef, ScriptBlock>;

struct Experiment {
    std::optional<ConstBlock> constants;
    std::vector<Definition> definitions; // non-empty, source order
};

} // namespace layers::ast
