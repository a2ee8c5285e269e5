#include "logk3/documents.hpp"

#include <json.hpp>

#include <fstream>
#include <limits>
#include <sstream>

namespace logk3 {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& context, const std::string& what) {
    throw std::invalid_argument(context + ": " + what);
}

const ordered_json& field(const ordered_json& j, const char* name, const std::string& context) {
    auto it = j.find(name);
    if (it == j.end()) bad(context, std::string("missing field '") + name + "'");
    return *it;
}

long long as_int(const ordered_json& j, const std::string& context) {
    if (!j.is_number_integer()) bad(context, "expected an integer");
    // values above LLONG_MAX parse as unsigned and would wrap in get<long long>
    if (j.is_number_unsigned() &&
        j.get<unsigned long long>() > static_cast<unsigned long long>(
                                          std::numeric_limits<long long>::max()))
        bad(context, "integer too large for the document format");
    return j.get<long long>();
}

IntVec as_int_vector(const ordered_json& j, const std::string& context) {
    if (!j.is_array()) bad(context, "expected an array of integers");
    IntVec v;
    for (const auto& x : j) v.emplace_back(as_int(x, context));
    return v;
}

long long emit_int(const Int& x, const std::string& context) {
    if (x < std::numeric_limits<long long>::min() || x > std::numeric_limits<long long>::max())
        bad(context, "integer too large for the document format");
    return static_cast<long long>(x);
}

ordered_json emit_int_vector(const IntVec& v, const std::string& context) {
    ordered_json a = ordered_json::array();
    for (const Int& x : v) a.push_back(emit_int(x, context));
    return a;
}

ordered_json parse_json(const std::string& text, const std::string& context) {
    try {
        return ordered_json::parse(text);
    } catch (const ordered_json::parse_error& ex) {
        bad(context, ex.what());
    }
}

} // namespace

PairDocument parse_pair_document(const std::string& text) {
    const std::string ctx = "pair document";
    ordered_json j = parse_json(text, ctx);
    if (!j.is_object()) bad(ctx, "expected a JSON object");

    PairDocument doc;
    const ordered_json& name = field(j, "name", ctx);
    if (!name.is_string()) bad(ctx, "'name' must be a string");
    doc.name = name.get<std::string>();
    const ordered_json& mode_field = field(j, "mode", ctx);
    if (!mode_field.is_string()) bad(ctx, "'mode' must be a string");
    const std::string mode = mode_field.get<std::string>();
    if (mode != "type" && mode != "lattice") bad(ctx, "'mode' must be \"type\" or \"lattice\"");

    const ordered_json& b = field(j, "boundary", ctx);
    if (!b.is_object()) bad(ctx, "'boundary' must be an object");
    const ordered_json& kind_field = field(b, "kind", ctx + ": boundary");
    if (!kind_field.is_string()) bad(ctx, "boundary 'kind' must be a string");
    const std::string kind = kind_field.get<std::string>();
    if (kind == "elliptic")
        doc.pair.shape = BoundaryShape::elliptic(as_int(field(b, "self_int", ctx), ctx));
    else if (kind == "nodal")
        doc.pair.shape = BoundaryShape::nodal(as_int(field(b, "self_int", ctx), ctx));
    else if (kind == "circular")
        doc.pair.shape = make_circular(as_int_vector(field(b, "lambdas", ctx), ctx + ": lambdas"));
    else
        bad(ctx, "boundary 'kind' must be \"elliptic\", \"nodal\" or \"circular\"");

    if (mode == "lattice") {
        const ordered_json& gj = field(j, "gram", ctx);
        if (!gj.is_array() || gj.empty()) bad(ctx, "'gram' must be a nonempty matrix");
        const int rank = static_cast<int>(gj.size());
        IMat gram(rank, rank);
        for (int r = 0; r < rank; ++r) {
            IntVec row = as_int_vector(gj[static_cast<size_t>(r)], ctx + ": gram");
            if (static_cast<int>(row.size()) != rank) bad(ctx, "'gram' must be square");
            for (int c = 0; c < rank; ++c) gram.at(r, c) = row[static_cast<size_t>(c)];
        }
        IntVec canonical = as_int_vector(field(j, "canonical", ctx), ctx + ": canonical");
        Realization real;
        real.lattice = make_lattice(std::move(gram), std::move(canonical));
        const ordered_json& bc = field(j, "boundary_classes", ctx);
        if (!bc.is_array()) bad(ctx, "'boundary_classes' must be an array of integer vectors");
        for (const auto& c : bc)
            real.boundary_classes.emplace_back(as_int_vector(c, ctx + ": boundary_classes"));
        doc.pair.realization = std::move(real);
    }
    return doc;
}

std::string emit_pair_document(const PairDocument& doc) {
    const std::string ctx = "pair document";
    ordered_json j;
    j["name"] = doc.name;
    j["mode"] = doc.pair.realization ? "lattice" : "type";
    ordered_json b;
    switch (doc.pair.shape.kind) {
    case BoundaryKind::Elliptic:
        b["kind"] = "elliptic";
        b["self_int"] = emit_int(doc.pair.shape.self_int, ctx);
        break;
    case BoundaryKind::Nodal:
        b["kind"] = "nodal";
        b["self_int"] = emit_int(doc.pair.shape.self_int, ctx);
        break;
    case BoundaryKind::Circular:
        b["kind"] = "circular";
        b["lambdas"] = emit_int_vector(doc.pair.shape.lambdas, ctx);
        break;
    }
    j["boundary"] = std::move(b);
    if (doc.pair.realization) {
        const Realization& r = *doc.pair.realization;
        ordered_json gram = ordered_json::array();
        for (int i = 0; i < r.lattice.rank; ++i) {
            ordered_json row = ordered_json::array();
            for (int k = 0; k < r.lattice.rank; ++k) row.push_back(emit_int(r.lattice.gram.at(i, k), ctx));
            gram.push_back(std::move(row));
        }
        j["gram"] = std::move(gram);
        j["canonical"] = emit_int_vector(r.lattice.canonical.coeffs, ctx);
        ordered_json bc = ordered_json::array();
        for (const DivisorClass& c : r.boundary_classes) bc.push_back(emit_int_vector(c.coeffs, ctx));
        j["boundary_classes"] = std::move(bc);
    }
    return j.dump(2) + "\n";
}

ScriptDocument parse_script_document(const std::string& text) {
    const std::string ctx = "script document";
    ordered_json j = parse_json(text, ctx);
    if (!j.is_object()) bad(ctx, "expected a JSON object");
    const ordered_json& steps = field(j, "steps", ctx);
    if (!steps.is_array()) bad(ctx, "'steps' must be an array");

    ScriptDocument doc;
    for (size_t idx = 0; idx < steps.size(); ++idx) {
        const std::string sctx = ctx + ": step " + std::to_string(idx);
        const ordered_json& s = steps[idx];
        if (!s.is_object()) bad(sctx, "expected an object");
        const ordered_json& op_field = field(s, "op", sctx);
        if (!op_field.is_string()) bad(sctx, "'op' must be a string");
        const std::string op = op_field.get<std::string>();
        if (op == "blowup") {
            const ordered_json& e = field(s, "edge", sctx);
            if (!e.is_array() || e.size() != 2) bad(sctx, "'edge' must be a pair [i, j]");
            const long long i = as_int(e[0], sctx), jj = as_int(e[1], sctx);
            if (i < 1 || jj < 1) bad(sctx, "edge components are 1-based");
            int point = 0;
            if (auto it = s.find("point"); it != s.end()) point = static_cast<int>(as_int(*it, sctx));
            doc.steps.push_back(
                CanonicalBlowup{static_cast<int>(i) - 1, static_cast<int>(jj) - 1, point});
        } else if (op == "contract") {
            const long long k = as_int(field(s, "component", sctx), sctx);
            if (k < 1) bad(sctx, "component indices are 1-based");
            doc.steps.push_back(CanonicalBlowdown{static_cast<int>(k) - 1});
        } else if (op == "pivot") {
            const long long k = as_int(field(s, "component", sctx), sctx);
            if (k < 1) bad(sctx, "component indices are 1-based");
            const ordered_json& dir_field = field(s, "direction", sctx);
            if (!dir_field.is_string() ||
                (dir_field.get<std::string>() != "succ" && dir_field.get<std::string>() != "pred"))
                bad(sctx, "'direction' must be \"succ\" or \"pred\"");
            const std::string dir = dir_field.get<std::string>();
            doc.steps.push_back(Pivot{static_cast<int>(k) - 1,
                                      dir == "succ" ? PivotDirection::Succ : PivotDirection::Pred});
        } else if (op == "attach") {
            const long long k = as_int(field(s, "component", sctx), sctx);
            if (k < 1) bad(sctx, "component indices are 1-based");
            doc.steps.push_back(HalfPointAttach{static_cast<int>(k) - 1});
        } else {
            bad(sctx, "unknown op '" + op + "'");
        }
    }
    return doc;
}

std::string emit_script_document(const ScriptDocument& doc) {
    ordered_json steps = ordered_json::array();
    for (const SurgeryStep& step : doc.steps) {
        ordered_json s;
        if (const auto* b = std::get_if<CanonicalBlowup>(&step)) {
            s["op"] = "blowup";
            s["edge"] = ordered_json::array({b->i + 1, b->j + 1});
            s["point"] = b->point_index;
        } else if (const auto* c = std::get_if<CanonicalBlowdown>(&step)) {
            s["op"] = "contract";
            s["component"] = c->component + 1;
        } else if (const auto* p = std::get_if<Pivot>(&step)) {
            s["op"] = "pivot";
            s["component"] = p->component + 1;
            s["direction"] = p->direction == PivotDirection::Succ ? "succ" : "pred";
        } else if (const auto* h = std::get_if<HalfPointAttach>(&step)) {
            s["op"] = "attach";
            s["component"] = h->component + 1;
        }
        steps.push_back(std::move(s));
    }
    ordered_json j;
    j["steps"] = std::move(steps);
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
    if (!out) throw std::invalid_argument("cannot write file: " + path);
}

} // namespace logk3
