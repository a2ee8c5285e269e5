#include "logk3/classify.hpp"
#include "logk3/documents.hpp"
#include "logk3/grouparith.hpp"
#include "logk3/iitaka.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unistd.h>

namespace {

using namespace logk3;
using ordered_json = nlohmann::ordered_json;

struct Palette {
    std::string bold, red, green, reset;
};

Palette palette() {
    const char* env = std::getenv("LOGK3_COLOR");
    if (env && std::string_view(env) == "0") return {};
    if (!isatty(fileno(stdout))) return {};
    return {"\033[1m", "\033[31m", "\033[32m", "\033[0m"};
}

std::string verdict_phrase(AbundanceKind k) {
    switch (k) {
    case AbundanceKind::CountablyInfinite: return "countably many A^1 curves";
    case AbundanceKind::NotInfinite: return "not infinitely many A^1 curves";
    case AbundanceKind::Inconsistent: return "inconsistent";
    }
    return "";
}

std::string verdict_token(AbundanceKind k) {
    switch (k) {
    case AbundanceKind::CountablyInfinite: return "countably-infinite";
    case AbundanceKind::NotInfinite: return "not-infinite";
    case AbundanceKind::Inconsistent: return "inconsistent";
    }
    return "";
}

// Human-readable step description with 1-based component labels.
std::string describe_step(const SurgeryStep& step) {
    std::ostringstream os;
    if (const auto* b = std::get_if<CanonicalBlowup>(&step)) {
        os << "blowup at edge (" << b->i + 1 << ", " << b->j + 1 << ")";
        if (b->point_index == 1) os << " (point 1)";
    } else if (const auto* c = std::get_if<CanonicalBlowdown>(&step)) {
        os << "contract D" << c->component + 1;
    } else if (const auto* p = std::get_if<Pivot>(&step)) {
        os << "pivot at D" << p->component + 1 << " ("
           << (p->direction == PivotDirection::Succ ? "succ" : "pred") << ")";
    } else if (const auto* h = std::get_if<HalfPointAttach>(&step)) {
        os << "attach at D" << h->component + 1;
    }
    return os.str();
}

std::string to_dot(const BoundaryShape& shape) {
    std::ostringstream os;
    os << "graph boundary {\n";
    os << "  node [shape=circle];\n";
    const int n = shape.n_components();
    for (int i = 0; i < n; ++i) {
        const Int& lambda = shape.kind == BoundaryKind::Circular
                                ? shape.lambdas[static_cast<size_t>(i)]
                                : shape.self_int;
        os << "  d" << i + 1 << " [label=\"D" << i + 1 << " (" << lambda << ")\"];\n";
    }
    switch (shape.kind) {
    case BoundaryKind::Elliptic: break;
    case BoundaryKind::Nodal: os << "  d1 -- d1;\n"; break;
    case BoundaryKind::Circular:
        if (n == 2) {
            os << "  d1 -- d2;\n  d1 -- d2;\n";
        } else {
            for (int i = 0; i < n; ++i) os << "  d" << i + 1 << " -- d" << (i + 1) % n + 1 << ";\n";
        }
        break;
    }
    os << "}\n";
    return os.str();
}

// C2/C3/C4 report the rotated normal type; C0/C1 the reached shape.
std::string normal_form_text(const CanonicalClass& cls, const BoundaryShape& normal) {
    switch (cls.label) {
    case CanonicalLabel::C2:
    case CanonicalLabel::C3:
    case CanonicalLabel::C4: return format_type_vector(cls.normal_type);
    case CanonicalLabel::C0:
    case CanonicalLabel::C1: return format_shape(normal);
    case CanonicalLabel::Inconsistent: return "";
    }
    return "";
}

ordered_json validation_to_json(const ValidationReport& val) {
    ordered_json v;
    v["circularity_ok"] = val.circularity_ok;
    if (val.k_plus_d_zero) v["k_plus_d_zero"] = *val.k_plus_d_zero;
    if (val.irregularity_q) v["irregularity_q"] = *val.irregularity_q;
    if (val.genuine) v["genuine"] = *val.genuine;
    if (val.hodge_signature_ok) v["hodge_signature_ok"] = *val.hodge_signature_ok;
    v["notes"] = val.notes;
    return v;
}

int run_classify(const std::string& input, bool as_json, const std::string& dot_path) {
    const PairDocument doc = parse_pair_document(read_file(input));
    const ValidationReport val = validate_pair(doc.pair, true);
    if (!dot_path.empty()) write_file(dot_path, to_dot(doc.pair.shape));

    const NormalizeResult nr = normalize(doc.pair);
    const AbundanceVerdict verdict = a1_abundance(doc.pair);
    const bool inconsistent = nr.cls.label == CanonicalLabel::Inconsistent;

    if (as_json) {
        ordered_json j;
        j["name"] = doc.name;
        j["class"] = to_string(nr.cls.label);
        j["verdict"] = verdict_token(verdict.kind);
        if (inconsistent) j["reason"] = nr.cls.reason;
        else j["normal_type"] = normal_form_text(nr.cls, nr.normal.shape);
        ordered_json trace = ordered_json::array();
        for (const TraceEntry& e : nr.trace.entries) {
            ordered_json t;
            t["step"] = describe_step(e.step);
            t["before"] = format_shape(e.before);
            t["after"] = format_shape(e.after);
            trace.push_back(std::move(t));
        }
        j["trace"] = std::move(trace);
        j["validation"] = validation_to_json(val);
        if (verdict.b2_witness_model) {
            ordered_json w;
            w["type"] = format_shape(verdict.b2_witness_model->shape);
            w["b2_fails"] = verdict.witness_check->fails;
            j["witness"] = std::move(w);
        }
        std::cout << j.dump(2) << "\n";
        return inconsistent ? 2 : 0;
    }

    const Palette p = palette();
    if (inconsistent) {
        std::cout << p.red << "Inconsistent" << p.reset << " / " << nr.cls.reason << "\n";
        return 2;
    }
    const std::string& tint = verdict.kind == AbundanceKind::NotInfinite ? p.red : p.green;
    std::cout << p.bold << to_string(nr.cls.label) << p.reset << " / " << tint
              << verdict_phrase(verdict.kind) << p.reset << "\n";
    std::cout << "normal type: " << normal_form_text(nr.cls, nr.normal.shape) << "\n";
    if (verdict.b2_witness_model)
        std::cout << "witness: " << format_shape(verdict.b2_witness_model->shape)
                  << " fails the nef-and-big test on every adjacent pair\n";
    for (const std::string& note : val.notes) std::cout << "note: " << note << "\n";
    return 0;
}

int run_apply(const std::string& input, const std::string& script_path, bool print_trace,
              const std::string& out_path) {
    const PairDocument doc = parse_pair_document(read_file(input));
    validate_pair(doc.pair, false);
    const ScriptDocument script = parse_script_document(read_file(script_path));

    auto [result, trace] = run_script(doc.pair, script.steps);

    if (print_trace) {
        std::cout << format_shape(trace.initial) << "\n";
        for (const TraceEntry& e : trace.entries) std::cout << format_shape(e.after) << "\n";
    }
    const PairDocument out{doc.name, result};
    const std::string emitted = emit_pair_document(out);
    if (!out_path.empty()) write_file(out_path, emitted);
    else if (!print_trace) std::cout << emitted;
    return 0;
}

int run_enumerate(int max_n, long long lambda_min, long long lambda_max,
                  const std::string& out_path) {
    const std::vector<EnumerationRow> rows = enumerate(max_n, Int(lambda_min), Int(lambda_max));
    std::ostringstream csv;
    csv << "type,class,verdict,normal_type,trace_len\n";
    for (const EnumerationRow& row : rows) {
        const std::string normal_cell = normal_form_text(row.cls, row.normal_shape);
        csv << '"' << format_type_vector(row.type) << "\"," << to_string(row.cls.label) << ","
            << verdict_token(row.verdict) << ",\"" << normal_cell << "\"," << row.trace_len
            << "\n";
    }
    if (!out_path.empty()) write_file(out_path, csv.str());
    else std::cout << csv.str();
    return 0;
}

std::string model_name(const IitakaType& t) {
    std::string name = to_string(t.tag);
    if (t.beta) name += "(beta=" + to_string(*t.beta) + ")";
    return name;
}

int run_iitaka(const std::string& type_text, std::optional<long long> beta, bool counterexample) {
    IitakaType t;
    t.tag = parse_iitaka_tag(type_text);
    if (beta) t.beta = Int(*beta);

    if (!counterexample) {
        const LogSurfacePair model = build_model(t);
        std::cout << emit_pair_document(PairDocument{model_name(t), model});
        return 0;
    }

    const ModelReport rep = build_counterexample(t);
    const Palette p = palette();
    std::cout << "type: " << model_name(rep.type) << "\n";
    std::cout << "initial type: " << format_shape(build_model(t).shape) << "\n";
    std::cout << "q before: " << rep.q_before << "\n";
    std::cout << "attachments:";
    for (const SurgeryStep& s : rep.attachments) std::cout << " [" << describe_step(s) << "]";
    std::cout << "\n";
    if (!rep.extra_pivots.empty()) {
        std::cout << "extra pivots:";
        for (const SurgeryStep& s : rep.extra_pivots) std::cout << " [" << describe_step(s) << "]";
        std::cout << "\n";
    }
    std::cout << "q after: " << rep.q_after << "\n";
    std::cout << "final type: " << format_shape(rep.pair.shape) << "\n";
    for (const std::string& note : rep.b2_check.notes) std::cout << "note: " << note << "\n";
    std::cout << "adjacent-pair remainders:\n";
    for (const PairVerdict& pv : rep.b2_check.witnessing_pairs)
        std::cout << "  (D" << pv.i + 1 << ", D" << pv.j + 1 << "): "
                  << (pv.remainder_negative_definite ? "negative definite" : "not negative definite")
                  << "\n";
    if (rep.b2_check.fails)
        std::cout << "B2: " << p.red << "FAILS" << p.reset
                  << " -- at most finitely many A^1 curves\n";
    else
        std::cout << "B2: holds on this model -- no finiteness certificate\n";
    return 0;
}

std::vector<long long> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<long long> out;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        const auto begin = token.find_first_not_of(" \t");
        if (begin == std::string::npos)
            throw std::invalid_argument(what + ": empty entry in list '" + text + "'");
        const auto end = token.find_last_not_of(" \t");
        token = token.substr(begin, end - begin + 1);
        size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument(what + ": not an integer: '" + token + "'");
        }
        if (used != token.size())
            throw std::invalid_argument(what + ": not an integer: '" + token + "'");
        out.push_back(value);
    }
    if (out.empty() && !text.empty())
        throw std::invalid_argument(what + ": expected a comma-separated integer list");
    return out;
}

int run_singularity(const std::string& chain_text) {
    IntVec chain;
    for (long long v : parse_int_list(chain_text, "--chain")) chain.emplace_back(v);
    const auto [a, b] = cyclic_quotient_invariants(chain);
    std::cout << "a/b = " << a << "/" << b << " (a=" << a << ", b=" << b << ")\n";
    return 0;
}

int run_lemma33(long long modulus, const std::string& gens_text, long long a, long long target) {
    FiniteGroupModel model;
    model.modulus = modulus;
    if (!gens_text.empty()) model.subgroup_gens = parse_int_list(gens_text, "--gens");
    const std::optional<MarkedPoint> found = find_marked_point(model, a, target);
    if (found) std::cout << "p = " << found->p << "\n";
    else std::cout << "none\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculator for anticanonical boundary cycles on rational surfaces"};
    app.require_subcommand(1);

    std::string classify_input, classify_dot;
    bool classify_json = false;
    CLI::App* classify = app.add_subcommand(
        "classify", "Normalize a pair to its canonical class and decide A^1-curve abundance");
    classify->add_option("input", classify_input, "pair document (JSON)")->required();
    classify->add_flag("--json", classify_json, "emit a machine-readable report with the trace");
    classify->add_option("--dot", classify_dot, "write the boundary dual graph (DOT) to FILE");

    std::string apply_input, apply_script, apply_out;
    bool apply_trace = false;
    CLI::App* apply = app.add_subcommand("apply", "Run a surgery script over a pair");
    apply->add_option("input", apply_input, "pair document (JSON)")->required();
    apply->add_option("--script", apply_script, "script document (JSON)")->required();
    apply->add_flag("--trace", apply_trace,
                    "print every intermediate type vector, one per line, instead of the pair");
    apply->add_option("--out", apply_out, "write the transformed pair document to FILE");

    int enum_max_n = 0;
    long long enum_min = 0, enum_max = 0;
    std::string enum_out;
    CLI::App* enumerate_cmd =
        app.add_subcommand("enumerate", "Tabulate all circular types in a box as CSV");
    enumerate_cmd->add_option("--max-n", enum_max_n, "largest cycle length")->required();
    enumerate_cmd->add_option("--min-lambda", enum_min, "smallest self-intersection")->required();
    enumerate_cmd->add_option("--max-lambda", enum_max, "largest self-intersection")->required();
    enumerate_cmd->add_option("--out", enum_out, "write the CSV to FILE");

    std::string iitaka_type;
    long long iitaka_beta = 0;
    bool iitaka_counter = false;
    CLI::App* iitaka = app.add_subcommand(
        "iitaka", "Build a minimal-model pair from the catalogue, or its finiteness counterexample");
    iitaka->add_option("--type", iitaka_type, "catalogue tag (a-i ... a-iii', b-i ... b-xiii)")
        ->required();
    CLI::Option* beta_opt =
        iitaka->add_option("--beta", iitaka_beta, "Hirzebruch parameter (b-iii, b-vii, b-xiii)");
    iitaka->add_flag("--counterexample", iitaka_counter,
                     "attach half points to kill the irregularity and certify B2 failure");

    std::string sing_chain;
    CLI::App* singularity = app.add_subcommand(
        "singularity", "Cyclic quotient invariants (a, b) of a contractible chain");
    singularity->add_option("--chain", sing_chain, "comma-separated self-intersections, all <= -2")
        ->required();

    long long l33_modulus = 0, l33_a = 0, l33_target = 0;
    std::string l33_gens;
    CLI::App* lemma33 = app.add_subcommand(
        "lemma33", "Search the finite group model for a marked residue");
    lemma33->add_option("--modulus", l33_modulus, "ambient group is Z/N")->required();
    lemma33->add_option("--gens", l33_gens, "comma-separated subgroup generators (default none)");
    lemma33->add_option("--a", l33_a, "pairing degree")->required();
    lemma33->add_option("--target", l33_target, "required value of a.p")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (classify->parsed()) return run_classify(classify_input, classify_json, classify_dot);
        if (apply->parsed()) return run_apply(apply_input, apply_script, apply_trace, apply_out);
        if (enumerate_cmd->parsed()) return run_enumerate(enum_max_n, enum_min, enum_max, enum_out);
        if (iitaka->parsed())
            return run_iitaka(iitaka_type,
                              beta_opt->count() > 0 ? std::optional<long long>(iitaka_beta)
                                                    : std::nullopt,
                              iitaka_counter);
        if (singularity->parsed()) return run_singularity(sing_chain);
        if (lemma33->parsed()) return run_lemma33(l33_modulus, l33_gens, l33_a, l33_target);
    } catch (const ScriptError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return 0;
}
