#include "logk3/iitaka.hpp"

#include <map>

namespace logk3 {

namespace {

IntersectionLattice projective_plane() {
    IMat gram(1, 1);
    gram.at(0, 0) = 1;
    return make_lattice(std::move(gram), {Int(-3)});
}

IntersectionLattice hirzebruch(const Int& beta) {
    IMat gram(2, 2);
    gram.at(0, 0) = -beta;
    gram.at(0, 1) = 1;
    gram.at(1, 0) = 1;
    gram.at(1, 1) = 0;
    return make_lattice(std::move(gram), {Int(-2), -(beta + 2)});
}

LogSurfacePair finish(BoundaryShape shape, IntersectionLattice lattice,
                      std::vector<IntVec> classes) {
    LogSurfacePair s;
    s.shape = std::move(shape);
    Realization r;
    r.lattice = std::move(lattice);
    for (IntVec& c : classes) r.boundary_classes.emplace_back(std::move(c));
    s.realization = std::move(r);
    ValidationReport rep = validate_pair(s, false); // throws on any pairing mismatch
    if (!rep.k_plus_d_zero || !*rep.k_plus_d_zero)
        throw std::logic_error("catalogue model does not satisfy K + D = 0");
    if (!rep.hodge_signature_ok || !*rep.hodge_signature_ok)
        throw std::logic_error("catalogue model has a non-surface signature");
    return s;
}

bool takes_beta(IitakaTag tag) {
    return tag == IitakaTag::BIII || tag == IitakaTag::BVII || tag == IitakaTag::BXIII;
}

Int checked_beta(const IitakaType& t) {
    if (!takes_beta(t.tag)) {
        if (t.beta)
            throw std::invalid_argument("type " + to_string(t.tag) + " does not take a beta parameter");
        return 0;
    }
    if (!t.beta || *t.beta < 2)
        throw std::invalid_argument("type " + to_string(t.tag) + " requires beta >= 2");
    return *t.beta;
}

int irregularity(const LogSurfacePair& s) {
    return kernel_dim(s.realization->lattice, s.realization->boundary_classes);
}

} // namespace

std::string to_string(IitakaTag tag) {
    switch (tag) {
    case IitakaTag::AI: return "a-i";
    case IitakaTag::AII: return "a-ii";
    case IitakaTag::AIII: return "a-iii";
    case IitakaTag::AIIIPrime: return "a-iii'";
    case IitakaTag::BI: return "b-i";
    case IitakaTag::BII: return "b-ii";
    case IitakaTag::BIII: return "b-iii";
    case IitakaTag::BIV: return "b-iv";
    case IitakaTag::BV: return "b-v";
    case IitakaTag::BVI: return "b-vi";
    case IitakaTag::BVII: return "b-vii";
    case IitakaTag::BVIII: return "b-viii";
    case IitakaTag::BIX: return "b-ix";
    case IitakaTag::BX: return "b-x";
    case IitakaTag::BXI: return "b-xi";
    case IitakaTag::BXII: return "b-xii";
    case IitakaTag::BXIII: return "b-xiii";
    }
    throw std::logic_error("unknown catalogue tag");
}

IitakaTag parse_iitaka_tag(const std::string& text) {
    static const std::map<std::string, IitakaTag> table = {
        {"a-i", IitakaTag::AI},          {"a-ii", IitakaTag::AII},
        {"a-iii", IitakaTag::AIII},      {"a-iii'", IitakaTag::AIIIPrime},
        {"a-iii′", IitakaTag::AIIIPrime},
        {"b-i", IitakaTag::BI},          {"b-ii", IitakaTag::BII},
        {"b-iii", IitakaTag::BIII},      {"b-iv", IitakaTag::BIV},
        {"b-v", IitakaTag::BV},          {"b-vi", IitakaTag::BVI},
        {"b-vii", IitakaTag::BVII},      {"b-viii", IitakaTag::BVIII},
        {"b-ix", IitakaTag::BIX},        {"b-x", IitakaTag::BX},
        {"b-xi", IitakaTag::BXI},        {"b-xii", IitakaTag::BXII},
        {"b-xiii", IitakaTag::BXIII},
    };
    auto it = table.find(text);
    if (it == table.end()) throw std::invalid_argument("unknown catalogue tag: " + text);
    return it->second;
}

LogSurfacePair build_model(const IitakaType& t) {
    const Int beta = checked_beta(t);
    switch (t.tag) {
    case IitakaTag::AI: // smooth plane cubic
        return finish(BoundaryShape::elliptic(9), projective_plane(), {{Int(3)}});
    case IitakaTag::AII: // smooth (2,2) curve on F_0
        return finish(BoundaryShape::elliptic(8), hirzebruch(0), {{Int(2), Int(2)}});
    case IitakaTag::AIII: // smooth anticanonical curve on F_2 missing the (-2)-section
        return finish(BoundaryShape::elliptic(8), hirzebruch(2), {{Int(2), Int(4)}});
    case IitakaTag::AIIIPrime: // F_2: 2-cycle C + 4F, C
        return finish(make_circular({Int(6), Int(-2)}), hirzebruch(2),
                      {{Int(1), Int(4)}, {Int(1), Int(0)}});
    case IitakaTag::BI: // three lines
        return finish(make_circular({Int(1), Int(1), Int(1)}), projective_plane(),
                      {{Int(1)}, {Int(1)}, {Int(1)}});
    case IitakaTag::BII: // C + F + C + F on F_0
        return finish(make_circular({Int(0), Int(0), Int(0), Int(0)}), hirzebruch(0),
                      {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(0)}, {Int(0), Int(1)}});
    case IitakaTag::BIII: // (C + beta F) + F + C + F on F_beta
        return finish(make_circular({beta, Int(0), -beta, Int(0)}), hirzebruch(beta),
                      {{Int(1), beta}, {Int(0), Int(1)}, {Int(1), Int(0)}, {Int(0), Int(1)}});
    case IitakaTag::BIV: // line + conic
        return finish(make_circular({Int(1), Int(4)}), projective_plane(), {{Int(1)}, {Int(2)}});
    case IitakaTag::BV: // two (1,1) curves on F_0
        return finish(make_circular({Int(2), Int(2)}), hirzebruch(0),
                      {{Int(1), Int(1)}, {Int(1), Int(1)}});
    case IitakaTag::BVI: // two C + 2F curves on F_2
        return finish(make_circular({Int(2), Int(2)}), hirzebruch(2),
                      {{Int(1), Int(2)}, {Int(1), Int(2)}});
    case IitakaTag::BVII: // F + C + (C + (beta+1) F) on F_beta
        return finish(make_circular({Int(0), -beta, beta + 2}), hirzebruch(beta),
                      {{Int(0), Int(1)}, {Int(1), Int(0)}, {Int(1), beta + 1}});
    case IitakaTag::BVIII: // C + F + (C + F) on F_0
        return finish(make_circular({Int(0), Int(0), Int(2)}), hirzebruch(0),
                      {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(1)}});
    case IitakaTag::BIX: // nodal plane cubic
        return finish(BoundaryShape::nodal(9), projective_plane(), {{Int(3)}});
    case IitakaTag::BX: // nodal (2,2) curve on F_0
        return finish(BoundaryShape::nodal(8), hirzebruch(0), {{Int(2), Int(2)}});
    case IitakaTag::BXI: // nodal anticanonical curve on F_2
        return finish(BoundaryShape::nodal(8), hirzebruch(2), {{Int(2), Int(4)}});
    case IitakaTag::BXII: // (C + 2F) + C on F_0
        return finish(make_circular({Int(4), Int(0)}), hirzebruch(0),
                      {{Int(1), Int(2)}, {Int(1), Int(0)}});
    case IitakaTag::BXIII: // (C + (beta+2) F) + C on F_beta
        return finish(make_circular({beta + 4, -beta}), hirzebruch(beta),
                      {{Int(1), beta + 2}, {Int(1), Int(0)}});
    }
    throw std::logic_error("unknown catalogue tag");
}

ModelReport build_counterexample(const IitakaType& t) {
    SurgeryScript attachments;
    SurgeryScript pivots;
    const Int beta = checked_beta(t);
    switch (t.tag) {
    case IitakaTag::BI:
    case IitakaTag::BII:
        attachments = {HalfPointAttach{0}, HalfPointAttach{1}};
        break;
    case IitakaTag::BIII:
        attachments = {HalfPointAttach{1}, HalfPointAttach{0}};
        for (Int k = 0; k < beta - 1; ++k) pivots.push_back(Pivot{3, PivotDirection::Succ});
        break;
    case IitakaTag::BIV:
        attachments = {HalfPointAttach{1}};
        break;
    case IitakaTag::BV:
    case IitakaTag::BVI:
        attachments = {HalfPointAttach{0}};
        break;
    case IitakaTag::BVII:
        attachments = {HalfPointAttach{2}};
        for (Int k = 0; k < beta; ++k) pivots.push_back(Pivot{0, PivotDirection::Pred});
        break;
    case IitakaTag::BVIII:
        attachments = {HalfPointAttach{2}};
        break;
    default:
        throw std::invalid_argument("counterexamples exist for the irregular types b-i ... b-viii");
    }

    ModelReport r;
    r.type = t;
    r.attachments = std::move(attachments);
    r.extra_pivots = std::move(pivots);

    LogSurfacePair model = build_model(t);
    r.q_before = irregularity(model);

    auto [attached, at] = run_script(model, r.attachments);
    auto [final_model, pt] = run_script(attached, r.extra_pivots);
    r.q_after = irregularity(final_model);
    r.b2_check = b2_fails_on_model(final_model);
    r.pair = std::move(final_model);

    ValidationReport rep = validate_pair(r.pair, true);
    if (!rep.k_plus_d_zero || !*rep.k_plus_d_zero)
        throw std::logic_error("counterexample build broke K + D = 0");
    if (r.q_after != 0)
        throw std::logic_error("counterexample build left a nonzero irregularity");
    if (!r.b2_check.fails)
        throw std::logic_error("counterexample model unexpectedly admits a nef-and-big class");
    return r;
}

std::vector<IitakaTag> iitaka_classes_for(const CanonicalClass& c) {
    switch (c.label) {
    case CanonicalLabel::C0:
        return {IitakaTag::AI, IitakaTag::AII, IitakaTag::AIII, IitakaTag::AIIIPrime};
    case CanonicalLabel::C1:
        return {IitakaTag::BIX, IitakaTag::BX, IitakaTag::BXI};
    case CanonicalLabel::C2:
        return {IitakaTag::BIX, IitakaTag::BX, IitakaTag::BXI, IitakaTag::BXII, IitakaTag::BXIII};
    case CanonicalLabel::C3:
        return {IitakaTag::BXII};
    case CanonicalLabel::C4:
        return {IitakaTag::BIV, IitakaTag::BV, IitakaTag::BVI};
    case CanonicalLabel::Inconsistent:
        throw std::invalid_argument("no minimal models exist for an inconsistent pair");
    }
    throw std::logic_error("unknown canonical label");
}

std::pair<Int, Int> cyclic_quotient_invariants(const IntVec& chain) {
    if (chain.empty()) throw std::invalid_argument("chain must be nonempty");
    for (const Int& l : chain)
        if (l > -2) throw std::invalid_argument("chain entries must be <= -2");

    // Tail-first evaluation of the Hirzebruch-Jung fraction
    // a/b = c_1 - 1/(c_2 - 1/(...)) with c_i = -l_i >= 2.  Every partial
    // value exceeds 1, so no division by zero can occur.
    Rat value;
    bool have_tail = false;
    for (size_t idx = chain.size(); idx-- > 0;) {
        Rat cur(-chain[idx]);
        if (have_tail) cur -= 1 / value;
        value = std::move(cur);
        have_tail = true;
    }
    return {numerator(value), denominator(value)};
}

} // namespace logk3
