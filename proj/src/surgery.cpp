#include "logk3/surgery.hpp"

#include <algorithm>

namespace logk3 {

namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

int mod(int a, int n) { return ((a % n) + n) % n; }

// Shape arithmetic and lattice replay must always agree: the lattice is the
// oracle for the combinatorial rules, so a mismatch is a bug in the calculus,
// never a user error.
void assert_consistent(const LogSurfacePair& s) {
    if (!s.realization) return;
    const Realization& r = *s.realization;
    const int n = s.shape.n_components();
    if (static_cast<int>(r.boundary_classes.size()) != n)
        throw std::logic_error("surgery left boundary class count out of sync with shape");
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (pairing(r.lattice, r.boundary_classes[static_cast<size_t>(i)],
                        r.boundary_classes[static_cast<size_t>(j)]) != expected_pairing(s.shape, i, j))
                throw std::logic_error("surgery left lattice pairings out of sync with shape");
}

} // namespace

std::pair<LogSurfacePair, TraceEntry> canonical_blowup(const LogSurfacePair& s,
                                                       std::pair<int, int> edge, int point_index) {
    if (point_index != 0 && point_index != 1)
        throw std::invalid_argument("point index must be 0 or 1");
    const auto [i, j] = edge;

    LogSurfacePair out;
    std::vector<Int> mult; // multiplicity of the center on each old component
    int insert_pos = 0;    // where the exceptional component joins the cycle

    switch (s.shape.kind) {
    case BoundaryKind::Elliptic:
        throw std::invalid_argument("elliptic boundary has no singular point to blow up");
    case BoundaryKind::Nodal: {
        if (i != 0 || j != 0)
            throw std::invalid_argument("nodal boundary: the only center is the node");
        // (pi* D - 2E)^2 = lambda - 4; the transform meets E in the two branches.
        out.shape = make_circular({s.shape.self_int - 4, Int(-1)});
        mult = {Int(2)};
        insert_pos = 1;
        break;
    }
    case BoundaryKind::Circular: {
        const int n = static_cast<int>(s.shape.lambdas.size());
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw std::invalid_argument("component index out of range");
        int p;
        if (j == mod(i + 1, n)) p = i;
        else if (i == mod(j + 1, n)) p = j;
        else throw std::invalid_argument("edge is not adjacent in the cycle");
        const int q = mod(p + 1, n);
        IntVec lam = s.shape.lambdas;
        lam[static_cast<size_t>(p)] -= 1;
        lam[static_cast<size_t>(q)] -= 1;
        insert_pos = p + 1;
        lam.insert(lam.begin() + insert_pos, Int(-1));
        out.shape = make_circular(std::move(lam));
        mult.assign(static_cast<size_t>(n), Int(0));
        mult[static_cast<size_t>(p)] = 1;
        mult[static_cast<size_t>(q)] = 1;
        break;
    }
    }

    TraceEntry entry;
    entry.step = CanonicalBlowup{i, j, point_index};
    entry.before = s.shape;
    entry.after = out.shape;

    if (s.realization) {
        const Realization& r = *s.realization;
        BlowupResult b = blowup_lattice(r.lattice);
        Realization nr;
        nr.lattice = b.lattice;
        for (size_t c = 0; c < r.boundary_classes.size(); ++c) {
            DivisorClass t = b.embed.apply(r.boundary_classes[c]);
            if (mult[c] != 0) t = t - mult[c] * b.e;
            nr.boundary_classes.push_back(std::move(t));
        }
        nr.boundary_classes.insert(nr.boundary_classes.begin() + insert_pos, b.e);
        out.realization = std::move(nr);
        entry.embed = std::move(b.embed);
        entry.exceptional = std::move(b.e);
    }

    assert_consistent(out);
    return {std::move(out), std::move(entry)};
}

std::pair<LogSurfacePair, TraceEntry> canonical_blowdown(const LogSurfacePair& s, int component) {
    if (s.shape.kind != BoundaryKind::Circular)
        throw std::invalid_argument("blowdown requires a circular boundary");
    const int n = static_cast<int>(s.shape.lambdas.size());
    if (component < 0 || component >= n)
        throw std::invalid_argument("component index out of range");
    if (s.shape.lambdas[static_cast<size_t>(component)] != -1)
        throw std::invalid_argument("component is not a (-1)-curve");

    LogSurfacePair out;
    if (n == 2) {
        // the surviving component acquires the node: lambda + (D.E)^2 = lambda + 4
        out.shape = BoundaryShape::nodal(s.shape.lambdas[static_cast<size_t>(1 - component)] + 4);
    } else {
        IntVec lam = s.shape.lambdas;
        lam[static_cast<size_t>(mod(component - 1, n))] += 1;
        lam[static_cast<size_t>(mod(component + 1, n))] += 1;
        lam.erase(lam.begin() + component);
        out.shape = make_circular(std::move(lam));
    }

    TraceEntry entry;
    entry.step = CanonicalBlowdown{component};
    entry.before = s.shape;
    entry.after = out.shape;

    if (s.realization) {
        const Realization& r = *s.realization;
        ContractionResult c = contract_lattice(r.lattice, r.boundary_classes[static_cast<size_t>(component)]);
        Realization nr;
        nr.lattice = c.lattice;
        for (int k = 0; k < n; ++k)
            if (k != component)
                nr.boundary_classes.push_back(c.push.apply(r.boundary_classes[static_cast<size_t>(k)]));
        out.realization = std::move(nr);
        entry.push = std::move(c.push);
    }

    assert_consistent(out);
    return {std::move(out), std::move(entry)};
}

std::pair<LogSurfacePair, TraceEntry> pivot(const LogSurfacePair& s, int component,
                                            PivotDirection direction) {
    if (s.shape.kind != BoundaryKind::Circular)
        throw std::invalid_argument("pivot requires a circular boundary");
    const int n = static_cast<int>(s.shape.lambdas.size());
    if (component < 0 || component >= n)
        throw std::invalid_argument("component index out of range");
    if (s.shape.lambdas[static_cast<size_t>(component)] != 0)
        throw std::invalid_argument("pivot requires a 0-component");

    const int k = component;
    const int nb = direction == PivotDirection::Succ ? mod(k + 1, n) : mod(k - 1, n);
    auto [mid, up] = direction == PivotDirection::Succ ? canonical_blowup(s, {k, nb}, 0)
                                                       : canonical_blowup(s, {nb, k}, 0);

    // Position of the proper transform of the pivoted component: for succ, and
    // for pred at k = 0 (exceptional inserted at the end), it stays at k;
    // otherwise the insertion shifted it to k + 1.
    int down_idx = k;
    bool rotate_right = false;
    if (direction == PivotDirection::Pred) {
        if (k >= 1) down_idx = k + 1;
        else rotate_right = true;
    }
    auto [fin, down] = canonical_blowdown(mid, down_idx);
    if (rotate_right) {
        // relabel so the new 0-component keeps the pivoted position
        std::rotate(fin.shape.lambdas.rbegin(), fin.shape.lambdas.rbegin() + 1,
                    fin.shape.lambdas.rend());
        if (fin.realization)
            std::rotate(fin.realization->boundary_classes.rbegin(),
                        fin.realization->boundary_classes.rbegin() + 1,
                        fin.realization->boundary_classes.rend());
    }

    TraceEntry entry;
    entry.step = Pivot{component, direction};
    entry.before = s.shape;
    entry.after = fin.shape;
    entry.embed = std::move(up.embed);
    entry.push = std::move(down.push);
    entry.exceptional = std::move(up.exceptional);

    assert_consistent(fin);
    return {std::move(fin), std::move(entry)};
}

std::pair<LogSurfacePair, TraceEntry> half_point_attach(const LogSurfacePair& s, int component) {
    if (!s.realization)
        throw std::invalid_argument("requires full-lattice realization");
    const int n = s.shape.n_components();
    if (component < 0 || component >= n)
        throw std::invalid_argument("component index out of range");

    LogSurfacePair out;
    out.shape = s.shape;
    if (out.shape.kind == BoundaryKind::Circular)
        out.shape.lambdas[static_cast<size_t>(component)] -= 1;
    else
        out.shape.self_int -= 1;

    const Realization& r = *s.realization;
    BlowupResult b = blowup_lattice(r.lattice);
    Realization nr;
    nr.lattice = b.lattice;
    for (int c = 0; c < n; ++c) {
        DivisorClass t = b.embed.apply(r.boundary_classes[static_cast<size_t>(c)]);
        if (c == component) t = t - b.e;
        nr.boundary_classes.push_back(std::move(t));
    }
    out.realization = std::move(nr);

    TraceEntry entry;
    entry.step = HalfPointAttach{component};
    entry.before = s.shape;
    entry.after = out.shape;
    entry.embed = std::move(b.embed);
    entry.exceptional = std::move(b.e);

    assert_consistent(out);
    return {std::move(out), std::move(entry)};
}

std::pair<LogSurfacePair, TraceEntry> apply_step(const LogSurfacePair& s, const SurgeryStep& step) {
    return std::visit(
        overloaded{
            [&](const CanonicalBlowup& b) { return canonical_blowup(s, {b.i, b.j}, b.point_index); },
            [&](const CanonicalBlowdown& b) { return canonical_blowdown(s, b.component); },
            [&](const Pivot& p) { return pivot(s, p.component, p.direction); },
            [&](const HalfPointAttach& h) { return half_point_attach(s, h.component); },
        },
        step);
}

DivisorClass total_transform_step(const TraceEntry& entry, const DivisorClass& cls) {
    DivisorClass c = cls;
    if (entry.embed) c = entry.embed->apply(c);
    if (entry.push) c = entry.push->apply(c);
    return c;
}

std::pair<LogSurfacePair, SurgeryTrace> run_script(
    const LogSurfacePair& s, const SurgeryScript& script,
    std::vector<std::pair<std::string, DivisorClass>> tracked) {
    if (!tracked.empty() && !s.realization)
        throw std::invalid_argument("tracked classes require a full-lattice realization");
    SurgeryTrace trace;
    trace.initial = s.shape;
    trace.tracked_classes = std::move(tracked);
    LogSurfacePair cur = s;
    for (size_t idx = 0; idx < script.size(); ++idx) {
        try {
            auto [next, entry] = apply_step(cur, script[idx]);
            for (auto& [name, cls] : trace.tracked_classes) cls = total_transform_step(entry, cls);
            trace.entries.push_back(std::move(entry));
            cur = std::move(next);
        } catch (const std::invalid_argument& ex) {
            throw ScriptError(idx, ex.what());
        }
    }
    return {std::move(cur), std::move(trace)};
}

DivisorClass proper_transform(const SurgeryTrace& trace, const DivisorClass& cls,
                              const std::vector<Int>& mults) {
    size_t carriers = 0;
    for (const TraceEntry& e : trace.entries) {
        if (!e.embed && !e.push)
            throw std::invalid_argument("proper transform requires a full-lattice trace");
        if (std::holds_alternative<CanonicalBlowup>(e.step) ||
            std::holds_alternative<HalfPointAttach>(e.step))
            ++carriers;
    }
    if (mults.size() != carriers)
        throw std::invalid_argument("expected " + std::to_string(carriers) +
                                    " multiplicities, got " + std::to_string(mults.size()));

    DivisorClass c = cls;
    size_t mi = 0;
    for (const TraceEntry& e : trace.entries) {
        if (e.embed) c = e.embed->apply(c);
        if (std::holds_alternative<CanonicalBlowup>(e.step) ||
            std::holds_alternative<HalfPointAttach>(e.step)) {
            if (mults[mi] != 0) c = c - mults[mi] * *e.exceptional;
            ++mi;
        }
        if (e.push) c = e.push->apply(c);
    }
    return c;
}

} // namespace logk3
