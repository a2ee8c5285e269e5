#include "logk3/classify.hpp"

#include <algorithm>
#include <set>

namespace logk3 {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

IntVec rotated_left(const IntVec& v, size_t r) {
    IntVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[(i + r) % v.size()];
    return out;
}

// normal_type rotations: pure relabelings that make the class invariants read
// off positionally.
IntVec c2_label(const IntVec& lam) {
    for (size_t t = 0; t < lam.size(); ++t)
        if (lam[t] >= -1) return rotated_left(lam, t); // at most one such entry
    return lam; // every entry <= -2
}

IntVec c3_label(const IntVec& lam) {
    return lam[1] == 0 ? lam : IntVec{lam[1], lam[0]};
}

} // namespace

std::string to_string(CanonicalLabel label) {
    switch (label) {
    case CanonicalLabel::C0: return "C0";
    case CanonicalLabel::C1: return "C1";
    case CanonicalLabel::C2: return "C2";
    case CanonicalLabel::C3: return "C3";
    case CanonicalLabel::C4: return "C4";
    case CanonicalLabel::Inconsistent: return "Inconsistent";
    }
    throw std::logic_error("unknown canonical label");
}

NormalizeResult normalize(const LogSurfacePair& s) {
    NormalizeResult res;
    res.trace.initial = s.shape;
    LogSurfacePair cur = s;

    // Hard backstop for the termination argument: every contraction removes a
    // component and every pivot moves one fixed neighbor a step toward -1, so
    // the rewriting length is linear in n + sum |lambda_i|.
    Int budget = 1000;
    if (cur.shape.kind == BoundaryKind::Circular) {
        budget += 50 * Int(cur.shape.lambdas.size());
        for (const Int& l : cur.shape.lambdas) budget += 50 * abs(l);
    }

    for (Int steps = 0;; ++steps) {
        if (steps > budget)
            throw std::logic_error("normalization exceeded its step bound");

        if (cur.shape.kind == BoundaryKind::Elliptic) {
            res.cls = {CanonicalLabel::C0, {}, {}};
            break;
        }
        if (cur.shape.kind == BoundaryKind::Nodal) {
            res.cls = {CanonicalLabel::C1, {}, {}};
            break;
        }

        const IntVec& lam = cur.shape.lambdas;
        const int n = static_cast<int>(lam.size());

        int minus_one = -1;
        for (int i = 0; i < n; ++i)
            if (lam[static_cast<size_t>(i)] == -1) { minus_one = i; break; }
        if (minus_one >= 0) {
            auto [next, entry] = canonical_blowdown(cur, minus_one);
            res.trace.entries.push_back(std::move(entry));
            cur = std::move(next);
            continue;
        }

        if (n == 2) {
            if (lam[0] == 0 || lam[1] == 0)
                res.cls = {CanonicalLabel::C3, c3_label(lam), {}};
            else if (lam[0] <= -2 || lam[1] <= -2)
                res.cls = {CanonicalLabel::C2,
                           lam[0] >= 1 || lam[1] <= -2 ? lam : IntVec{lam[1], lam[0]},
                           {}};
            else
                res.cls = {CanonicalLabel::C4, lam, {}};
            break;
        }

        int zero = -1;
        for (int i = 0; i < n; ++i)
            if (lam[static_cast<size_t>(i)] == 0) { zero = i; break; }
        if (zero >= 0) {
            // Drive a neighbor to -1: the direction neighbor loses 1 per
            // pivot, the opposite one gains 1.  pred converges when the
            // predecessor starts >= 0 or the successor starts <= -2; the
            // mirror choice covers the remaining case (successor >= 0,
            // predecessor <= -2).
            const Int& pred = lam[static_cast<size_t>(mod(zero - 1, n))];
            const Int& succ = lam[static_cast<size_t>(mod(zero + 1, n))];
            PivotDirection dir =
                (succ <= -2 || pred >= 0) ? PivotDirection::Pred : PivotDirection::Succ;
            auto [next, entry] = pivot(cur, zero, dir);
            res.trace.entries.push_back(std::move(entry));
            cur = std::move(next);
            continue;
        }

        // no zeros and no -1s left
        int soft = 0; // entries >= -1, i.e. >= 1 here
        for (const Int& l : lam)
            if (l >= -1) ++soft;
        if (soft <= 1)
            res.cls = {CanonicalLabel::C2, c2_label(lam), {}};
        else
            res.cls = {CanonicalLabel::Inconsistent, {},
                       "Hodge index: two components of nonnegative self-intersection force "
                       "D_i.D_j = 2 and n = 2"};
        break;
    }

    res.normal = std::move(cur);
    return res;
}

B2CheckResult b2_fails_on_model(const LogSurfacePair& s) {
    B2CheckResult r;
    r.tested_shape = s.shape;

    if (s.shape.kind != BoundaryKind::Circular) {
        r.fails = false;
        r.notes.push_back("single-component boundary: the one-component escape clause applies");
        return r;
    }

    LogSurfacePair model = s;
    if (model.shape.lambdas.size() == 2) {
        // On a bare 2-cycle removing an adjacent pair removes everything, so
        // the test is vacuous.  Blow up both intersection points first; the
        // two exceptional components then witness the obstruction.
        auto [m1, e1] = canonical_blowup(model, {0, 1}, 0);
        auto [m2, e2] = canonical_blowup(m1, {2, 0}, 1);
        model = std::move(m2);
        r.tested_shape = model.shape;
        r.notes.push_back("2-cycle extended by blowing up both intersection points: " +
                          format_type_vector(model.shape.lambdas));
    }

    if (model.realization) {
        if (kernel_dim(model.realization->lattice, model.realization->boundary_classes) == 0)
            r.notes.push_back("boundary classes verified linearly independent");
        else
            r.notes.push_back("boundary classes are linearly dependent; "
                              "the Hodge-index reduction does not apply");
    } else {
        r.notes.push_back("type-only model: linear independence of the boundary components "
                          "is assumed (holds on every genuine pair)");
    }

    const int n = static_cast<int>(model.shape.lambdas.size());
    bool any_ok = false;
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        bool nd;
        if (model.realization) {
            std::vector<DivisorClass> rest;
            for (int k = 0; k < n; ++k)
                if (k != i && k != j)
                    rest.push_back(model.realization->boundary_classes[static_cast<size_t>(k)]);
            nd = is_negative_definite(model.realization->lattice, rest);
        } else {
            std::vector<int> keep;
            for (int k = 0; k < n; ++k)
                if (k != i && k != j) keep.push_back(k);
            IMat g(static_cast<int>(keep.size()), static_cast<int>(keep.size()));
            for (size_t a = 0; a < keep.size(); ++a)
                for (size_t b = 0; b < keep.size(); ++b)
                    g.at(static_cast<int>(a), static_cast<int>(b)) =
                        expected_pairing(model.shape, keep[a], keep[b]);
            nd = negdef_by_minors(g);
        }
        r.witnessing_pairs.push_back({i, j, nd});
        any_ok = any_ok || nd;
    }
    r.fails = !any_ok;
    return r;
}

AbundanceVerdict a1_abundance(const LogSurfacePair& s) {
    NormalizeResult nr = normalize(s);
    AbundanceVerdict v;
    v.cls = nr.cls;
    switch (nr.cls.label) {
    case CanonicalLabel::C0:
    case CanonicalLabel::C1:
    case CanonicalLabel::C2:
    case CanonicalLabel::C3:
        v.kind = AbundanceKind::CountablyInfinite;
        break;
    case CanonicalLabel::C4: {
        v.kind = AbundanceKind::NotInfinite;
        auto [m1, e1] = canonical_blowup(nr.normal, {0, 1}, 0);
        auto [m2, e2] = canonical_blowup(m1, {2, 0}, 1);
        v.witness_check = b2_fails_on_model(m2);
        v.b2_witness_model = std::move(m2);
        if (!v.witness_check->fails)
            throw std::logic_error("C4 witness model unexpectedly admits a nef-and-big class");
        break;
    }
    case CanonicalLabel::Inconsistent:
        v.kind = AbundanceKind::Inconsistent;
        break;
    }
    return v;
}

IntVec necklace_canonical(const IntVec& v) {
    IntVec best = v;
    IntVec rev(v.rbegin(), v.rend());
    for (size_t r = 0; r < v.size(); ++r) {
        IntVec a = rotated_left(v, r);
        if (a < best) best = std::move(a);
        IntVec b = rotated_left(rev, r);
        if (b < best) best = std::move(b);
    }
    return best;
}

std::vector<EnumerationRow> enumerate(int max_n, const Int& lambda_min, const Int& lambda_max) {
    if (max_n < 2) throw std::invalid_argument("max_n must be at least 2");
    std::vector<EnumerationRow> rows;
    if (lambda_min > lambda_max) return rows;

    std::set<IntVec> reps;
    for (int n = 2; n <= max_n; ++n) {
        IntVec v(static_cast<size_t>(n), lambda_min);
        for (;;) {
            reps.insert(necklace_canonical(v));
            int pos = n - 1;
            while (pos >= 0 && v[static_cast<size_t>(pos)] == lambda_max) {
                v[static_cast<size_t>(pos)] = lambda_min;
                --pos;
            }
            if (pos < 0) break;
            v[static_cast<size_t>(pos)] += 1;
        }
    }

    for (const IntVec& type : reps) {
        LogSurfacePair pair;
        pair.shape = make_circular(type);
        NormalizeResult nr = normalize(pair);
        EnumerationRow row;
        row.type = type;
        row.cls = nr.cls;
        row.normal_shape = nr.normal.shape;
        row.trace_len = nr.trace.entries.size();
        switch (nr.cls.label) {
        case CanonicalLabel::C4: row.verdict = AbundanceKind::NotInfinite; break;
        case CanonicalLabel::Inconsistent: row.verdict = AbundanceKind::Inconsistent; break;
        default: row.verdict = AbundanceKind::CountablyInfinite; break;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace logk3
