#pragma once

#include "logk3/classify.hpp"
#include "logk3/iitaka.hpp"
#include "logk3/surgery.hpp"

#include <random>
#include <vector>

// Shared generators for the randomized property tests.  Everything is seeded
// explicitly, so failures replay deterministically.

namespace logk3::testsupport {

using Rng = std::mt19937_64;

inline Int rand_int(Rng& rng, long long lo, long long hi) {
    return Int(std::uniform_int_distribution<long long>(lo, hi)(rng));
}

inline IntVec random_type_vector(Rng& rng, int max_n, long long lo, long long hi) {
    const int n = std::uniform_int_distribution<int>(2, max_n)(rng);
    IntVec v;
    for (int i = 0; i < n; ++i) v.push_back(rand_int(rng, lo, hi));
    return v;
}

// A purely numerical full-lattice realization of a circular shape: the cycle
// Gram itself with a caller-chosen canonical class (contractions inside
// surgery steps need adjunction K.D_i = -2 - lambda_i to hold).  No surface
// has to exist; the pairing arithmetic is what the oracle checks.
inline LogSurfacePair numerically_realized(const IntVec& lambdas, IntVec k) {
    const BoundaryShape shape = make_circular(lambdas);
    const int n = shape.n_components();
    IMat g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.at(i, j) = expected_pairing(shape, i, j);
    Realization r;
    r.lattice = make_lattice(std::move(g), std::move(k));
    for (int i = 0; i < n; ++i) {
        IntVec c(static_cast<size_t>(n));
        c[static_cast<size_t>(i)] = 1;
        r.boundary_classes.emplace_back(std::move(c));
    }
    return {shape, std::move(r)};
}

// Every step whose precondition holds on the current pair.  Attachments are
// only listed on request: they change the open part (they are not log
// isomorphisms), so invariance tests must exclude them.
inline std::vector<SurgeryStep> valid_steps(const LogSurfacePair& s, bool include_attach) {
    std::vector<SurgeryStep> out;
    const BoundaryShape& sh = s.shape;
    if (sh.kind == BoundaryKind::Elliptic) return out;
    if (sh.kind == BoundaryKind::Nodal) {
        out.push_back(CanonicalBlowup{0, 0, 0});
        if (include_attach && s.realization) out.push_back(HalfPointAttach{0});
        return out;
    }
    const int n = sh.n_components();
    for (int i = 0; i < n; ++i) {
        out.push_back(CanonicalBlowup{i, (i + 1) % n, 0});
        if (sh.lambdas[static_cast<size_t>(i)] == -1) out.push_back(CanonicalBlowdown{i});
        if (sh.lambdas[static_cast<size_t>(i)] == 0) {
            out.push_back(Pivot{i, PivotDirection::Succ});
            out.push_back(Pivot{i, PivotDirection::Pred});
        }
        if (include_attach && s.realization) out.push_back(HalfPointAttach{i});
    }
    if (n == 2) out.push_back(CanonicalBlowup{0, 1, 1}); // the other point
    return out;
}

// A random script of log isomorphisms (blowups, blowdowns, pivots) valid on
// the given pair, at most max_len steps.
inline SurgeryScript random_log_iso_script(const LogSurfacePair& s, Rng& rng, int max_len) {
    SurgeryScript script;
    LogSurfacePair cur = s;
    const int len = std::uniform_int_distribution<int>(0, max_len)(rng);
    for (int i = 0; i < len; ++i) {
        const std::vector<SurgeryStep> steps = valid_steps(cur, false);
        if (steps.empty()) break;
        const SurgeryStep step =
            steps[std::uniform_int_distribution<size_t>(0, steps.size() - 1)(rng)];
        auto [next, entry] = apply_step(cur, step);
        script.push_back(step);
        cur = std::move(next);
    }
    return script;
}

// The circular full-lattice catalogue entries: seeds for randomized
// lattice-vs-shape agreement runs.
inline std::vector<IitakaType> circular_catalogue() {
    std::vector<IitakaType> types;
    types.push_back({IitakaTag::AIIIPrime, {}});
    types.push_back({IitakaTag::BI, {}});
    types.push_back({IitakaTag::BII, {}});
    types.push_back({IitakaTag::BIII, Int(2)});
    types.push_back({IitakaTag::BIII, Int(3)});
    types.push_back({IitakaTag::BIV, {}});
    types.push_back({IitakaTag::BV, {}});
    types.push_back({IitakaTag::BVI, {}});
    types.push_back({IitakaTag::BVII, Int(2)});
    types.push_back({IitakaTag::BVII, Int(4)});
    types.push_back({IitakaTag::BVIII, {}});
    types.push_back({IitakaTag::BXII, {}});
    types.push_back({IitakaTag::BXIII, Int(2)});
    types.push_back({IitakaTag::BXIII, Int(5)});
    return types;
}

} // namespace logk3::testsupport
