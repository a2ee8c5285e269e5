#pragma once

#include "logk3/surgery.hpp"

namespace logk3 {

// Normal forms of the boundary rewriting:
//   C0 smooth elliptic, C1 nodal, C2 (lambda_1, <= -2, ..., <= -2) with
//   lambda_1 not in {0, -1}, C3 (lambda_1, 0) with lambda_1 != -1,
//   C4 (lambda_1, lambda_2) both positive.  Inconsistent marks type vectors
// that cannot occur on a genuine pair (two nonnegative components, n >= 3, no
// zero to pivot at: excluded by the Hodge index theorem).
enum class CanonicalLabel { C0, C1, C2, C3, C4, Inconsistent };

struct CanonicalClass {
    CanonicalLabel label = CanonicalLabel::C0;
    // C2/C3/C4: the reached type vector, rotated so the invariants above read
    // off positionally.  The rotation is a relabeling only; the normal pair
    // returned alongside keeps the labels the trace actually produced.
    IntVec normal_type;
    std::string reason; // Inconsistent only

    bool operator==(const CanonicalClass&) const = default;
};

std::string to_string(CanonicalLabel label);

struct NormalizeResult {
    CanonicalClass cls;
    LogSurfacePair normal;
    SurgeryTrace trace;
};

// The normalization algorithm: contract the lowest-index (-1)-component;
// otherwise pivot at the lowest-index 0-component (n >= 3), driving a
// neighbor to -1; classify when no step applies.  Terminates on every
// type-II shape; Inconsistent is a value, not an error.
NormalizeResult normalize(const LogSurfacePair& s);

struct PairVerdict {
    int i = 0;
    int j = 0; // adjacent pair (0-based), in the tested shape
    bool remainder_negative_definite = false;
};

// Decidable form of the nef-and-big condition on the given model: some
// adjacent pair must leave the remaining components spanning a negative
// definite sublattice.  fails = true certifies at most finitely many
// A^1 curves for this model.
struct B2CheckResult {
    bool fails = false;
    std::vector<PairVerdict> witnessing_pairs;
    // Equals the input shape except for 2-cycles, which are first extended by
    // blowing up both intersection points so the exceptional components count.
    BoundaryShape tested_shape;
    std::vector<std::string> notes;
};

B2CheckResult b2_fails_on_model(const LogSurfacePair& s);

enum class AbundanceKind { CountablyInfinite, NotInfinite, Inconsistent };

struct AbundanceVerdict {
    AbundanceKind kind = AbundanceKind::CountablyInfinite;
    CanonicalClass cls;
    // C4 only: the normal 2-cycle with both intersection points blown up,
    // a 4-cycle (lambda_1 - 2, -1, lambda_2 - 2, -1) on which the check fails.
    std::optional<LogSurfacePair> b2_witness_model;
    std::optional<B2CheckResult> witness_check;
};

// Countably infinitely many A^1 curves iff the class is C0-C3; C4 comes with
// the failing witness model.
AbundanceVerdict a1_abundance(const LogSurfacePair& s);

struct EnumerationRow {
    IntVec type; // canonical representative up to rotation and reflection
    CanonicalClass cls;
    BoundaryShape normal_shape; // the form normalize reached (trace labels)
    AbundanceKind verdict = AbundanceKind::CountablyInfinite;
    size_t trace_len = 0;
};

// Every circular type vector with 2 <= n <= max_n and entries in
// [lambda_min, lambda_max], deduplicated up to rotation and reflection,
// sorted lexicographically.
std::vector<EnumerationRow> enumerate(int max_n, const Int& lambda_min, const Int& lambda_max);

// Lexicographically least vector among all rotations and reflections.
IntVec necklace_canonical(const IntVec& v);

} // namespace logk3
