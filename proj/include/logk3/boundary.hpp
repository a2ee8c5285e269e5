#pragma once

#include "logk3/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace logk3 {

enum class BoundaryKind { Elliptic, Nodal, Circular };

// The boundary divisor of a pair, reduced to its numerical combinatorics:
// a smooth elliptic curve, a rational curve with one node, or a cycle of
// smooth rational curves carrying the type vector (lambda_1, ..., lambda_n).
// Cyclic adjacency is implicit: D_i.D_{i+1} = 1 for n >= 3, D_1.D_2 = 2 for
// n = 2 (the two intersection points are not separately tracked).
struct BoundaryShape {
    BoundaryKind kind = BoundaryKind::Circular;
    Int self_int;   // Elliptic / Nodal
    IntVec lambdas; // Circular

    static BoundaryShape elliptic(Int self_int);
    static BoundaryShape nodal(Int self_int);

    int n_components() const {
        return kind == BoundaryKind::Circular ? static_cast<int>(lambdas.size()) : 1;
    }
    bool operator==(const BoundaryShape&) const = default;
};

// Throws for fewer than two entries; one-component cycles are Nodal and are
// constructed separately.
BoundaryShape make_circular(IntVec lambdas);

// The intersection number the shape dictates between components i and j
// (0-based), including the diagonal.
Int expected_pairing(const BoundaryShape& shape, int i, int j);

// Full-lattice realization: the ambient lattice plus one class per boundary
// component, in cycle order.
struct Realization {
    IntersectionLattice lattice;
    std::vector<DivisorClass> boundary_classes;

    bool operator==(const Realization&) const = default;
};

struct LogSurfacePair {
    BoundaryShape shape;
    std::optional<Realization> realization;

    bool operator==(const LogSurfacePair&) const = default;
};

struct ValidationReport {
    bool circularity_ok = false;
    std::optional<bool> k_plus_d_zero;
    std::optional<int> irregularity_q;
    std::optional<bool> genuine;
    std::optional<bool> hodge_signature_ok;
    std::vector<std::string> notes;
};

// Structural validation.  Type-only pairs get the shape checks and "not
// computed" notes; full-lattice pairs additionally get K+D = 0, the
// irregularity q (kernel dimension of the boundary classes), the Hodge
// signature test (1, rank-1, 0), and — when K+D = 0 and all-but-one boundary
// components span a negative definite sublattice — the sufficient-condition
// shortcut certifying genuineness.  A realization whose pairings contradict
// the shape is a hard error naming the first mismatch.
ValidationReport validate_pair(const LogSurfacePair& s, bool check_genuine);

// "(1, -2, -3)" — parentheses and comma-space, as type vectors are typeset.
std::string format_type_vector(const IntVec& lambdas);

// Rendering for any shape: circular as the type vector, otherwise
// "elliptic(9)" / "nodal(5)".
std::string format_shape(const BoundaryShape& shape);

} // namespace logk3
