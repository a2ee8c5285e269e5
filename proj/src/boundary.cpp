#include "logk3/boundary.hpp"

#include <sstream>
#include <stdexcept>

namespace logk3 {

BoundaryShape BoundaryShape::elliptic(Int self_int) {
    BoundaryShape s;
    s.kind = BoundaryKind::Elliptic;
    s.self_int = std::move(self_int);
    return s;
}

BoundaryShape BoundaryShape::nodal(Int self_int) {
    BoundaryShape s;
    s.kind = BoundaryKind::Nodal;
    s.self_int = std::move(self_int);
    return s;
}

BoundaryShape make_circular(IntVec lambdas) {
    if (lambdas.size() < 2)
        throw std::invalid_argument("circular boundary needs at least 2 components");
    BoundaryShape s;
    s.kind = BoundaryKind::Circular;
    s.lambdas = std::move(lambdas);
    return s;
}

Int expected_pairing(const BoundaryShape& shape, int i, int j) {
    const int n = shape.n_components();
    if (i < 0 || i >= n || j < 0 || j >= n)
        throw std::invalid_argument("component index out of range");
    if (shape.kind != BoundaryKind::Circular)
        return i == j ? shape.self_int : Int(0);
    if (i == j) return shape.lambdas[static_cast<size_t>(i)];
    if (n == 2) return 2; // the two components meet in two points
    const int d = (i - j + n) % n;
    return (d == 1 || d == n - 1) ? Int(1) : Int(0);
}

std::string format_type_vector(const IntVec& lambdas) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < lambdas.size(); ++i) {
        if (i) os << ", ";
        os << lambdas[i];
    }
    os << ")";
    return os.str();
}

std::string format_shape(const BoundaryShape& shape) {
    switch (shape.kind) {
    case BoundaryKind::Elliptic: return "elliptic(" + to_string(shape.self_int) + ")";
    case BoundaryKind::Nodal: return "nodal(" + to_string(shape.self_int) + ")";
    case BoundaryKind::Circular: return format_type_vector(shape.lambdas);
    }
    throw std::logic_error("unknown boundary kind");
}

ValidationReport validate_pair(const LogSurfacePair& s, bool check_genuine) {
    ValidationReport rep;
    const int n = s.shape.n_components();
    rep.circularity_ok = true;

    if (!s.realization) {
        rep.notes.push_back("type-only pair: K+D, irregularity, Hodge signature not computed");
        if (check_genuine)
            rep.notes.push_back("genuineness not decidable without a full-lattice realization");
        return rep;
    }

    const Realization& r = *s.realization;
    const IntersectionLattice& l = r.lattice;
    if (static_cast<int>(r.boundary_classes.size()) != n)
        throw std::invalid_argument("realization has " + std::to_string(r.boundary_classes.size()) +
                                    " boundary classes, shape has " + std::to_string(n) + " components");

    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const Int got = pairing(l, r.boundary_classes[static_cast<size_t>(i)],
                                    r.boundary_classes[static_cast<size_t>(j)]);
            const Int want = expected_pairing(s.shape, i, j);
            if (got != want)
                throw std::invalid_argument("realization mismatch: D" + std::to_string(i + 1) + ".D" +
                                            std::to_string(j + 1) + " = " + to_string(got) +
                                            ", shape requires " + to_string(want));
        }

    DivisorClass k_plus_d = l.canonical;
    for (const auto& c : r.boundary_classes) k_plus_d = k_plus_d + c;
    rep.k_plus_d_zero = k_plus_d.is_zero();

    rep.irregularity_q = kernel_dim(l, r.boundary_classes);

    auto [pos, neg, zer] = signature(l);
    rep.hodge_signature_ok = (pos == 1 && neg == l.rank - 1 && zer == 0);

    if (check_genuine) {
        rep.genuine = *rep.k_plus_d_zero && *rep.irregularity_q == 0;
        // Sufficient condition: if K+D = 0 and all boundary components but
        // one span a negative definite sublattice, a pair of irreducible
        // curves with these classes is genuine.  The kernel computation is
        // the ground truth; a disagreement means the classes cannot all be
        // represented by distinct irreducible curves, which a raw lattice
        // cannot certify, so it is reported rather than treated as a bug.
        if (*rep.k_plus_d_zero && n >= 2) {
            for (int omit = 0; omit < n; ++omit) {
                std::vector<DivisorClass> rest;
                for (int i = 0; i < n; ++i)
                    if (i != omit) rest.push_back(r.boundary_classes[static_cast<size_t>(i)]);
                if (!is_negative_definite(l, rest)) continue;
                if (*rep.genuine)
                    rep.notes.push_back("genuine certified: boundary minus D" + std::to_string(omit + 1) +
                                        " is negative definite");
                else
                    rep.notes.push_back("warning: boundary minus D" + std::to_string(omit + 1) +
                                        " is negative definite yet q > 0; the boundary classes are "
                                        "dependent and cannot all be irreducible curves");
                break;
            }
        }
    }
    return rep;
}

} // namespace logk3
