#pragma once

#include "logk3/linalg.hpp"

#include <tuple>
#include <vector>

namespace logk3 {

// A divisor class written in the basis of its lattice.
struct DivisorClass {
    IntVec coeffs;

    DivisorClass() = default;
    explicit DivisorClass(IntVec c) : coeffs(std::move(c)) {}

    int length() const { return static_cast<int>(coeffs.size()); }
    bool is_zero() const;
    bool operator==(const DivisorClass&) const = default;

    DivisorClass operator+(const DivisorClass&) const;
    DivisorClass operator-(const DivisorClass&) const;
    DivisorClass operator-() const;
};

DivisorClass operator*(const Int& s, const DivisorClass& a);

// Exact symmetric integer pairing with a distinguished canonical class.
struct IntersectionLattice {
    int rank = 0;
    IMat gram;              // rank x rank, symmetric
    DivisorClass canonical; // length = rank

    bool operator==(const IntersectionLattice&) const = default;
};

IntersectionLattice make_lattice(IMat gram, IntVec canonical);

enum class MapKind { EmbedAfterBlowup, PushforwardAfterContraction };

// Explicit class transport between lattices: embed maps preserve the pairing
// exactly, and pushforward composed with embed is the identity.
struct LatticeMap {
    IMat matrix; // (target rank) x (source rank)
    MapKind kind = MapKind::EmbedAfterBlowup;

    DivisorClass apply(const DivisorClass& c) const {
        return DivisorClass(mat_apply(matrix, c.coeffs));
    }
    bool operator==(const LatticeMap&) const = default;
};

Int pairing(const IntersectionLattice& l, const DivisorClass& a, const DivisorClass& b);

// Negative definiteness of the Gram matrix of the given classes under the
// lattice pairing, by exact signed leading principal minors.
bool is_negative_definite(const IntersectionLattice& l, const std::vector<DivisorClass>& subset);

// Exact inertia triple (positives, negatives, zeros) of the lattice pairing.
std::tuple<int, int, int> signature(const IntersectionLattice& l);

struct BlowupResult {
    IntersectionLattice lattice;
    LatticeMap embed;
    DivisorClass e; // the new exceptional class, in the enlarged basis
};

// Orthogonal extension by a (-1)-class: rank grows by 1, the canonical class
// picks up +e, every embedded pairing is preserved.
BlowupResult blowup_lattice(const IntersectionLattice& l);

struct ContractionResult {
    IntersectionLattice lattice;
    LatticeMap push;
};

// Contraction of a numerical (-1)-class e (e.e = -1 and K.e = -1).  Pushed
// classes pair as push(a).push(b) = a.b + (a.e)(b.e).
ContractionResult contract_lattice(const IntersectionLattice& l, const DivisorClass& e);

// Dimension over Q of the kernel of the map sending formal generators to the
// given classes: (number of classes) - rank of the coefficient matrix.
int kernel_dim(const IntersectionLattice& l, const std::vector<DivisorClass>& classes);

} // namespace logk3
