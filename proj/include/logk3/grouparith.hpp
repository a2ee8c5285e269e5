#pragma once

#include "logk3/ints.hpp"

#include <optional>
#include <vector>

namespace logk3 {

// Finite stand-in for the torsion of the boundary Picard group: the ambient
// group is Z/N and G is the subgroup generated by the given residues.  Being
// cyclic, G is generated by gcd(N, gens...) alone.
struct FiniteGroupModel {
    long long modulus = 1;                // N >= 1
    std::vector<long long> subgroup_gens; // G = <gens>; empty means G = {0}

    bool operator==(const FiniteGroupModel&) const = default;
};

// gcd(N, all generators): the canonical generator of G.
long long subgroup_generator(const FiniteGroupModel& model);

// |G| = N / subgroup_generator.
long long subgroup_order(const FiniteGroupModel& model);

bool in_subgroup(const FiniteGroupModel& model, long long x);

// A residue p with a.p = target and m.p outside G for every integer m with
// 0 < m and m^2 |G| < a.
struct MarkedPoint {
    long long p = 0;
    long long a = 1;
    long long target = 0;

    bool operator==(const MarkedPoint&) const = default;
};

// Smallest satisfying residue, or nothing: the finite model does not carry
// the divisibility that guarantees existence in the full Picard group, so
// absence is a value, not an error.
std::optional<MarkedPoint> find_marked_point(const FiniteGroupModel& model, long long a,
                                             long long target);

// Brute-force recheck of both clauses; the oracle for find_marked_point.
bool verify_marked_point(const FiniteGroupModel& model, const MarkedPoint& candidate);

} // namespace logk3
