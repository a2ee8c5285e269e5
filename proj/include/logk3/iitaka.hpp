#pragma once

#include "logk3/classify.hpp"

namespace logk3 {

// The catalogue of minimal models for the pairs in question: D anticanonical
// on P^2 or a Hirzebruch surface, as a smooth elliptic curve (a-*), a cycle
// of rational curves (b-i ... b-viii, b-xii, b-xiii), or a nodal curve
// (b-ix ... b-xi).  a-iii' is the F_2 variant with the (-2)-section joined to
// the boundary.
enum class IitakaTag {
    AI, AII, AIII, AIIIPrime,
    BI, BII, BIII, BIV, BV, BVI, BVII, BVIII,
    BIX, BX, BXI, BXII, BXIII,
};

struct IitakaType {
    IitakaTag tag = IitakaTag::AI;
    // Present exactly for the Hirzebruch families b-iii, b-vii, b-xiii, where
    // the section self-intersection parameter must be >= 2.
    std::optional<Int> beta;

    bool operator==(const IitakaType&) const = default;
};

std::string to_string(IitakaTag tag);
IitakaTag parse_iitaka_tag(const std::string& text);

// Full-lattice pair over the minimal model: rank 1 with square-1 generator H
// and canonical -3H for P^2; basis (C, F) with C^2 = -beta, C.F = 1, F^2 = 0
// and canonical -2C - (beta+2)F for F_beta.
LogSurfacePair build_model(const IitakaType& t);

struct ModelReport {
    IitakaType type;
    LogSurfacePair pair; // final model, after attachments and extra pivots
    int q_before = 0;
    SurgeryScript attachments;
    int q_after = 0;
    B2CheckResult b2_check;
    SurgeryScript extra_pivots;
};

// For the irregular types b-i ... b-viii: kill the irregularity with the
// prescribed half point attachments (2, 2, 2, 1, 1, 1, 1, 1 respectively),
// run the prescribed pivots (b-iii, b-vii), and certify that the result is a
// genuine pair on which the nef-and-big check fails.  Assertion failures are
// build-time self-checks, reported as logic errors naming the invariant.
ModelReport build_counterexample(const IitakaType& t);

// The fixed class-to-model mapping; rejects Inconsistent.
std::vector<IitakaTag> iitaka_classes_for(const CanonicalClass& c);

// Evaluates the Hirzebruch-Jung fraction a/b = c_1 - 1/(c_2 - 1/(c_3 - ...))
// with c_i = -l_i exactly over a chain of self-intersections l_i <= -2 and
// returns the reduced fraction (a, b) with a > b >= 1: the invariants of the
// cyclic quotient singularity obtained by contracting the chain.
std::pair<Int, Int> cyclic_quotient_invariants(const IntVec& chain);

} // namespace logk3
