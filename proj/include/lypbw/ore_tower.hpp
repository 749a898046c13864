#pragma once

#include "lypbw/pbw.hpp"

namespace lypbw {

/// One Ore-extension step: the new generator z over the previous stage, its
/// derivation table on the previous stage's algebra generators, and the
/// verification outcomes. The twist is the identity throughout (derivation
/// type).
struct TowerStep {
    Word gamma;
    Poly z;
    int degree = 0;

    struct DeltaEntry {
        AlgebraGenerator gen;
        CheckStatus status = CheckStatus::pass;
        Poly value;  // normal form of z*g - g*z
        /// The value written in the previous stage's PBW basis: coefficients
        /// against nondecreasing sequences of allowed Lyndon words.
        std::vector<std::pair<Rational, std::vector<Word>>> value_pbw;
    };
    std::vector<DeltaEntry> delta_table;

    CheckStatus leibniz = CheckStatus::pass;
    std::vector<std::pair<int, bool>> freeness;  // per degree, through the bound
    bool freeness_ok = true;
};

struct TowerReport {
    std::vector<TowerStep> steps;  // Gamma-ascending
    int step_count = 0;
    int certified_through_degree = 0;
    /// Completeness certificate: the step count provably equals the full
    /// Gamma, so the tower reaches the whole algebra.
    bool certified = false;
    /// Some entries were unverifiable at the bound.
    bool partial = false;
    /// Something is mathematically wrong; `failure_reason` names the first
    /// offence (a derivation escaping its stage violates basis condition 2).
    bool failed = false;
    std::string failure_reason;
};

/// Builds the derivation-type tower along Gamma in ascending order, computing
/// each derivation by commutation and checking Leibniz and degreewise
/// freeness through the bound.
TowerReport build_tower(const PbwData& d, const Presentation& p, const TruncatedGB& gb);

/// Re-verifies one step of a reported tower in one degree: the delta table
/// must reproduce the commutators (mutations fail here), and the previous
/// stage's basis times the powers of z must span the stage with the exact
/// cardinality and rank.
bool verify_step_freeness(const TowerReport& report, const PbwData& d, const Presentation& p,
                          const TruncatedGB& gb, int step_index, int n);

}  // namespace lypbw
