#ifndef SSET_TELESCOPE_HPP
#define SSET_TELESCOPE_HPP

#include "sset/homology.hpp"

namespace sset {

// Finite stage of the localized-sphere mapping telescope, modeled at
// cellular-chain level: one 0-cell, sphere cells x_0..x_k in degree n and
// cylinder cells e_1..e_k in degree n+1 with d(e_j) = x_{j-1} - m_j x_j.
struct TelescopeStage {
    int n = 0;
    std::vector<long long> multipliers;  // m_1..m_k
    ChainComplexZ complex;

    int stages() const { return static_cast<int>(multipliers.size()); }
};

// Stage-k truncation for the multiplier sequence; n >= 2, k <= multipliers.
TelescopeStage telescope_stage(int n, const std::vector<long long>& multipliers, int k);

// The degree-n cell x_0 marks the original sphere.  Returns |d| where the
// class of x_0 in H_n(stage) is d times a generator; equals the product of
// the multipliers.
Int inclusion_degree(const TelescopeStage& stage);

struct StageInclusionReport {
    bool is_local_iso;          // verdict of the cone computation
    bool multipliers_invertible;  // precondition: every multiplier prime lies in P
    LocalIsoReport detail;
};

// Chain-level inclusion of the sphere into the stage; the cone must have
// P-torsion-only homology exactly when the multiplier primes are inverted.
StageInclusionReport stage_inclusion_is_local_iso(const TelescopeStage& stage,
                                                  const PrimeSet& p);

// Chain map from stage k to stage k+1 (x_i and e_j to themselves); used for
// the monotone-consistency checks.
ChainMapZ stage_inclusion_map(const TelescopeStage& from, const TelescopeStage& to);

}  // namespace sset

#endif
