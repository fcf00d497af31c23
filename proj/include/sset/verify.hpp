#ifndef SSET_VERIFY_HPP
#define SSET_VERIFY_HPP

#include <string>
#include <vector>

namespace sset {

struct CheckResult {
    std::string id;
    std::string description;
    bool pass;
    std::string detail;  // witness or summary
};

struct VerifyOptions {
    int max_dim = 4;  // bound for horn/lifting searches, at least 3
};

// Replays every finitely checkable statement: the horn-reduction
// classification, mono preservation, the degenerate-face bound, sphere
// self-maps and Kan failures, the pathological fibration, the bounded
// detector equivalences, both adjunction bijections, the homology landmarks
// with the homotopy/homology separation, and the telescope laws.  Results
// come back in a fixed order.
std::vector<CheckResult> verify_paper(const VerifyOptions& opts = {});

}  // namespace sset

#endif
