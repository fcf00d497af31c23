#include "sset/telescope.hpp"

namespace sset {

TelescopeStage telescope_stage(int n, const std::vector<long long>& multipliers, int k) {
    if (n < 2) throw Error("telescope_stage: sphere dimension must be at least 2");
    if (k < 0 || k > static_cast<int>(multipliers.size()))
        throw Error("telescope_stage: stage exceeds the multiplier sequence");
    for (int j = 0; j < k; ++j)
        if (multipliers[j] <= 0) throw Error("telescope_stage: multipliers must be positive");

    TelescopeStage stage;
    stage.n = n;
    stage.multipliers.assign(multipliers.begin(), multipliers.begin() + k);

    ChainComplexZ& c = stage.complex;
    c.cells.resize(n + 2);
    c.boundary.resize(n + 2);
    c.cells[0].push_back("v");
    for (int i = 0; i <= k; ++i) c.cells[n].push_back("x" + std::to_string(i));
    for (int j = 1; j <= k; ++j) c.cells[n + 1].push_back("e" + std::to_string(j));
    for (int d = 0; d <= n + 1; ++d) c.boundary[d] = IntMatrix(c.dim(d - 1), c.dim(d));
    for (int j = 1; j <= k; ++j) {
        c.boundary[n + 1].at(j - 1, j - 1) = 1;                        // x_{j-1}
        c.boundary[n + 1].at(j, j - 1) = -Int(stage.multipliers[j - 1]);  // -m_j x_j
    }
    c.check_dd_zero();
    return stage;
}

Int inclusion_degree(const TelescopeStage& stage) {
    int k = stage.stages();
    const IntMatrix& b = stage.complex.boundary[stage.n + 1];
    SNFResult snf = smith_normal_form(b);
    int rank = snf.rank();
    if (rank != k || (k + 1) - rank != 1)
        throw Error("inclusion_degree: stage homology is not free of rank 1");
    for (const auto& f : snf.invariant_factors())
        if (f != 1) throw Error("inclusion_degree: stage homology has torsion");
    // In the coordinates y = U x, the cokernel's free part is the coordinate
    // beyond the rank; x_0 is the 0-th basis vector.
    return abs(snf.u.at(rank, 0));
}

StageInclusionReport stage_inclusion_is_local_iso(const TelescopeStage& stage,
                                                  const PrimeSet& p) {
    int n = stage.n;
    ChainComplexZ sphere;
    sphere.cells.resize(n + 1);
    sphere.boundary.resize(n + 1);
    sphere.cells[0].push_back("v");
    sphere.cells[n].push_back("x");
    for (int d = 0; d <= n; ++d) sphere.boundary[d] = IntMatrix(sphere.dim(d - 1), sphere.dim(d));

    ChainMapZ incl;
    incl.source = sphere;
    incl.target = stage.complex;
    for (int d = 0; d <= n; ++d) {
        incl.matrix.push_back(IntMatrix(stage.complex.dim(d), sphere.dim(d)));
        if (sphere.dim(d) == 0) continue;
        incl.matrix[d].at(0, 0) = 1;  // v -> v and x -> x_0
    }
    incl.check_commutes();

    StageInclusionReport rep;
    rep.multipliers_invertible = true;
    for (long long m : stage.multipliers)
        for (const auto& [prime, e] : factorize(Int(m))) {
            (void)e;
            if (!p.contains(prime)) rep.multipliers_invertible = false;
        }
    rep.detail = local_iso_report(incl, p);
    rep.is_local_iso = rep.detail.holds;
    return rep;
}

ChainMapZ stage_inclusion_map(const TelescopeStage& from, const TelescopeStage& to) {
    if (from.n != to.n || from.stages() > to.stages())
        throw Error("stage_inclusion_map: stages do not nest");
    for (int j = 0; j < from.stages(); ++j)
        if (from.multipliers[j] != to.multipliers[j])
            throw Error("stage_inclusion_map: multiplier sequences disagree");
    ChainMapZ m;
    m.source = from.complex;
    m.target = to.complex;
    for (int d = 0; d <= from.complex.top_degree(); ++d) {
        m.matrix.push_back(IntMatrix(to.complex.dim(d), from.complex.dim(d)));
        for (int i = 0; i < from.complex.dim(d); ++i) m.matrix[d].at(i, i) = 1;
    }
    m.check_commutes();
    return m;
}

}  // namespace sset
