#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sset/functors.hpp"
#include "sset/homology.hpp"

using namespace sset;

namespace {

FGAbGroup Zn(int rank) { return FGAbGroup{rank, {}}; }

FGAbGroup Zmod(std::initializer_list<int> torsion) {
    FGAbGroup g;
    for (int t : torsion) g.torsion.push_back(t);
    return g;
}

void check_snf_contract(const IntMatrix& a) {
    SNFResult snf = smith_normal_form(a);
    CHECK(snf.u.mul(a).mul(snf.v) == snf.d);
    CHECK(oracles::bareiss_det(snf.u) * oracles::bareiss_det(snf.u) == 1);
    CHECK(oracles::bareiss_det(snf.v) * oracles::bareiss_det(snf.v) == 1);
    std::vector<Int> f = snf.invariant_factors();
    for (size_t i = 0; i + 1 < f.size(); ++i) {
        CHECK(f[i] > 0);
        CHECK(f[i + 1] % f[i] == 0);
    }
    // everything beyond the invariant factors is zero
    for (int r = 0; r < snf.d.rows(); ++r)
        for (int c = 0; c < snf.d.cols(); ++c)
            if (r != c || r >= static_cast<int>(f.size())) CHECK(snf.d.at(r, c) == 0);
    CHECK(snf.rank() == oracles::rational_rank(a));
}

}  // namespace

TEST_CASE("smith normal form basics") {
    IntMatrix a = IntMatrix::from_triplets(2, 2, {{0, 0, 2}, {1, 1, 3}});
    SNFResult snf = smith_normal_form(a);
    CHECK(snf.invariant_factors() == std::vector<Int>{1, 6});
    check_snf_contract(a);

    IntMatrix zero(3, 4);
    SNFResult zsnf = smith_normal_form(zero);
    CHECK(zsnf.d.is_zero());
    CHECK(zsnf.u == IntMatrix::identity(3));
    CHECK(zsnf.v == IntMatrix::identity(4));
}

TEST_CASE("smith normal form on seeded random sparse matrices") {
    std::mt19937 rng(97531);
    for (int round = 0; round < 150; ++round)
        check_snf_contract(oracles::random_sparse(rng, 12, 9));
}

TEST_CASE("chain complexes of basic presentations") {
    ChainComplexZ s2 = chain_complex(*simplicial_sphere(2));
    CHECK(s2.boundary[2].is_zero());

    ChainComplexZ d2 = chain_complex(standard_simplex(2));
    // boundary of the top simplex: d0 - d1 + d2
    const Presentation d2p = standard_simplex(2);
    int c01 = d2p.find(1, "01"), c02 = d2p.find(1, "02"), c12 = d2p.find(1, "12");
    CHECK(d2.boundary[2].at(c12, 0) == 1);
    CHECK(d2.boundary[2].at(c02, 0) == -1);
    CHECK(d2.boundary[2].at(c01, 0) == 1);

    chain_complex(*rp2_model()).check_dd_zero();
}

TEST_CASE("integral homology of the corpus landmarks") {
    for (int n = 2; n <= 4; ++n) {
        std::vector<FGAbGroup> h = homology_Z(*simplicial_sphere(n));
        REQUIRE(static_cast<int>(h.size()) == n + 1);
        CHECK(h[0] == Zn(1));
        for (int i = 1; i < n; ++i) CHECK(h[i].trivial());
        CHECK(h[n] == Zn(1));
    }
    std::vector<FGAbGroup> rp2 = homology_Z(*rp2_model());
    CHECK(rp2[0] == Zn(1));
    CHECK(rp2[1] == Zmod({2}));
    CHECK(rp2[2].trivial());

    std::vector<FGAbGroup> bd3 = homology_Z(*boundary_complex(3).pres);
    CHECK(bd3[0] == Zn(1));
    CHECK(bd3[1].trivial());
    CHECK(bd3[2] == Zn(1));

    std::vector<FGAbGroup> torus = homology_Z(*corpus_entry("torus").pres);
    CHECK(torus[0] == Zn(1));
    CHECK(torus[1] == Zn(2));
    CHECK(torus[2] == Zn(1));
}

TEST_CASE("localization of finitely generated abelian groups") {
    CHECK(localize(Zmod({2}), PrimeSet::from_multiplicative_set({2})).trivial());
    FGAbGroup g{1, {Int(9)}};
    CHECK(localize(g, PrimeSet::from_multiplicative_set({2})) == g);
    FGAbGroup h{2, {Int(3), Int(4)}};
    CHECK(localize(h, PrimeSet::rationals()) == Zn(2));
    CHECK(localize(h, PrimeSet::none()) == h);
    CHECK_THROWS_AS(PrimeSet::from_multiplicative_set({0}), Error);

    PrimeSet p6 = PrimeSet::from_multiplicative_set({6});
    CHECK(p6.contains(2));
    CHECK(p6.contains(3));
    CHECK_FALSE(p6.contains(5));
}

TEST_CASE("localized homology") {
    PresPtr rp2 = rp2_model();
    std::vector<FGAbGroup> rational = homology_localized(*rp2, PrimeSet::rationals());
    CHECK(rational[0] == Zn(1));
    CHECK(rational[1].trivial());
    CHECK(rational[2].trivial());

    std::vector<FGAbGroup> at3 = homology_localized(*rp2, PrimeSet::from_multiplicative_set({3}));
    CHECK(at3[1] == Zmod({2}));

    std::vector<FGAbGroup> s2q = homology_localized(*simplicial_sphere(2), PrimeSet::rationals());
    CHECK(s2q[0] == Zn(1));
    CHECK(s2q[2] == Zn(1));

    // two-path consistency: localizing integral homology equals homology of
    // the localized invariant factors on every corpus entry
    for (const auto& e : corpus()) {
        std::vector<FGAbGroup> hz = homology_Z(*e.pres);
        for (const auto& ps :
             {PrimeSet::rationals(), PrimeSet::from_multiplicative_set({2}),
              PrimeSet::from_multiplicative_set({30})}) {
            std::vector<FGAbGroup> direct = homology_localized(*e.pres, ps);
            REQUIRE(direct.size() == hz.size());
            for (size_t i = 0; i < hz.size(); ++i) CHECK(direct[i] == localize(hz[i], ps));
        }
    }
}

TEST_CASE("induced maps and functoriality") {
    // identity induces identities
    PresPtr s2 = simplicial_sphere(2);
    ChainMapZ idm = induced_map(identity_map(s2));
    for (int n = 0; n <= 2; ++n) CHECK(idm.matrix[n] == IntMatrix::identity(idm.source.dim(n)));

    // quotient in top degree is the 1x1 identity
    ReductionResult r = reduce1(share(standard_simplex(2)));
    ChainMapZ qm = induced_map(r.map);
    CHECK(qm.matrix[2] == IntMatrix::identity(1));

    // constant map vanishes in positive degrees
    ChainMapZ cm = induced_map(constant_map(rp2_model(), corpus_entry("delta0").pres));
    for (int n = 1; n <= 2; ++n) CHECK(cm.matrix[n].is_zero());

    // functoriality on corpus composites
    for (const auto& f : corpus_maps()) {
        for (const auto& g : corpus_maps()) {
            if (!(f.map.target() == g.map.source())) continue;
            ChainMapZ gf = induced_map(compose(g.map, f.map));
            ChainMapZ gm = induced_map(g.map);
            ChainMapZ fm = induced_map(f.map);
            for (int n = 0; n <= gf.source.top_degree(); ++n) {
                IntMatrix expect = (n <= static_cast<int>(gm.matrix.size()) - 1
                                        ? gm.matrix[n]
                                        : IntMatrix(gf.target.dim(n), fm.target.dim(n)))
                                       .mul(fm.matrix[n]);
                CHECK(gf.matrix[n] == expect);
            }
        }
    }
}

TEST_CASE("mapping cones decide local homology isomorphisms") {
    // cone of the identity is acyclic
    LocalIsoReport idrep =
        is_local_homology_iso(identity_map(rp2_model()), PrimeSet::none());
    CHECK(idrep.holds);

    PresPtr pt = corpus_entry("delta0").pres;
    SimplicialMap collapse_rp2 = constant_map(rp2_model(), pt);
    LocalIsoReport rational = is_local_homology_iso(collapse_rp2, PrimeSet::rationals());
    CHECK(rational.holds);
    LocalIsoReport at3 = is_local_homology_iso(collapse_rp2, PrimeSet::from_multiplicative_set({3}));
    CHECK_FALSE(at3.holds);
    LocalIsoReport at2 = is_local_homology_iso(collapse_rp2, PrimeSet::from_multiplicative_set({2}));
    CHECK(at2.holds);
    // the cone concentrates the 2-torsion in a single degree
    ChainComplexZ cone = mapping_cone(induced_map(collapse_rp2));
    std::vector<FGAbGroup> h = homology(cone);
    CHECK(h[0].trivial());
    CHECK(h[1].trivial());
    CHECK(h[2] == Zmod({2}));
    CHECK(h[3].trivial());

    SimplicialMap collapse_s2 = constant_map(simplicial_sphere(2), pt);
    CHECK_FALSE(is_local_homology_iso(collapse_s2, PrimeSet::rationals()).holds);
}

TEST_CASE("the one-reduced weak equivalence decision") {
    PresPtr s2 = simplicial_sphere(2);
    CHECK(is_local_weq_one_reduced(identity_map(s2), PrimeSet::rationals()).holds);

    PresPtr pt = corpus_entry("delta0").pres;
    CHECK_FALSE(is_local_weq_one_reduced(constant_map(s2, pt), PrimeSet::rationals()).holds);

    // R1 of a high horn inclusion is an integral homology isomorphism
    SimplicialMap red = reduce1_map(horn_complex(3, 0).inclusion);
    CHECK(is_local_weq_one_reduced(red, PrimeSet::none()).holds);

    // refuses non-1-reduced ends
    CHECK_THROWS_AS(is_local_weq_one_reduced(constant_map(rp2_model(), pt), PrimeSet::none()),
                    Error);
}

TEST_CASE("edge-path fundamental group presentations") {
    GroupPresentation trivial = pi1_presentation(standard_simplex(3));
    CHECK(trivial.generators.empty());
    CHECK(trivial.relators.empty());
    CHECK(abelianization(trivial).trivial());

    GroupPresentation circle = pi1_presentation(*simplicial_sphere(1));
    CHECK(circle.generators.size() == 1);
    CHECK(circle.relators.empty());
    CHECK(abelianization(circle) == Zn(1));

    GroupPresentation rp2 = pi1_presentation(*rp2_model());
    CHECK(abelianization(rp2) == Zmod({2}));

    // disconnected input is refused
    CHECK_THROWS_AS(pi1_presentation(*boundary_complex(1).pres), Error);

    // abelianized pi1 agrees with H1 on every connected corpus entry
    for (const auto& e : corpus()) {
        std::vector<FGAbGroup> h = homology_Z(*e.pres);
        if (h.empty() || !(h[0] == Zn(1))) continue;
        FGAbGroup h1 = h.size() > 1 ? h[1] : FGAbGroup{};
        CHECK(abelianization(pi1_presentation(*e.pres)) == h1);
    }
}

TEST_CASE("abelianization of explicit presentations") {
    GroupPresentation free_one{{"a"}, {}};
    CHECK(abelianization(free_one) == Zn(1));
    GroupPresentation z2{{"a"}, {{1, 1}}};
    CHECK(abelianization(z2) == Zmod({2}));
    GroupPresentation klein{{"a", "b"}, {{1, 2, 1, -2}}};
    FGAbGroup ab = abelianization(klein);
    CHECK(ab.rank == 1);
    CHECK(ab.torsion == std::vector<Int>{2});
}

TEST_CASE("euler characteristic equals the alternating Betti sum") {
    for (const auto& e : corpus()) {
        CAPTURE(e.name);
        long long chi = euler_characteristic(*e.pres);
        long long betti = 0;
        std::vector<FGAbGroup> h = homology_Z(*e.pres);
        for (size_t n = 0; n < h.size(); ++n)
            betti += (n % 2 == 0 ? 1 : -1) * h[n].rank;
        CHECK(chi == betti);
    }
    CHECK(euler_characteristic(*simplicial_sphere(2)) == 2);
    CHECK(euler_characteristic(*rp2_model()) == 1);
}
