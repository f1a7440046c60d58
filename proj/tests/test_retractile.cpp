#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "susplit/models.hpp"
#include "susplit/retractile.hpp"

using namespace susplit;

namespace {

AbelianGroup Z(long rank) { return AbelianGroup{rank, {}}; }

std::vector<ChainComplex> circles(int m) {
    return std::vector<ChainComplex>(std::size_t(m), circle_chains());
}

std::vector<BasedPair> copies(const BasedPair& p, int m) {
    return std::vector<BasedPair>(std::size_t(m), p);
}

}  // namespace

TEST_CASE("product diagrams are retractile") {
    SECTION("m=2 validates") {
        auto [d, r] = product_diagram(circles(2));
        CHECK(validate_diagram(d).ok());
        CHECK(validate_retractile(d, r).ok());
    }
    SECTION("m=1 gives the two-stage filtration") {
        auto [d, r] = product_diagram(circles(1));
        CHECK(validate_retractile(d, r).ok());
        CHECK(filtration_stage(d, 0).total_generators() == 1);
        CHECK(filtration_stage(d, 1).total_generators() == d.ambient.total_generators());
    }
    SECTION("m=3 validates") {
        auto [d, r] = product_diagram(circles(3));
        CHECK(validate_retractile(d, r).ok());
    }
    SECTION("non-based factors are rejected") {
        ChainComplex bad = circle_chains();
        bad.basepoint.reset();
        CHECK_THROWS_AS(product_diagram({bad}), InputError);
    }
}

TEST_CASE("negative controls") {
    auto [d, r] = product_diagram(circles(2));
    SECTION("dropping an arrow leaves a missing-arrow witness") {
        RetractionSystem broken = r;
        broken.maps.erase(broken.maps.begin());
        auto rep = validate_retractile(d, broken);
        REQUIRE_FALSE(rep.ok());
        CHECK(rep.failures.front().find("missing retraction") != std::string::npos);
    }
    SECTION("perturbing any single matrix entry is caught") {
        for (const auto& [key, map] : r.maps) {
            for (std::size_t k = 0; k < map.f.size(); ++k) {
                if (map.f[k].rows() == 0 || map.f[k].cols() == 0) continue;
                RetractionSystem broken = r;
                broken.maps[key].f[k](0, 0) += 1;
                CAPTURE(key.first, key.second, k);
                CHECK_FALSE(validate_retractile(d, broken).ok());
            }
        }
    }
    SECTION("splitting refuses to run on an invalid system") {
        RetractionSystem broken = r;
        broken.maps.clear();
        CHECK_THROWS_AS(splitting_verify(d, broken, 2), HypothesisError);
    }
}

TEST_CASE("filtration stages and summands") {
    auto [d, r] = product_diagram(circles(2));
    SECTION("stage 0 is the basepoint") {
        CHECK(filtration_stage(d, 0).total_generators() == 1);
    }
    SECTION("stage 1 is the wedge of the two circles") {
        Homology h = reduced_homology(filtration_stage(d, 1));
        CHECK(h.at(1) == Z(2));
        CHECK(h.at(2) == Z(0));
    }
    SECTION("top stage is everything") {
        CHECK(filtration_stage(d, 2).total_generators() == d.ambient.total_generators());
    }
    SECTION("bottom summand is S_∅ itself") {
        CHECK(summand(d, 0).total_generators() == 1);
    }
    SECTION("minimal non-bottom summand is S_p with the basepoint collapsed") {
        Homology h = reduced_homology(summand(d, 0b01));
        CHECK(h.at(1) == Z(1));
    }
    SECTION("top summand of two circles is the smash S²") {
        Homology h = reduced_homology(summand(d, 0b11));
        CHECK(h.at(1) == Z(0));
        CHECK(h.at(2) == Z(1));
    }
}

TEST_CASE("splitting verification") {
    SECTION("Σ(X×Y) ≃ Σ(X∨Y) ∨ Σ(X∧Y) as a homology identity") {
        auto [d, r] = product_diagram(circles(2));
        VerifyReport rep = splitting_verify(d, r, 2);
        CHECK(rep.pass);
        // and the intermediate stage splits as the wedge
        VerifyReport rep1 = splitting_verify(d, r, 1);
        CHECK(rep1.pass);
    }
    SECTION("three circles at n = 3") {
        auto [d, r] = product_diagram(circles(3));
        VerifyReport rep = splitting_verify(d, r, 3);
        REQUIRE(rep.pass);
        Homology left = reduced_homology(filtration_stage(d, 3));
        CHECK(left.at(1) == Z(3));
        CHECK(left.at(2) == Z(3));
        CHECK(left.at(3) == Z(1));
    }
    SECTION("n = 0 passes trivially") {
        auto [d, r] = product_diagram(circles(2));
        CHECK(splitting_verify(d, r, 0).pass);
    }
}

TEST_CASE("polyhedral product diagrams") {
    auto pairs = copies(disk1_pair(), 3);
    auto k = boundary_simplex(3);
    auto [d, r] = polyprod_diagram(k, pairs);
    SECTION("diagram is retractile") { CHECK(validate_retractile(d, r).ok()); }
    SECTION("the square identity of the projections holds") {
        CHECK(check_square_identity(d, r).ok());
    }
    SECTION("top stage is the polyhedral product, splitting equals BBCG") {
        VerifyReport split = splitting_verify(d, r, 3);
        REQUIRE(split.pass);
        Homology stage = reduced_homology(filtration_stage(d, 3));
        CHECK(stage == reduced_homology(polyhedral_chains(k, pairs)));
        CHECK(stage == bbcg_predicted(k, pairs));
        CHECK(stage.at(2) == Z(1));  // the 2-sphere ∂(cube)
    }
    SECTION("K = {∅} gives the constant point diagram") {
        auto [dp, rp] = polyprod_diagram(SimplicialComplex::from_facets(2, {}),
                                         copies(based_pair(circle_chains()), 2));
        CHECK(validate_retractile(dp, rp).ok());
        CHECK(dp.ambient.total_generators() == 1);
    }
    SECTION("full simplex agrees with the product diagram") {
        auto s1 = based_pair(sphere_chains(1));
        auto [dp, rp] = polyprod_diagram(full_simplex(2), copies(s1, 2));
        auto [dq, rq] = product_diagram(std::vector<ChainComplex>(2, sphere_chains(1)));
        CHECK(validate_retractile(dp, rp).ok());
        for (int n = 0; n <= 2; ++n)
            CHECK(reduced_homology(filtration_stage(dp, n)) ==
                  reduced_homology(filtration_stage(dq, n)));
    }
    SECTION("stages match the fat wedge filtration for based pairs") {
        auto s1 = based_pair(sphere_chains(1));
        auto [dp, rp] = polyprod_diagram(boundary_simplex(3), copies(s1, 3));
        for (int n = 0; n <= 3; ++n)
            CHECK(reduced_homology(filtration_stage(dp, n)) ==
                  reduced_homology(fat_wedge_stage(boundary_simplex(3), copies(s1, 3), n)));
    }
}

TEST_CASE("splitting with cone pairs") {
    // Z of two points with (CS¹, S¹) is the 3-sphere; the diagram over 2^[2]
    // must be retractile and split accordingly
    auto k = SimplicialComplex::from_facets(2, {{1}, {2}});
    auto pairs = copies(cone_pair(circle_chains()), 2);
    auto [d, r] = polyprod_diagram(k, pairs);
    CHECK(validate_retractile(d, r).ok());
    VerifyReport rep = splitting_verify(d, r, 2);
    REQUIRE(rep.pass);
    Homology top = reduced_homology(filtration_stage(d, 2));
    CHECK(top.at(3) == Z(1));
    CHECK(top.at(2) == Z(0));
    CHECK(top.at(1) == Z(0));
}

TEST_CASE("colimit retractions from meets") {
    SECTION("product builder") {
        auto [d, r] = product_diagram(circles(2));
        CHECK(check_colim_retractions(d, r).ok());
        CHECK(check_square_identity(d, r).ok());
    }
    SECTION("polyhedral builder") {
        auto [d, r] = polyprod_diagram(boundary_simplex(3), copies(disk1_pair(), 3));
        CHECK(check_colim_retractions(d, r).ok());
    }
    SECTION("the colimit retraction retracts the canonical inclusion") {
        auto [d, r] = product_diagram(circles(2));
        // ρ_p^n restricted to S_p must be the identity
        for (std::size_t p = 0; p < d.poset.size(); ++p) {
            ChainMap rho = colim_retraction(d, r, p, 2);
            ChainMap incl;  // S_p -> stage 2 (= ambient order)
            auto stage = filtration_stage(d, 2);
            for (std::size_t k = 0; k < d.ambient.basis.size(); ++k) {
                std::size_t rows = d.ambient.basis[k].size();
                std::size_t cols = 0;
                for (char c : d.assign[p][k]) cols += std::size_t(c != 0);
                IntMatrix mk(rows, cols);
                std::size_t col = 0;
                for (std::size_t i = 0; i < rows; ++i)
                    if (d.assign[p][k][i]) mk(i, col++) = 1;
                incl.f.push_back(std::move(mk));
            }
            CHECK(is_identity(compose(rho, incl)));
        }
    }
}

TEST_CASE("euler consistency of the splitting") {
    auto [d, r] = polyprod_diagram(boundary_simplex(3), copies(disk1_pair(), 3));
    for (int n = 0; n <= 3; ++n) {
        Int lhs = reduced_euler_characteristic(filtration_stage(d, n));
        Int rhs = 0;
        for (std::size_t p = 0; p < d.poset.size(); ++p)
            if (d.poset.grade(p) <= n) rhs += reduced_euler_characteristic(summand(d, p));
        CHECK(lhs == rhs);
    }
}
