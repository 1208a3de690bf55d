#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <numbers>

#include "specbound/oracle.hpp"
#include "specbound/polyopt.hpp"
#include "support/naive_oracles.hpp"
#include "support/test_graphs.hpp"

using namespace specbound;

namespace {

Spectrum spectrum_of(const Graph& g) { return eigendecompose(adjacency_matrix(g)); }

}  // namespace

TEST_CASE("polynomial arithmetic and matrix application") {
    const Polynomial p({1.0, 2.0, 3.0});
    REQUIRE(p.degree() == 2);
    REQUIRE(p(2.0) == Catch::Approx(1.0 + 4.0 + 12.0));
    REQUIRE((p + Polynomial({0.0, -2.0})).coeffs == std::vector<double>{1.0, 0.0, 3.0});
    REQUIRE((2.0 * Polynomial::identity()).coeffs == std::vector<double>{0.0, 2.0});
    const Polynomial prod = Polynomial({1.0, 1.0}) * Polynomial({-1.0, 1.0});
    REQUIRE(prod.coeffs == std::vector<double>{-1.0, 0.0, 1.0});  // (x+1)(x-1) = x^2-1

    const SymMatrix a = adjacency_matrix(testsupport::cycle(5));
    SECTION("constant polynomial gives a scaled identity") {
        const SymMatrix pa = matrix_apply(Polynomial::constant(1.0), a);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) REQUIRE(pa.at(i, j) == (i == j ? 1.0 : 0.0));
    }
    SECTION("identity polynomial reproduces A") {
        const SymMatrix pa = matrix_apply(Polynomial::identity(), a);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) REQUIRE(pa.at(i, j) == a.at(i, j));
    }
    SECTION("x^2 on C5 puts the degree on the diagonal") {
        const SymMatrix pa = matrix_apply(Polynomial({0.0, 0.0, 1.0}), a);
        for (int i = 0; i < 5; ++i) REQUIRE(pa.at(i, i) == Catch::Approx(2.0).margin(1e-12));
        REQUIRE(pa.at(0, 2) == Catch::Approx(1.0).margin(1e-12));  // one walk of length 2
        REQUIRE(pa.at(0, 1) == Catch::Approx(0.0).margin(1e-12));
    }
    SECTION("polynomial printing") {
        REQUIRE(to_string(Polynomial({0.5, -1.0})).find("0.5") != std::string::npos);
    }
}

TEST_CASE("minimax problem construction") {
    SECTION("petersen mesh is {1, -2} with target 3") {
        const auto prob = make_minimax_problem(spectrum_of(testsupport::petersen()), 1);
        REQUIRE(prob.target == Catch::Approx(3.0).margin(1e-8));
        REQUIRE(prob.mesh.size() == 2);
        REQUIRE(prob.mesh[0] == Catch::Approx(1.0).margin(1e-8));
        REQUIRE(prob.mesh[1] == Catch::Approx(-2.0).margin(1e-8));
    }
    SECTION("single distinct eigenvalue is degenerate") {
        try {
            make_minimax_problem(spectrum_of(Graph(3)), 1);
            FAIL("expected degenerate_mesh");
        } catch (const InputError& e) {
            REQUIRE(e.code() == Errc::degenerate_mesh);
        }
    }
}

TEST_CASE("chebyshev candidate") {
    SECTION("C5 degree 1: P(2) = sqrt5") {
        const auto prob = make_minimax_problem(spectrum_of(testsupport::cycle(5)), 1);
        const Polynomial p = chebyshev_candidate(prob);
        REQUIRE(p.degree() == 1);
        REQUIRE(p(2.0) == Catch::Approx(std::sqrt(5.0)).margin(1e-8));
        REQUIRE(std::abs(p(prob.mesh[0])) <= 1.0 + 1e-12);
        REQUIRE(std::abs(p(prob.mesh[1])) <= 1.0 + 1e-12);
    }
    SECTION("symmetric interval gives x/c") {
        MinimaxProblem prob;
        prob.mesh = {2.0, -2.0};
        prob.target = 5.0;
        prob.k = 1;
        const Polynomial p = chebyshev_candidate(prob);
        REQUIRE(p.coeffs[0] == Catch::Approx(0.0).margin(1e-12));
        REQUIRE(p.coeffs[1] == Catch::Approx(0.5).margin(1e-12));
    }
    SECTION("petersen degree 2 is feasible on the mesh") {
        const auto prob = make_minimax_problem(spectrum_of(testsupport::petersen()), 2);
        const Polynomial p = chebyshev_candidate(prob);
        REQUIRE(p.degree() == 2);
        for (double mu : prob.mesh) REQUIRE(std::abs(p(mu)) <= 1.0 + 1e-12);
        // T_k hits +/-1 at the interval ends
        REQUIRE(std::abs(p(prob.mesh.front())) == Catch::Approx(1.0).margin(1e-10));
        REQUIRE(std::abs(p(prob.mesh.back())) == Catch::Approx(1.0).margin(1e-10));
    }
    SECTION("k = 0 is the constant 1") {
        auto prob = make_minimax_problem(spectrum_of(testsupport::petersen()), 0);
        REQUIRE(chebyshev_candidate(prob).coeffs == std::vector<double>{1.0});
    }
    SECTION("single-point mesh is degenerate") {
        MinimaxProblem prob;
        prob.mesh = {-1.0};
        prob.target = 3.0;
        prob.k = 1;
        REQUIRE_THROWS_AS(chebyshev_candidate(prob), InputError);
    }
}

TEST_CASE("simplex solver on a hand-checked program") {
    // max x + y  s.t.  x <= 2, y <= 3, x + y <= 4
    const auto sol = detail::simplex_max({{1, 0}, {0, 1}, {1, 1}}, {2, 3, 4}, {1, 1});
    REQUIRE(sol.objective == Catch::Approx(4.0).margin(1e-10));
    // max x with x unconstrained from above
    REQUIRE_THROWS_AS(detail::simplex_max({{-1.0}}, {0.0}, {1.0}), InputError);
}

TEST_CASE("optimal alternating polynomial") {
    SECTION("k = 0 gives the constant 1") {
        const auto prob = make_minimax_problem(spectrum_of(testsupport::petersen()), 0);
        const Polynomial p = optimal_alternating_polynomial(prob);
        REQUIRE(p.degree() == 0);
        REQUIRE(p(3.0) == Catch::Approx(1.0).margin(1e-10));
    }
    SECTION("petersen k = 1: P(x) = (2x+1)/3, P(3) = 7/3") {
        const auto prob = make_minimax_problem(spectrum_of(testsupport::petersen()), 1);
        const Polynomial p = optimal_alternating_polynomial(prob);
        REQUIRE(p.coeffs[0] == Catch::Approx(1.0 / 3.0).margin(1e-8));
        REQUIRE(p.coeffs[1] == Catch::Approx(2.0 / 3.0).margin(1e-8));
        REQUIRE(p(3.0) == Catch::Approx(7.0 / 3.0).margin(1e-8));
    }
    SECTION("C5 k = 1: coefficients (1/sqrt5, 2/sqrt5) from the 2-point equality system") {
        const auto prob = make_minimax_problem(spectrum_of(testsupport::cycle(5)), 1);
        const Polynomial p = optimal_alternating_polynomial(prob);
        REQUIRE(p.coeffs[0] == Catch::Approx(1.0 / std::sqrt(5.0)).margin(1e-8));
        REQUIRE(p.coeffs[1] == Catch::Approx(2.0 / std::sqrt(5.0)).margin(1e-8));
        REQUIRE(p(2.0) == Catch::Approx(std::sqrt(5.0)).margin(1e-8));
        // P hits the alternation pattern +1, -1 on the two mesh points
        REQUIRE(p(prob.mesh[0]) == Catch::Approx(1.0).margin(1e-8));
        REQUIRE(p(prob.mesh[1]) == Catch::Approx(-1.0).margin(1e-8));
    }
    SECTION("unbounded when k + 1 exceeds the mesh size") {
        const auto prob = make_minimax_problem(spectrum_of(testsupport::cycle(5)), 2);
        try {
            optimal_alternating_polynomial(prob);
            FAIL("expected unbounded_objective");
        } catch (const InputError& e) {
            REQUIRE(e.code() == Errc::unbounded_objective);
        }
    }
    SECTION("LP objective dominates the chebyshev candidate") {
        for (const Graph& g : {testsupport::petersen(), testsupport::cycle(6), testsupport::path(5)}) {
            const Spectrum s = spectrum_of(g);
            for (int k = 1; k <= 2; ++k) {
                const auto prob = make_minimax_problem(s, k);
                if (static_cast<int>(prob.mesh.size()) < k + 1) continue;
                const double lp = optimal_alternating_polynomial(prob)(prob.target);
                const double cheb = chebyshev_candidate(prob)(prob.target);
                REQUIRE(lp >= cheb - 1e-9);
            }
        }
    }
    SECTION("objective is nondecreasing in k") {
        const Spectrum s = spectrum_of(testsupport::path(6));  // 6 distinct eigenvalues
        const auto groups = distinct_eigenvalues(s);
        REQUIRE(groups.size() == 6);
        double prev = 0.0;
        for (int k = 0; k <= 4; ++k) {
            const auto prob = make_minimax_problem(s, k);
            const double obj = optimal_alternating_polynomial(prob)(prob.target);
            if (k > 0) REQUIRE(obj >= prev - 1e-9);
            prev = obj;
        }
    }
    SECTION("feasibility within 1e-9 on corpus meshes") {
        for (const Graph& g : {testsupport::petersen(), testsupport::cycle(7), testsupport::path(6),
                               testsupport::complete_bipartite(2, 3)}) {
            const Spectrum s = spectrum_of(g);
            for (int k = 0; k <= 2; ++k) {
                const auto prob = make_minimax_problem(s, k);
                if (static_cast<int>(prob.mesh.size()) < k + 1) continue;
                const Polynomial p = optimal_alternating_polynomial(prob);
                for (double mu : prob.mesh) REQUIRE(std::abs(p(mu)) <= 1.0 + 1e-9);
            }
        }
    }
    SECTION("matches vertex enumeration on small meshes") {
        for (const Graph& g : {testsupport::cycle(5), testsupport::petersen(), testsupport::star(3),
                               testsupport::complete(4)}) {
            const Spectrum s = spectrum_of(g);
            for (int k = 0; k <= 2; ++k) {
                const auto prob = make_minimax_problem(s, k);
                if (prob.mesh.size() > 3) continue;
                const auto vertex_best = testsupport::lp_vertex_enum_max(prob.mesh, prob.target, k);
                if (static_cast<int>(prob.mesh.size()) < k + 1) {
                    REQUIRE_FALSE(vertex_best.has_value());
                    REQUIRE_THROWS_AS(optimal_alternating_polynomial(prob), InputError);
                } else {
                    const double lp = optimal_alternating_polynomial(prob)(prob.target);
                    REQUIRE(vertex_best.has_value());
                    REQUIRE(lp == Catch::Approx(*vertex_best).margin(1e-8));
                }
            }
        }
    }
}

TEST_CASE("best distance-k bound") {
    SECTION("petersen k = 1 equals 4 and is tight against the oracle") {
        const Graph g = testsupport::petersen();
        const Spectrum s = spectrum_of(g);
        const WeightVector nu = ones_weights(g, s);
        BoundReport r = best_distance_k_bound(g, s, nu, 1);
        REQUIRE(r.value == Catch::Approx(4.0).margin(1e-8));
        r.attach_oracle(max_weight_distance_k_independent_set(g, nu, 1).exact_value);
        REQUIRE(*r.tight);
    }
    SECTION("petersen k = 2: diameter 2 leaves only singletons") {
        const Graph g = testsupport::petersen();
        const Spectrum s = spectrum_of(g);
        const WeightVector nu = ones_weights(g, s);
        const BoundReport r = best_distance_k_bound(g, s, nu, 2);
        const double alpha2 = max_weight_distance_k_independent_set(g, nu, 2).exact_value;
        REQUIRE(alpha2 == Catch::Approx(1.0));
        REQUIRE(r.value >= alpha2 - 1e-9);
        REQUIRE(r.value == Catch::Approx(1.0).margin(1e-8));  // the chebyshev candidate is exact here
    }
    SECTION("C5 k = 2 falls back beyond the unbounded LP") {
        const Graph g = testsupport::cycle(5);
        const Spectrum s = spectrum_of(g);
        const WeightVector nu = perron_vector(g, s);
        const BoundReport r = best_distance_k_bound(g, s, nu, 2);
        REQUIRE(r.candidate == "chebyshev");
        REQUIRE(r.value >= 1.0 - 1e-9);
        REQUIRE(r.value == Catch::Approx(1.0).margin(1e-8));
    }
    SECTION("complete graphs survive through the identity candidate") {
        for (int n : {2, 3, 5, 8}) {
            const Graph g = testsupport::complete(n);
            const Spectrum s = spectrum_of(g);
            const WeightVector nu = ones_weights(g, s);
            const BoundReport r = best_distance_k_bound(g, s, nu, 1);
            REQUIRE(r.candidate == "identity");
            REQUIRE(r.value == Catch::Approx(1.0).margin(1e-9));
        }
    }
    SECTION("edgeless graphs report the exact total weight") {
        const Graph g(4);
        const Spectrum s = spectrum_of(g);
        const WeightVector nu = ones_weights(g, s);
        const BoundReport r = best_distance_k_bound(g, s, nu, 3);
        REQUIRE(r.value == Catch::Approx(4.0));
        REQUIRE(r.candidate == "edgeless-exact");
    }
    SECTION("k must be at least 1") {
        const Graph g = testsupport::cycle(5);
        const Spectrum s = spectrum_of(g);
        const WeightVector nu = perron_vector(g, s);
        REQUIRE_THROWS_AS(best_distance_k_bound(g, s, nu, 0), InputError);
    }
    SECTION("dominance: never worse than the identity polynomial at k = 1") {
        std::mt19937 rng(31);
        for (int rep = 0; rep < 20; ++rep) {
            const Graph g = testsupport::random_connected_graph(7, rng);
            const Spectrum s = spectrum_of(g);
            const WeightVector nu = perron_vector(g, s);
            const BoundReport best = best_distance_k_bound(g, s, nu, 1);
            const BoundReport ratio = ratio_bound_independence(s, nu);
            REQUIRE(best.value <= ratio.value + 1e-12);
        }
    }
}
