#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "specbound/polynomial.hpp"
#include "specbound/weights.hpp"

namespace specbound {

/// Minimax data for the alternating-polynomial optimization: maximize
/// P(target) over degree <= k polynomials with |P| <= 1 on the mesh of
/// distinct eigenvalues below the target.
struct MinimaxProblem {
    std::vector<double> mesh;  // distinct eigenvalues excluding lambda1, descending
    double target = 0.0;       // lambda1
    int k = 0;
};

inline MinimaxProblem make_minimax_problem(const Spectrum& s, int k) {
    const auto groups = distinct_eigenvalues(s);
    if (groups.size() < 2)
        throw InputError(Errc::degenerate_mesh, "spectrum has a single distinct eigenvalue");
    MinimaxProblem prob;
    prob.k = k;
    prob.target = s.values[0];
    for (std::size_t i = 1; i < groups.size(); ++i) prob.mesh.push_back(groups[i].first);
    return prob;
}

/// Degree-k Chebyshev polynomial T_k affinely mapped from the mesh hull
/// [min(mesh), max(mesh)] onto [-1, 1]; |P| <= 1 on the whole hull, so it is
/// always feasible, and it is a strong (often optimal) candidate.
inline Polynomial chebyshev_candidate(const MinimaxProblem& prob) {
    if (prob.mesh.empty()) throw InputError(Errc::degenerate_mesh, "empty mesh");
    const double b = prob.mesh.front();
    const double a = prob.mesh.back();
    if (!(b - a > 1e-12))
        throw InputError(Errc::degenerate_mesh,
                         "single-point mesh: the objective is unbounded over feasible polynomials");
    if (prob.k <= 0) return Polynomial::constant(1.0);
    // y(x) maps [a,b] onto [-1,1]; T_k via the three-term recurrence
    const Polynomial y({-(a + b) / (b - a), 2.0 / (b - a)});
    Polynomial t_prev = Polynomial::constant(1.0);
    Polynomial t_cur = y;
    for (int j = 2; j <= prob.k; ++j) {
        Polynomial t_next = 2.0 * (y * t_cur) - t_prev;
        t_prev = std::move(t_cur);
        t_cur = std::move(t_next);
    }
    return t_cur;
}

namespace detail {

/// Dense tableau simplex for max c^T x s.t. A x <= b, x >= 0 with b >= 0
/// (slack basis is feasible, no phase 1). Bland's rule on both the entering
/// and leaving choices guarantees termination. Sized for tiny problems.
struct SimplexResult {
    std::vector<double> x;
    double objective = 0.0;
};

inline SimplexResult simplex_max(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                                 const std::vector<double>& c) {
    const int m = static_cast<int>(a.size());
    const int nv = static_cast<int>(c.size());
    const int cols = nv + m;
    std::vector<std::vector<double>> tab(static_cast<std::size_t>(m),
                                         std::vector<double>(static_cast<std::size_t>(cols) + 1, 0.0));
    std::vector<int> basis(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < nv; ++j) tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(nv + i)] = 1.0;
        tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols)] = b[static_cast<std::size_t>(i)];
        basis[static_cast<std::size_t>(i)] = nv + i;
    }
    std::vector<double> cost(static_cast<std::size_t>(cols), 0.0);
    for (int j = 0; j < nv; ++j) cost[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j)];

    double scale = 1.0;
    for (const auto& row : a)
        for (double v : row) scale = std::max(scale, std::abs(v));
    for (double v : c) scale = std::max(scale, std::abs(v));
    const double eps = 1e-9 * scale;

    for (int iter = 0; iter < 20000; ++iter) {
        // reduced costs d_j = c_j - c_B^T B^{-1} A_j, recomputed to avoid drift
        int enter = -1;
        for (int j = 0; j < cols && enter < 0; ++j) {
            double d = cost[static_cast<std::size_t>(j)];
            for (int i = 0; i < m; ++i)
                d -= cost[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])] *
                     tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (d > eps) enter = j;  // Bland: first improving index
        }
        if (enter < 0) {
            SimplexResult res;
            res.x.assign(static_cast<std::size_t>(nv), 0.0);
            for (int i = 0; i < m; ++i)
                if (basis[static_cast<std::size_t>(i)] < nv)
                    res.x[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])] =
                        tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols)];
            for (int j = 0; j < nv; ++j) res.objective += c[static_cast<std::size_t>(j)] * res.x[static_cast<std::size_t>(j)];
            return res;
        }
        int leave = -1;
        double best_ratio = 0.0;
        for (int i = 0; i < m; ++i) {
            const double piv = tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
            if (piv <= eps) continue;
            const double ratio = tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols)] / piv;
            if (leave < 0 || ratio < best_ratio - 1e-12 * (1.0 + std::abs(best_ratio)) ||
                (std::abs(ratio - best_ratio) <= 1e-12 * (1.0 + std::abs(best_ratio)) &&
                 basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0)
            throw InputError(Errc::unbounded_objective, "objective unbounded over the feasible region");
        auto& prow = tab[static_cast<std::size_t>(leave)];
        const double piv = prow[static_cast<std::size_t>(enter)];
        for (double& v : prow) v /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave) continue;
            auto& row = tab[static_cast<std::size_t>(i)];
            const double f = row[static_cast<std::size_t>(enter)];
            if (f == 0.0) continue;
            for (int j = 0; j <= cols; ++j) row[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
        }
        basis[static_cast<std::size_t>(leave)] = enter;
    }
    throw NumericalError(Errc::lp_numerical_failure, "simplex did not terminate");
}

}  // namespace detail

/// LP-optimal alternating polynomial: maximize P(target) over deg <= k with
/// -1 <= P(mu) <= 1 at every mesh point, via simplex on the split
/// c_j = p_j - q_j (p, q >= 0). Unbounded exactly when k >= |mesh| (a degree-k
/// polynomial can then vanish on the whole mesh while growing at the target).
inline Polynomial optimal_alternating_polynomial(const MinimaxProblem& prob) {
    if (prob.mesh.empty()) throw InputError(Errc::degenerate_mesh, "empty mesh");
    if (prob.k < 0) throw InputError(Errc::bad_param, "negative degree");
    const int k = prob.k;
    const int d = static_cast<int>(prob.mesh.size());
    if (d < k + 1)
        throw InputError(Errc::unbounded_objective,
                         "degree " + std::to_string(k) + " exceeds mesh size " + std::to_string(d) +
                             " - 1; the LP is unbounded");

    const int nv = 2 * (k + 1);  // p_0..p_k, q_0..q_k
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    for (double mu : prob.mesh) {
        std::vector<double> up(static_cast<std::size_t>(nv), 0.0), down(static_cast<std::size_t>(nv), 0.0);
        double pw = 1.0;
        for (int j = 0; j <= k; ++j) {
            up[static_cast<std::size_t>(j)] = pw;
            up[static_cast<std::size_t>(k + 1 + j)] = -pw;
            down[static_cast<std::size_t>(j)] = -pw;
            down[static_cast<std::size_t>(k + 1 + j)] = pw;
            pw *= mu;
        }
        a.push_back(std::move(up));
        b.push_back(1.0);
        a.push_back(std::move(down));
        b.push_back(1.0);
    }
    std::vector<double> c(static_cast<std::size_t>(nv), 0.0);
    double pw = 1.0;
    for (int j = 0; j <= k; ++j) {
        c[static_cast<std::size_t>(j)] = pw;
        c[static_cast<std::size_t>(k + 1 + j)] = -pw;
        pw *= prob.target;
    }

    const auto sol = detail::simplex_max(a, b, c);
    std::vector<double> coeffs(static_cast<std::size_t>(k) + 1, 0.0);
    for (int j = 0; j <= k; ++j)
        coeffs[static_cast<std::size_t>(j)] = sol.x[static_cast<std::size_t>(j)] - sol.x[static_cast<std::size_t>(k + 1 + j)];
    Polynomial p(std::move(coeffs));
    for (double mu : prob.mesh)
        if (std::abs(p(mu)) > 1.0 + 1e-7)
            throw NumericalError(Errc::lp_numerical_failure, "simplex solution violates a mesh constraint");
    return p;
}

/// Tightest valid distance-k bound over three polynomial candidates: the
/// LP-optimal alternating polynomial, the Chebyshev hull candidate, and the
/// identity P(x) = x (always admissible for k >= 1, and the only survivor
/// when the mesh degenerates, e.g. complete graphs). Candidates that are
/// unbounded, degenerate, or vacuous are skipped; the smallest surviving
/// bound wins.
inline BoundReport best_distance_k_bound(const Graph& g, const Spectrum& s, const WeightVector& nu, int k) {
    if (k < 1) throw InputError(Errc::bad_param, "distance parameter k must be >= 1");
    if (detail::edgeless_spectrum(s)) {
        BoundReport r;
        r.bound_name = "polynomial-ratio";
        r.bounds_what = "distance-" + std::to_string(k) + " weight-independence";
        r.direction = Direction::upper;
        r.lambda1 = s.lambda1();
        r.lambda_min = s.lambda_min();
        r.weight_total = nu.norm_sq();
        r.k = k;
        r.value = r.weight_total;  // every vertex set is distance-k independent
        r.candidate = "edgeless-exact";
        return r;
    }

    std::vector<std::pair<std::string, Polynomial>> candidates;
    try {
        const MinimaxProblem prob = make_minimax_problem(s, k);
        try {
            candidates.emplace_back("lp", optimal_alternating_polynomial(prob));
        } catch (const InputError&) {
        }
        try {
            candidates.emplace_back("chebyshev", chebyshev_candidate(prob));
        } catch (const InputError&) {
        }
    } catch (const InputError&) {
    }
    candidates.emplace_back("identity", Polynomial::identity());

    bool have_best = false;
    BoundReport best;
    for (const auto& [name, poly] : candidates) {
        try {
            BoundReport r = polynomial_ratio_bound(g, s, nu, poly, k);
            r.candidate = name;
            if (!have_best || r.value < best.value) {
                best = std::move(r);
                have_best = true;
            }
        } catch (const InputError&) {
        }
    }
    if (!have_best) throw InputError(Errc::vacuous_bound, "no admissible polynomial candidate");
    return best;
}

}  // namespace specbound
