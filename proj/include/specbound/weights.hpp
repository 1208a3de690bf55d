#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "specbound/eigen.hpp"
#include "specbound/graph.hpp"
#include "specbound/polynomial.hpp"

namespace specbound {

enum class Direction { upper, lower };

inline const char* to_string(Direction d) { return d == Direction::upper ? "upper" : "lower"; }

/// One spectral bound: its value, what it bounds, the spectral inputs it was
/// built from, and (when an oracle ran) the exact value and slack.
struct BoundReport {
    std::string bound_name;
    double value = 0.0;
    std::string bounds_what;  // e.g. "weight-independence", "chromatic-number"
    Direction direction = Direction::upper;

    // inputs digest
    double lambda1 = 0.0;
    double lambda_min = 0.0;
    double weight_total = 0.0;  // ||nu||^2
    std::optional<Polynomial> polynomial;
    std::optional<int> k;
    std::string candidate;  // which polynomial candidate won, when applicable

    std::optional<double> oracle_value;
    std::optional<double> slack;  // >= 0 when the bound is sound
    std::optional<bool> tight;    // |slack| <= 1e-6

    void attach_oracle(double exact) {
        oracle_value = exact;
        slack = direction == Direction::upper ? value - exact : exact - value;
        tight = std::abs(*slack) <= 1e-6;
    }

    // An upper bound must not undercut the exact value (and dually for lower).
    bool sound(double rel_tol = 1e-9) const {
        if (!slack) return true;
        return *slack >= -rel_tol * std::max(1.0, std::abs(value));
    }
};

inline double set_weight(const WeightVector& nu, const std::vector<int>& u) {
    double w = 0.0;
    for (int v : u) {
        if (v < 0 || v >= nu.size()) throw InputError(Errc::index_out_of_range, "set_weight: vertex out of range");
        w += nu.nu[static_cast<std::size_t>(v)] * nu.nu[static_cast<std::size_t>(v)];
    }
    return w;
}

namespace detail {

// Adjacency spectra: any edge forces lambda_min <= -1 (its 2x2 principal
// submatrix interlaces), so lambda_min > -0.5 identifies the edgeless case.
inline bool edgeless_spectrum(const Spectrum& s) { return s.lambda_min() > -0.5; }

}  // namespace detail

/// Ratio bound on the weight independence number alpha* = max{w(U) : U
/// independent}: for independent U, the unit vector s = rho_U/||rho_U||
/// satisfies s^T A s = 0; expanding s in the eigenbasis with
/// a1^2 = w(U)/||nu||^2 gives 0 >= a1^2 lambda1 + (1 - a1^2) lambda_n, hence
/// w(U) <= ||nu||^2 (-lambda_n)/(lambda1 - lambda_n). Requires nu to be the
/// lambda1-eigenvector. Edgeless graphs get the exact value ||nu||^2 (all of V
/// is independent) rather than the vacuous 0/0 formula.
inline BoundReport ratio_bound_independence(const Spectrum& s, const WeightVector& nu) {
    if (!nu.eigen_certified)
        throw InputError(Errc::weights_not_eigenvector,
                         "the ratio bound is sound only for lambda1-eigenvector weights "
                         "(all-ones weights qualify on regular graphs only)");
    BoundReport r;
    r.bound_name = "ratio";
    r.bounds_what = "weight-independence";
    r.direction = Direction::upper;
    r.lambda1 = s.lambda1();
    r.lambda_min = s.lambda_min();
    r.weight_total = nu.norm_sq();
    if (detail::edgeless_spectrum(s)) {
        r.value = r.weight_total;
        r.candidate = "edgeless-exact";
        return r;
    }
    r.value = r.weight_total * (-r.lambda_min) / (r.lambda1 - r.lambda_min);
    return r;
}

/// Polynomial ratio bound on the distance-k weight independence number
/// alpha*_k = max{w(U) : pairwise distance in U > k}: for such U and
/// deg(P) <= k, the entries of P(A) indexed inside U are confined to the
/// diagonal, so s^T P(A) s <= M := max_u P(A)_uu for s = rho_U/||rho_U||;
/// the eigen-expansion (a1^2 = w(U)/||nu||^2) gives
/// P(lambda1) a1^2 + m (1 - a1^2) <= M with m := min_{i>=2} P(lambda_i),
/// hence w(U) <= ||nu||^2 (M - m)/(P(lambda1) - m).
inline BoundReport polynomial_ratio_bound(const Graph& g, const Spectrum& s, const WeightVector& nu,
                                          const Polynomial& p, int k) {
    if (p.degree() > k)
        throw InputError(Errc::degree_too_high, "polynomial degree exceeds the distance parameter k");
    if (!nu.eigen_certified)
        throw InputError(Errc::weights_not_eigenvector,
                         "the polynomial ratio bound is sound only for lambda1-eigenvector weights");
    const int n = s.n;
    if (n < 2)
        throw InputError(Errc::vacuous_bound, "single eigenvalue leaves no mesh to separate from");
    const double p_lambda1 = p(s.values[0]);
    double m = p(s.values[1]);
    for (int i = 2; i < n; ++i) m = std::min(m, p(s.values[static_cast<std::size_t>(i)]));
    if (!(p_lambda1 > m))
        throw InputError(Errc::vacuous_bound, "P(lambda1) does not exceed min_{i>=2} P(lambda_i)");

    const SymMatrix pa = matrix_apply(p, adjacency_matrix(g));
    double diag_max = pa.at(0, 0);
    for (int u = 1; u < n; ++u) diag_max = std::max(diag_max, pa.at(u, u));

    BoundReport r;
    r.bound_name = "polynomial-ratio";
    r.bounds_what = "distance-" + std::to_string(k) + " weight-independence";
    r.direction = Direction::upper;
    r.lambda1 = s.lambda1();
    r.lambda_min = s.lambda_min();
    r.weight_total = nu.norm_sq();
    r.polynomial = p;
    r.k = k;
    r.value = r.weight_total * (diag_max - m) / (p_lambda1 - m);
    return r;
}

/// Rayleigh bound on the weight clique parameter kappa* = max over cliques U
/// of sigma(U)^2/w(U) with sigma(U) = sum nu_u: for a clique,
/// s^T A s = (sigma^2 - w)/w for s = rho_U/||rho_U||, and the Rayleigh
/// quotient of any unit vector is at most lambda1, so kappa* <= 1 + lambda1.
/// Sound for any positive nu (not only eigenvectors).
inline BoundReport clique_rayleigh_bound(const Spectrum& s, const WeightVector& nu) {
    BoundReport r;
    r.bound_name = "clique-rayleigh";
    r.bounds_what = "weight-clique";
    r.direction = Direction::upper;
    r.lambda1 = s.lambda1();
    r.lambda_min = s.lambda_min();
    r.weight_total = nu.norm_sq();
    r.value = 1.0 + r.lambda1;
    return r;
}

/// Two lower bounds on the chromatic number. (a) Color classes partition V,
/// so chi * alpha* >= sum_i w(U_i) = ||nu||^2, giving chi >= ||nu||^2/alpha*
/// for any valid upper bound on alpha* (sound for any positive nu).
/// (b) Hoffman-type chi >= 1 + lambda1/(-lambda_n). Plugging the ratio-bound
/// value into (a) reproduces (b) exactly.
inline std::vector<BoundReport> chromatic_lower_bounds(const Spectrum& s, const WeightVector& nu,
                                                       double alpha_star_upper) {
    if (!(alpha_star_upper > 0.0))
        throw InputError(Errc::nonpositive_input, "alpha* upper bound must be positive");
    BoundReport part;
    part.bound_name = "chromatic-partition";
    part.bounds_what = "chromatic-number";
    part.direction = Direction::lower;
    part.lambda1 = s.lambda1();
    part.lambda_min = s.lambda_min();
    part.weight_total = nu.norm_sq();
    part.value = part.weight_total / alpha_star_upper;

    BoundReport hoff;
    hoff.bound_name = "chromatic-hoffman";
    hoff.bounds_what = "chromatic-number";
    hoff.direction = Direction::lower;
    hoff.lambda1 = s.lambda1();
    hoff.lambda_min = s.lambda_min();
    hoff.weight_total = nu.norm_sq();
    hoff.value = detail::edgeless_spectrum(s) ? 1.0 : 1.0 + hoff.lambda1 / (-hoff.lambda_min);

    return {part, hoff};
}

}  // namespace specbound
