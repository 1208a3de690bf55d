#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "specbound/graph.hpp"

namespace specbound {

/// Dense symmetric matrix, row-major. Construction rejects inputs whose
/// asymmetry exceeds 1e-12 relative and stores (a + a^T)/2.
class SymMatrix {
public:
    SymMatrix() = default;

    explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0) {
        if (n < 0) throw InputError(Errc::bad_param, "matrix order must be nonnegative");
    }

    static SymMatrix from_rows(int n, std::vector<double> entries) {
        if (static_cast<std::size_t>(n) * static_cast<std::size_t>(n) != entries.size())
            throw InputError(Errc::size_mismatch, "entry count does not match order");
        double max_abs = 0.0;
        for (double x : entries) max_abs = std::max(max_abs, std::abs(x));
        SymMatrix m(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const double aij = entries[static_cast<std::size_t>(i) * n + j];
                const double aji = entries[static_cast<std::size_t>(j) * n + i];
                if (std::abs(aij - aji) > 1e-12 * std::max(1.0, max_abs))
                    throw InputError(Errc::not_symmetric, "matrix is not symmetric");
                m.at(i, j) = 0.5 * (aij + aji);
            }
        }
        return m;
    }

    int order() const { return n_; }

    double& at(int i, int j) { return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)]; }
    double at(int i, int j) const { return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)]; }

    const std::vector<double>& data() const { return a_; }

    double norm_inf() const {
        double best = 0.0;
        for (int i = 0; i < n_; ++i) {
            double row = 0.0;
            for (int j = 0; j < n_; ++j) row += std::abs(at(i, j));
            best = std::max(best, row);
        }
        return best;
    }

    double norm_frobenius() const {
        return std::sqrt(std::inner_product(a_.begin(), a_.end(), a_.begin(), 0.0));
    }

    double max_abs() const {
        double best = 0.0;
        for (double x : a_) best = std::max(best, std::abs(x));
        return best;
    }

private:
    int n_ = 0;
    std::vector<double> a_;
};

inline SymMatrix adjacency_matrix(const Graph& g) {
    const int n = g.vertex_count();
    SymMatrix a(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) a.at(u, v) = a.at(v, u) = 1.0;
    return a;
}

/// Eigendecomposition with eigenvalues sorted descending. Column i of
/// `vectors` is the unit eigenvector of values[i].
struct Spectrum {
    int n = 0;
    std::vector<double> values;   // descending, with multiplicity
    std::vector<double> vectors;  // row-major n*n, column per eigenvalue
    double source_norm_inf = 0.0;

    double lambda1() const { return values.front(); }
    double lambda_min() const { return values.back(); }

    double vec(int row, int col) const { return vectors[static_cast<std::size_t>(row) * static_cast<std::size_t>(n) + static_cast<std::size_t>(col)]; }
};

/// Cyclic Jacobi. Deterministic: fixed sweep order, data-driven rotation
/// count, stable descending sort.
inline Spectrum eigendecompose(const SymMatrix& m) {
    const int n = m.order();
    if (n < 1) throw InputError(Errc::bad_param, "eigendecompose needs order >= 1");

    std::vector<double> a(m.data());
    std::vector<double> v(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

    auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    auto V = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(i) * n + j]; };

    const double frob = m.norm_frobenius();
    const double stop = 1e-10 * frob;

    auto off_norm = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += 2.0 * A(i, j) * A(i, j);
        return std::sqrt(s);
    };

    bool converged = (off_norm() <= stop);
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = A(p, q);
                if (apq == 0.0) continue;
                const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = A(k, p), akq = A(k, q);
                    A(k, p) = c * akp - s * akq;
                    A(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = A(p, k), aqk = A(q, k);
                    A(p, k) = c * apk - s * aqk;
                    A(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = V(k, p), vkq = V(k, q);
                    V(k, p) = c * vkp - s * vkq;
                    V(k, q) = s * vkp + c * vkq;
                }
            }
        }
        converged = (off_norm() <= stop);
    }
    if (!converged)
        throw NumericalError(Errc::no_convergence, "Jacobi did not converge in 100 sweeps");

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return A(i, i) > A(j, j); });

    Spectrum s;
    s.n = n;
    s.source_norm_inf = m.norm_inf();
    s.values.resize(static_cast<std::size_t>(n));
    s.vectors.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int col = 0; col < n; ++col) {
        s.values[static_cast<std::size_t>(col)] = A(order[static_cast<std::size_t>(col)], order[static_cast<std::size_t>(col)]);
        for (int row = 0; row < n; ++row)
            s.vectors[static_cast<std::size_t>(row) * n + col] = V(row, order[static_cast<std::size_t>(col)]);
    }
    return s;
}

enum class Normalization { min_entry_one, unit_norm, raw };

inline std::string to_string(Normalization n) {
    switch (n) {
        case Normalization::min_entry_one: return "min_entry_one";
        case Normalization::unit_norm: return "unit_norm";
        case Normalization::raw: return "raw";
    }
    return "?";
}

/// Strictly positive vertex weights. Built either from the Perron eigenvector
/// of a connected graph (eigen_certified) or as the all-ones vector, which is
/// an eigenvector only on regular graphs. The ratio and polynomial bounds
/// require eigen_certified weights; the clique and chromatic bounds do not.
struct WeightVector {
    std::vector<double> nu;
    double lambda1 = 0.0;
    Normalization normalization = Normalization::min_entry_one;
    bool eigen_certified = false;

    int size() const { return static_cast<int>(nu.size()); }

    double norm_sq() const {
        return std::inner_product(nu.begin(), nu.end(), nu.begin(), 0.0);
    }

    double min_entry() const {
        double m = nu.empty() ? 0.0 : nu.front();
        for (double x : nu) m = std::min(m, x);
        return m;
    }
};

namespace detail {

inline void apply_normalization(WeightVector& w) {
    if (w.nu.empty()) return;
    double scale = 1.0;
    if (w.normalization == Normalization::min_entry_one) {
        scale = w.min_entry();
    } else if (w.normalization == Normalization::unit_norm) {
        scale = std::sqrt(w.norm_sq());
    }
    if (w.normalization != Normalization::raw)
        for (double& x : w.nu) x /= scale;
}

}  // namespace detail

inline WeightVector perron_vector(const Graph& g, const Spectrum& s,
                                  Normalization normalization = Normalization::min_entry_one) {
    const int n = g.vertex_count();
    if (s.n != n) throw InputError(Errc::size_mismatch, "spectrum order does not match graph");
    if (!is_connected(g))
        throw InputError(Errc::disconnected,
                         "Perron weights are per-component; split the graph into components first");

    WeightVector w;
    w.normalization = normalization;
    w.eigen_certified = true;
    if (n == 0) return w;
    if (n == 1) {
        w.nu = {1.0};
        w.lambda1 = 0.0;
        return w;
    }

    // connected and n >= 2, so lambda1 is simple
    if (s.values[0] - s.values[1] <= 1e-10)
        throw NumericalError(Errc::sign_ambiguity, "lambda1 gap collapsed on a connected graph");

    w.lambda1 = s.values[0];
    w.nu.resize(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) w.nu[static_cast<std::size_t>(u)] = s.vec(u, 0);

    double dominant = 0.0;
    for (double x : w.nu)
        if (std::abs(x) > std::abs(dominant)) dominant = x;
    if (dominant < 0.0)
        for (double& x : w.nu) x = -x;
    for (double x : w.nu)
        if (x <= 1e-10)
            throw NumericalError(Errc::sign_ambiguity, "Perron entry not strictly positive");

    detail::apply_normalization(w);
    return w;
}

/// All-ones weights with lambda1 from the spectrum. eigen_certified is set
/// exactly when the ones vector really is the lambda1 eigenvector, i.e. the
/// graph is regular.
inline WeightVector ones_weights(const Graph& g, const Spectrum& s,
                                 Normalization normalization = Normalization::min_entry_one) {
    const int n = g.vertex_count();
    if (s.n != n) throw InputError(Errc::size_mismatch, "spectrum order does not match graph");
    WeightVector w;
    w.normalization = normalization;
    w.nu.assign(static_cast<std::size_t>(n), 1.0);
    w.lambda1 = n > 0 ? s.values[0] : 0.0;
    bool regular = true;
    for (int u = 1; u < n; ++u)
        if (g.degree(u) != g.degree(0)) regular = false;
    w.eigen_certified = regular;
    detail::apply_normalization(w);
    return w;
}

/// Groups near-equal eigenvalues; the representative is the group mean and
/// multiplicities sum to n.
inline std::vector<std::pair<double, int>> distinct_eigenvalues(const Spectrum& s, double tol = 1e-7) {
    const double gap = tol * std::max(1.0, s.source_norm_inf);
    std::vector<std::pair<double, int>> groups;
    std::size_t i = 0;
    while (i < s.values.size()) {
        std::size_t j = i + 1;
        double sum = s.values[i];
        while (j < s.values.size() && s.values[j - 1] - s.values[j] <= gap) {
            sum += s.values[j];
            ++j;
        }
        groups.emplace_back(sum / static_cast<double>(j - i), static_cast<int>(j - i));
        i = j;
    }
    return groups;
}

}  // namespace specbound
