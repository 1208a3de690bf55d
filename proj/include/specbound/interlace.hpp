#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "specbound/eigen.hpp"

namespace specbound {

/// Ordered list of nonempty disjoint vertex classes covering 0..n-1.
struct Partition {
    std::vector<std::vector<int>> parts;

    int class_count() const { return static_cast<int>(parts.size()); }

    void validate(int n) const {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        if (parts.empty() && n > 0) throw InputError(Errc::bad_partition, "partition has no classes");
        for (const auto& part : parts) {
            if (part.empty()) throw InputError(Errc::bad_partition, "empty partition class");
            for (int v : part) {
                if (v < 0 || v >= n) throw InputError(Errc::bad_partition, "vertex " + std::to_string(v) + " out of range");
                if (seen[static_cast<std::size_t>(v)]) throw InputError(Errc::bad_partition, "vertex " + std::to_string(v) + " repeated");
                seen[static_cast<std::size_t>(v)] = 1;
            }
        }
        for (int v = 0; v < n; ++v)
            if (!seen[static_cast<std::size_t>(v)]) throw InputError(Errc::bad_partition, "vertex " + std::to_string(v) + " missing");
    }
};

// CLI partition format: classes separated by ';', vertices by ',',
// e.g. "0;1,4,5;2,3,6,7,8,9".
inline Partition parse_partition(const std::string& text) {
    Partition p;
    std::istringstream in(text);
    std::string chunk;
    while (std::getline(in, chunk, ';')) {
        std::vector<int> part;
        std::istringstream cs(chunk);
        std::string token;
        while (std::getline(cs, token, ',')) {
            std::size_t pos = 0;
            int v;
            try {
                v = std::stoi(token, &pos);
            } catch (const std::exception&) {
                throw InputError(Errc::bad_partition, "bad vertex token '" + token + "'");
            }
            while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
            if (pos != token.size()) throw InputError(Errc::bad_partition, "bad vertex token '" + token + "'");
            part.push_back(v);
        }
        if (part.empty()) throw InputError(Errc::bad_partition, "empty partition class");
        p.parts.push_back(std::move(part));
    }
    if (p.parts.empty()) throw InputError(Errc::bad_partition, "empty partition string");
    return p;
}

/// Result of checking mu against lambda: lambda_i >= mu_i >= lambda_{n-m+i}.
struct InterlacingReport {
    bool holds = false;
    // per index i (0-based): {lambda_i - mu_i, mu_i - lambda_{n-m+i}}
    std::vector<std::pair<double, double>> per_index_slack;
    int tight_upper = 0;  // largest k with mu_i = lambda_i for all i < k
    int tight_lower = 0;  // largest l with mu_{m-1-i} = lambda_{n-1-i} for all i < l
    double tol = 0.0;
};

inline InterlacingReport check_interlacing(const std::vector<double>& big,
                                           const std::vector<double>& small,
                                           std::optional<double> tol_override = std::nullopt) {
    const int n = static_cast<int>(big.size());
    const int m = static_cast<int>(small.size());
    if (m > n) throw InputError(Errc::size_mismatch, "small spectrum longer than big one");

    double scale = 1.0;
    for (double x : big) scale = std::max(scale, std::abs(x));
    const double sort_tol = 1e-12 * scale;
    for (int i = 1; i < n; ++i)
        if (big[static_cast<std::size_t>(i)] > big[static_cast<std::size_t>(i - 1)] + sort_tol)
            throw InputError(Errc::not_sorted, "big spectrum not descending");
    for (int i = 1; i < m; ++i)
        if (small[static_cast<std::size_t>(i)] > small[static_cast<std::size_t>(i - 1)] + sort_tol)
            throw InputError(Errc::not_sorted, "small spectrum not descending");

    InterlacingReport report;
    report.tol = tol_override.value_or(1e-8 * scale);
    report.holds = true;
    report.per_index_slack.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const double upper = big[static_cast<std::size_t>(i)] - small[static_cast<std::size_t>(i)];
        const double lower = small[static_cast<std::size_t>(i)] - big[static_cast<std::size_t>(n - m + i)];
        report.per_index_slack.emplace_back(upper, lower);
        if (upper < -report.tol || lower < -report.tol) report.holds = false;
    }
    while (report.tight_upper < m &&
           std::abs(report.per_index_slack[static_cast<std::size_t>(report.tight_upper)].first) <= report.tol)
        ++report.tight_upper;
    while (report.tight_lower < m &&
           std::abs(report.per_index_slack[static_cast<std::size_t>(m - 1 - report.tight_lower)].second) <= report.tol)
        ++report.tight_lower;
    return report;
}

inline SymMatrix principal_submatrix(const SymMatrix& m, std::vector<int> subset) {
    if (subset.empty()) throw InputError(Errc::empty_subset, "empty subset");
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    for (int v : subset)
        if (v < 0 || v >= m.order()) throw InputError(Errc::index_out_of_range, "subset index out of range");
    const int k = static_cast<int>(subset.size());
    SymMatrix sub(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            sub.at(i, j) = m.at(subset[static_cast<std::size_t>(i)], subset[static_cast<std::size_t>(j)]);
    return sub;
}

/// Weighted quotient of A by a partition. Column i of S is the normalized
/// weighted characteristic vector of class i, so B = S^T A S is symmetric and
/// its eigenvalues interlace A's. row_average is the similar matrix
/// R_ij = (1/w(V_i)) sum_{u in V_i, v in V_j} nu_u nu_v a_uv, which reduces to
/// the classical row-sum average when nu = 1.
struct QuotientResult {
    SymMatrix B;
    std::vector<double> S;  // row-major n*m, column per class
    std::vector<double> mu; // eigenvalues of B, descending
    std::vector<double> row_average;  // row-major m*m
    InterlacingReport report;
    bool tight = false;
    double residual = 0.0;  // ||AS - SB||_max
    int n = 0;
    int m = 0;
};

struct TightnessCertificate {
    bool is_tight = false;
    double residual = 0.0;
};

namespace detail {

inline double quotient_residual(const SymMatrix& a, const QuotientResult& q) {
    const int n = q.n, m = q.m;
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            double as = 0.0, sb = 0.0;
            for (int k = 0; k < n; ++k) as += a.at(i, k) * q.S[static_cast<std::size_t>(k) * m + j];
            for (int k = 0; k < m; ++k) sb += q.S[static_cast<std::size_t>(i) * m + k] * q.B.at(k, j);
            worst = std::max(worst, std::abs(as - sb));
        }
    }
    return worst;
}

}  // namespace detail

inline TightnessCertificate tightness_certificate(const SymMatrix& a, const QuotientResult& q,
                                                  std::optional<double> tol_override = std::nullopt) {
    const double tol = tol_override.value_or(1e-8 * std::max(1.0, a.norm_inf()));
    TightnessCertificate cert;
    cert.residual = detail::quotient_residual(a, q);
    const bool eig_tight = q.report.tight_upper + q.report.tight_lower >= q.m;
    // eigenvalue equalities detect tightness; the invariant-subspace residual
    // confirms it, so a borderline tolerance cannot mint a false certificate
    cert.is_tight = eig_tight && cert.residual <= tol;
    return cert;
}

inline QuotientResult weighted_quotient(const SymMatrix& a, const Partition& p, const WeightVector& nu) {
    const int n = a.order();
    p.validate(n);
    if (nu.size() != n) throw InputError(Errc::size_mismatch, "weight vector order does not match matrix");
    for (double x : nu.nu)
        if (!(x > 0.0)) throw InputError(Errc::bad_param, "weights must be strictly positive");

    const int m = p.class_count();
    QuotientResult q;
    q.n = n;
    q.m = m;
    q.S.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(m), 0.0);

    std::vector<double> class_weight(static_cast<std::size_t>(m), 0.0);
    for (int i = 0; i < m; ++i) {
        for (int v : p.parts[static_cast<std::size_t>(i)])
            class_weight[static_cast<std::size_t>(i)] += nu.nu[static_cast<std::size_t>(v)] * nu.nu[static_cast<std::size_t>(v)];
        const double norm = std::sqrt(class_weight[static_cast<std::size_t>(i)]);
        for (int v : p.parts[static_cast<std::size_t>(i)])
            q.S[static_cast<std::size_t>(v) * m + i] = nu.nu[static_cast<std::size_t>(v)] / norm;
    }

    // C_ij = sum_{u in V_i, v in V_j} nu_u nu_v a_uv
    std::vector<double> c(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0.0);
    std::vector<int> cls(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < m; ++i)
        for (int v : p.parts[static_cast<std::size_t>(i)]) cls[static_cast<std::size_t>(v)] = i;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            c[static_cast<std::size_t>(cls[static_cast<std::size_t>(u)]) * m + cls[static_cast<std::size_t>(v)]] +=
                nu.nu[static_cast<std::size_t>(u)] * nu.nu[static_cast<std::size_t>(v)] * a.at(u, v);

    q.B = SymMatrix(m);
    q.row_average.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0.0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const double cij = c[static_cast<std::size_t>(i) * m + j];
            q.B.at(i, j) = cij / std::sqrt(class_weight[static_cast<std::size_t>(i)] * class_weight[static_cast<std::size_t>(j)]);
            q.row_average[static_cast<std::size_t>(i) * m + j] = cij / class_weight[static_cast<std::size_t>(i)];
        }
    }

    const Spectrum big = eigendecompose(a);
    const Spectrum smallspec = eigendecompose(q.B);
    q.mu = smallspec.values;
    q.report = check_interlacing(big.values, q.mu);
    if (!q.report.holds)
        throw NumericalError(Errc::interlacing_violated,
                             "quotient interlacing failed; this indicates numerical breakdown");
    const auto cert = tightness_certificate(a, q);
    q.tight = cert.is_tight;
    q.residual = cert.residual;
    return q;
}

inline QuotientResult standard_quotient(const SymMatrix& a, const Partition& p) {
    WeightVector ones;
    ones.nu.assign(static_cast<std::size_t>(a.order()), 1.0);
    ones.lambda1 = 0.0;
    ones.normalization = Normalization::raw;
    return weighted_quotient(a, p, ones);
}

}  // namespace specbound
