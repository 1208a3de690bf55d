#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "specbound/eigen.hpp"

namespace specbound {

/// Dense real polynomial, coefficients in ascending degree order.
struct Polynomial {
    std::vector<double> coeffs;  // coeffs[i] multiplies x^i; empty means 0

    Polynomial() = default;
    explicit Polynomial(std::vector<double> c) : coeffs(std::move(c)) { trim(); }

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
    }

    double operator()(double x) const {
        double acc = 0.0;
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
        return acc;
    }

    static Polynomial identity() { return Polynomial({0.0, 1.0}); }
    static Polynomial constant(double c) { return Polynomial({c}); }
};

inline Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<double> c(std::max(a.coeffs.size(), b.coeffs.size()), 0.0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
    return Polynomial(std::move(c));
}

inline Polynomial operator*(double s, const Polynomial& p) {
    std::vector<double> c = p.coeffs;
    for (double& x : c) x *= s;
    return Polynomial(std::move(c));
}

inline Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs.empty() || b.coeffs.empty()) return Polynomial();
    std::vector<double> c(a.coeffs.size() + b.coeffs.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
    return Polynomial(std::move(c));
}

inline Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-1.0 * b); }

/// P(A) for symmetric A via Horner on matrices; the result is symmetrized to
/// absorb the O(n eps) drift of repeated multiplication.
inline SymMatrix matrix_apply(const Polynomial& p, const SymMatrix& a) {
    const int n = a.order();
    SymMatrix acc(n);
    if (p.coeffs.empty()) return acc;
    for (int i = 0; i < n; ++i) acc.at(i, i) = p.coeffs.back();
    for (std::size_t ci = p.coeffs.size() - 1; ci-- > 0;) {
        SymMatrix next(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                double s = 0.0;
                for (int k = 0; k < n; ++k) s += acc.at(i, k) * a.at(k, j);
                next.at(i, j) = s;
            }
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) {
                const double avg = 0.5 * (next.at(i, j) + next.at(j, i));
                next.at(i, j) = avg;
                next.at(j, i) = avg;
            }
        for (int i = 0; i < n; ++i) next.at(i, i) += p.coeffs[ci];
        acc = std::move(next);
    }
    return acc;
}

inline std::string to_string(const Polynomial& p, int precision = 12) {
    if (p.coeffs.empty()) return "0";
    std::string out;
    char buf[64];
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, p.coeffs[i]);
        if (!out.empty()) out += " + ";
        out += buf;
        if (i == 1) out += "*x";
        else if (i > 1) out += "*x^" + std::to_string(i);
    }
    return out;
}

}  // namespace specbound
