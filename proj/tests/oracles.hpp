#pragma once

// Test-side reference implementations, kept independent of the library code
// paths they check: composite-Simpson quadrature for the closed-form frequency
// integrals, and a cyclic-Jacobi full-spectrum solver (with its own Cholesky)
// for symmetric pencils. Plain std::vector matrices on purpose.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracle {

inline double simpson(const std::function<double(double)>& f, double a, double b,
                      int n) {
    if (n % 2) ++n;
    const double h = (b - a) / n;
    double acc = f(a) + f(b);
    for (int i = 1; i < n; ++i) acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

// Uniform-load frequency ratio squared as a function of r = p/pbar, r in [1, 3].
inline double case2_ratio2(double r, int n = 400000) {
    const double y0 = 0.5 - 0.5 * std::sqrt(1.0 - 1.0 / r);
    auto elastic = [](double y) {
        const double s = std::sin(M_PI * y);
        return s * s;
    };
    auto cracked = [r](double y) {
        const double s = std::sin(M_PI * y);
        const double g = std::fabs(r * (y - y * y) - 0.75);
        return s * s * g * g * g;
    };
    return 4.0 * (simpson(elastic, 0.0, y0, n) + 8.0 * simpson(cracked, y0, 0.5, n));
}

// Imposed-amplitude frequency ratio squared as a function of m = A_m/A in (0, 1].
inline double case3_ratio2(double m, int n = 400000) {
    const double y0 = std::asin(m) / M_PI;
    auto cracked = [m](double y) { return std::sqrt(m * m * m * std::sin(M_PI * y)); };
    return 2.0 * (y0 - (m / M_PI) * std::sqrt(1.0 - m * m) +
                  simpson(cracked, y0, 1.0 - y0, n));
}

using Matrix = std::vector<std::vector<double>>;

inline Matrix identity(std::size_t n) {
    Matrix I(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) I[i][i] = 1.0;
    return I;
}

// Full-spectrum symmetric eigenvalues/vectors by cyclic Jacobi rotations.
struct JacobiResult {
    std::vector<double> values;           // ascending
    std::vector<std::vector<double>> vectors;  // vectors[k] pairs with values[k]
};

inline JacobiResult jacobi_eigen(Matrix A) {
    const std::size_t n = A.size();
    Matrix V = identity(n);
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) off += A[i][j] * A[i][j];
    double norm = off;
    for (std::size_t i = 0; i < n; ++i) norm += A[i][i] * A[i][i];
    const double stop = 1e-28 * norm;

    for (int sweep = 0; sweep < 100 && off > stop; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (A[p][q] == 0.0) continue;
                const double theta = (A[q][q] - A[p][p]) / (2.0 * A[p][q]);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = A[k][p], akq = A[k][q];
                    A[k][p] = c * akp - s * akq;
                    A[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = A[p][k], aqk = A[q][k];
                    A[p][k] = c * apk - s * aqk;
                    A[q][k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = V[k][p], vkq = V[k][q];
                    V[k][p] = c * vkp - s * vkq;
                    V[k][q] = s * vkp + c * vkq;
                }
            }
        }
        off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) off += A[i][j] * A[i][j];
    }

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (A[order[j]][order[j]] < A[order[i]][order[i]])
                std::swap(order[i], order[j]);

    JacobiResult out;
    out.values.resize(n);
    out.vectors.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = A[order[k]][order[k]];
        for (std::size_t i = 0; i < n; ++i) out.vectors[k][i] = V[i][order[k]];
    }
    return out;
}

inline Matrix cholesky_lower(const Matrix& M) {
    const std::size_t n = M.size();
    Matrix L(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double sum = M[i][j];
            for (std::size_t k = 0; k < j; ++k) sum -= L[i][k] * L[j][k];
            if (i == j) {
                if (sum <= 0.0)
                    throw std::runtime_error("matrix not positive definite");
                L[i][i] = std::sqrt(sum);
            } else {
                L[i][j] = sum / L[j][j];
            }
        }
    }
    return L;
}

// Ascending eigenvalues of K x = lambda M x via L^-1 K L^-T and Jacobi.
inline std::vector<double> generalized_eigenvalues(const Matrix& K, const Matrix& M) {
    const std::size_t n = K.size();
    const Matrix L = cholesky_lower(M);
    // Y = L^-1 K (forward substitution column by column)
    Matrix Y(n, std::vector<double>(n, 0.0));
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t i = 0; i < n; ++i) {
            double sum = K[i][col];
            for (std::size_t k = 0; k < i; ++k) sum -= L[i][k] * Y[k][col];
            Y[i][col] = sum / L[i][i];
        }
    }
    // B = L^-1 Y^T
    Matrix B(n, std::vector<double>(n, 0.0));
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t i = 0; i < n; ++i) {
            double sum = Y[col][i];
            for (std::size_t k = 0; k < i; ++k) sum -= L[i][k] * B[k][col];
            B[i][col] = sum / L[i][i];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double avg = 0.5 * (B[i][j] + B[j][i]);
            B[i][j] = B[j][i] = avg;
        }
    return jacobi_eigen(B).values;
}

}  // namespace oracle
