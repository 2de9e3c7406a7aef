#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

namespace oracle {

// Cyclic Jacobi rotations on a dense real symmetric matrix (row-major).
// Returns eigenvalues and the matrix of eigenvectors (columns), unsorted.
inline std::pair<std::vector<double>, std::vector<double>> jacobi_eigen(std::vector<double> A, std::size_t n)
{
    std::vector<double> V(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        V[i * n + i] = 1.0;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                off += A[p * n + q] * A[p * n + q];
        if (off < 1e-30)
            break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = A[p * n + q];
                if (std::abs(apq) < 1e-300)
                    continue;
                const double theta = (A[q * n + q] - A[p * n + p]) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = A[k * n + p], akq = A[k * n + q];
                    A[k * n + p] = c * akp - s * akq;
                    A[k * n + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = A[p * n + k], aqk = A[q * n + k];
                    A[p * n + k] = c * apk - s * aqk;
                    A[q * n + k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = V[k * n + p], vkq = V[k * n + q];
                    V[k * n + p] = c * vkp - s * vkq;
                    V[k * n + q] = s * vkp + c * vkq;
                }
            }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i)
        ev[i] = A[i * n + i];
    return {ev, V};
}

inline std::vector<double> tridiag_dense(const std::vector<double>& d, const std::vector<double>& e)
{
    const std::size_t n = d.size();
    std::vector<double> A(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        A[i * n + i] = d[i];
        if (i + 1 < n)
            A[i * n + i + 1] = A[(i + 1) * n + i] = e[i];
    }
    return A;
}

// Eigenvalues of a Hermitian matrix through its real 2n x 2n embedding
// [[Re, -Im], [Im, Re]]; every eigenvalue appears twice.
inline std::vector<double> hermitian_eigs_embedded(const std::vector<std::complex<double>>& H, std::size_t n)
{
    const std::size_t m = 2 * n;
    std::vector<double> A(m * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto h = H[i * n + j];
            A[i * m + j] = h.real();
            A[i * m + j + n] = -h.imag();
            A[(i + n) * m + j] = h.imag();
            A[(i + n) * m + j + n] = h.real();
        }
    auto ev = jacobi_eigen(A, m).first;
    std::sort(ev.begin(), ev.end());
    std::vector<double> out;
    for (std::size_t i = 0; i < m; i += 2)
        out.push_back(0.5 * (ev[i] + ev[i + 1]));
    return out;
}

inline std::vector<std::complex<double>> matmul(const std::vector<std::complex<double>>& A,
                                                const std::vector<std::complex<double>>& B, std::size_t n)
{
    std::vector<std::complex<double>> C(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                C[i * n + j] += A[i * n + k] * B[k * n + j];
    return C;
}

}  // namespace oracle
