#include "markovlab/hermitian.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "markovlab/error.hpp"
#include "markovlab/rng.hpp"

namespace markovlab {

HermitianMatrix::HermitianMatrix(std::size_t n) : n_(n), upper_(n * (n + 1) / 2, cplx(0.0, 0.0))
{
    if (n == 0)
        throw InvalidArgument("Hermitian matrix needs n >= 1");
}

HermitianMatrix HermitianMatrix::from_dense(std::size_t n, std::span<const cplx> dense)
{
    if (dense.size() != n * n)
        throw InvalidArgument("dense input must have n*n entries");
    HermitianMatrix H(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const cplx u = dense[i * n + j], l = dense[j * n + i];
            if (std::abs(u - std::conj(l)) > 1e-12 * (1.0 + std::abs(u)))
                throw InvalidArgument("matrix is not Hermitian at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            H.upper_[H.index(i, j)] = i == j ? cplx(u.real(), 0.0) : u;
        }
    return H;
}

cplx HermitianMatrix::operator()(std::size_t i, std::size_t j) const
{
    return i <= j ? upper_[index(i, j)] : std::conj(upper_[index(j, i)]);
}

void HermitianMatrix::set(std::size_t i, std::size_t j, cplx v)
{
    if (i >= n_ || j >= n_)
        throw InvalidArgument("index out of range");
    if (i == j && v.imag() != 0.0)
        throw InvalidArgument("diagonal entries must be real");
    if (i <= j)
        upper_[index(i, j)] = v;
    else
        upper_[index(j, i)] = std::conj(v);
}

HermitianMatrix HermitianMatrix::leading(std::size_t m) const
{
    if (m == 0 || m > n_)
        throw InvalidArgument("leading block size out of range");
    HermitianMatrix S(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j)
            S.upper_[S.index(i, j)] = upper_[index(i, j)];
    return S;
}

std::vector<cplx> HermitianMatrix::dense() const
{
    std::vector<cplx> A(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            A[i * n_ + j] = (*this)(i, j);
    return A;
}

double HermitianMatrix::trace() const
{
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
        t += upper_[index(i, i)].real();
    return t;
}

double HermitianMatrix::trace_sq() const
{
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j)
            t += (i == j ? 1.0 : 2.0) * std::norm(upper_[index(i, j)]);
    return t;
}

HermitianMatrix sample(const EnsembleSpec& spec, std::uint64_t seed)
{
    HermitianMatrix H(spec.n);
    Rng rng(seed);
    const std::size_t n = spec.n;
    if (spec.kind == Ensemble::GUE) {
        for (std::size_t i = 0; i < n; ++i)
            H.set(i, i, rng.normal());
        const double s = std::sqrt(0.5);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const double re = s * rng.normal();
                const double im = s * rng.normal();
                H.set(i, j, cplx(re, im));
            }
    } else {
        const double two_pi = 2.0 * std::numbers::pi;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const double t = two_pi * rng.uniform();
                H.set(i, j, std::polar(1.0, t));
            }
    }
    return H;
}

void hermitian_tridiagonalize(const HermitianMatrix& H, std::vector<double>& diag, std::vector<double>& offdiag)
{
    const std::size_t n = H.size();
    std::vector<cplx> A = H.dense();
    auto at = [&](std::size_t i, std::size_t j) -> cplx& { return A[i * n + j]; };
    std::vector<cplx> v(n), p(n), w(n);
    diag.assign(n, 0.0);
    offdiag.assign(n ? n - 1 : 0, 0.0);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // annihilate column k below the subdiagonal
        double tail = 0.0;
        for (std::size_t i = k + 2; i < n; ++i)
            tail += std::norm(at(i, k));
        const cplx x0 = at(k + 1, k);
        if (tail == 0.0) {
            offdiag[k] = std::abs(x0);
            continue;
        }
        const double xnorm = std::sqrt(tail + std::norm(x0));
        const cplx phase = std::abs(x0) == 0.0 ? cplx(1.0, 0.0) : x0 / std::abs(x0);
        const cplx alpha = -phase * xnorm;
        // v = x - alpha e1, tau = 2 / (v^H v)
        for (std::size_t i = 0; i < n; ++i)
            v[i] = 0.0;
        v[k + 1] = x0 - alpha;
        for (std::size_t i = k + 2; i < n; ++i)
            v[i] = at(i, k);
        double vnorm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i)
            vnorm2 += std::norm(v[i]);
        const double tau = 2.0 / vnorm2;
        // p = tau A v on the trailing block
        for (std::size_t i = k + 1; i < n; ++i) {
            cplx s = 0.0;
            for (std::size_t j = k + 1; j < n; ++j)
                s += at(i, j) * v[j];
            p[i] = tau * s;
        }
        cplx vhp = 0.0;
        for (std::size_t i = k + 1; i < n; ++i)
            vhp += std::conj(v[i]) * p[i];
        const cplx K = 0.5 * tau * vhp;
        for (std::size_t i = k + 1; i < n; ++i)
            w[i] = p[i] - K * v[i];
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                at(i, j) -= v[i] * std::conj(w[j]) + w[i] * std::conj(v[j]);
        at(k + 1, k) = alpha;
        at(k, k + 1) = std::conj(alpha);
        for (std::size_t i = k + 2; i < n; ++i) {
            at(i, k) = 0.0;
            at(k, i) = 0.0;
        }
        offdiag[k] = xnorm;
    }
    for (std::size_t i = 0; i < n; ++i)
        diag[i] = at(i, i).real();
}

std::vector<double> hermitian_eigenvalues(const HermitianMatrix& H)
{
    std::vector<double> d, e;
    hermitian_tridiagonalize(H, d, e);
    return symmetric_tridiagonal_eigenvalues(d, e);
}

std::vector<double> critical_points(std::span<const double> eigs)
{
    if (eigs.size() < 2)
        throw InvalidArgument("critical points need n >= 2");
    const InterlacingPair pair = markov_inverse(counting_measure(eigs));
    return std::vector<double>(pair.b().begin(), pair.b().end());
}

AtomicMeasure spectral_measure_dense(const HermitianMatrix& H)
{
    const std::size_t n = H.size();
    if (n < 2)
        throw InvalidArgument("dense spectral measure needs n >= 2");
    const InterlacingPair pair = cancel_common_roots(hermitian_eigenvalues(H), hermitian_eigenvalues(H.leading(n - 1)));
    if (pair.size() == 1)
        return AtomicMeasure::dirac(pair.a()[0]);
    return markov_forward(pair);
}

DiagramPair build_diagrams(std::vector<double> eigs_n, std::vector<double> eigs_sub)
{
    std::vector<double> crit = critical_points(eigs_n);
    InterlacingPair omega = cancel_common_roots(eigs_n, std::move(eigs_sub));
    InterlacingPair varpi = verify_interlacing(std::move(eigs_n), std::move(crit));
    return {Diagram(std::move(omega)), Diagram(std::move(varpi))};
}

DiagramPair build_diagrams(const HermitianMatrix& H)
{
    if (H.size() < 2)
        throw InvalidArgument("diagrams need n >= 2");
    return build_diagrams(hermitian_eigenvalues(H), hermitian_eigenvalues(H.leading(H.size() - 1)));
}

DiagramPair build_diagrams(const JacobiMatrix& J)
{
    if (J.size() < 2)
        throw InvalidArgument("diagrams need n >= 2");
    SpectralPair sp = spectral_pair(J);
    return build_diagrams(std::move(sp.eigs_n), std::move(sp.eigs_sub));
}

}  // namespace markovlab
