#include "markovlab/jacobi.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>
#include <string>

#include "markovlab/error.hpp"
#include "markovlab/hermitian.hpp"
#include "markovlab/rng.hpp"

namespace markovlab {

JacobiMatrix::JacobiMatrix(std::vector<double> diag, std::vector<double> offdiag)
    : diag_(std::move(diag)), offdiag_(std::move(offdiag))
{
    if (diag_.empty())
        throw InvalidArgument("Jacobi matrix needs n >= 1");
    if (offdiag_.size() + 1 != diag_.size())
        throw InvalidArgument("off-diagonal must have length n - 1");
    for (double v : diag_)
        if (!std::isfinite(v))
            throw InvalidArgument("non-finite diagonal entry");
    for (std::size_t i = 0; i < offdiag_.size(); ++i)
        if (!(offdiag_[i] > 0.0) || !std::isfinite(offdiag_[i]))
            throw InvalidArgument("off-diagonal entry " + std::to_string(i) + " is not positive");
}

JacobiMatrix JacobiMatrix::leading(std::size_t m) const
{
    if (m == 0 || m > size())
        throw InvalidArgument("leading block size out of range");
    return JacobiMatrix(std::vector<double>(diag_.begin(), diag_.begin() + static_cast<std::ptrdiff_t>(m)),
                        std::vector<double>(offdiag_.begin(), offdiag_.begin() + static_cast<std::ptrdiff_t>(m - 1)));
}

namespace {

struct Sturm {
    std::span<const double> d;
    std::vector<double> e2;
    double pivmin;

    Sturm(std::span<const double> diag, std::span<const double> off) : d(diag), e2(off.size())
    {
        double emax = 1.0;
        for (std::size_t i = 0; i < off.size(); ++i) {
            e2[i] = off[i] * off[i];
            emax = std::max(emax, e2[i]);
        }
        pivmin = DBL_MIN * emax;
    }

    std::size_t count(double x) const
    {
        std::size_t c = 0;
        double q = d[0] - x;
        if (std::abs(q) < pivmin)
            q = -pivmin;
        c += q < 0.0;
        for (std::size_t i = 1; i < d.size(); ++i) {
            q = d[i] - x - e2[i - 1] / q;
            if (std::abs(q) < pivmin)
                q = -pivmin;
            c += q < 0.0;
        }
        return c;
    }

    // Four independent recurrences interleaved.
    void count4(const double* x, std::size_t* out) const
    {
        double q[4];
        std::size_t c[4] = {0, 0, 0, 0};
        for (int k = 0; k < 4; ++k) {
            q[k] = d[0] - x[k];
            if (std::abs(q[k]) < pivmin)
                q[k] = -pivmin;
            c[k] += q[k] < 0.0;
        }
        for (std::size_t i = 1; i < d.size(); ++i) {
            const double di = d[i], ei = e2[i - 1];
            for (int k = 0; k < 4; ++k) {
                q[k] = di - x[k] - ei / q[k];
                if (std::abs(q[k]) < pivmin)
                    q[k] = -pivmin;
                c[k] += q[k] < 0.0;
            }
        }
        for (int k = 0; k < 4; ++k)
            out[k] = c[k];
    }

    void counts(std::span<const double> xs, std::size_t* out) const
    {
        std::size_t i = 0;
        for (; i + 4 <= xs.size(); i += 4)
            count4(xs.data() + i, out + i);
        for (; i < xs.size(); ++i)
            out[i] = count(xs[i]);
    }
};

void gershgorin(std::span<const double> d, std::span<const double> e, double& lo, double& hi)
{
    const std::size_t n = d.size();
    lo = HUGE_VAL;
    hi = -HUGE_VAL;
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0)
            r += std::abs(e[i - 1]);
        if (i + 1 < n)
            r += std::abs(e[i]);
        lo = std::min(lo, d[i] - r);
        hi = std::max(hi, d[i] + r);
    }
    const double pad = 2.0 * DBL_EPSILON * std::max(std::abs(lo), std::abs(hi)) * static_cast<double>(n) + DBL_MIN;
    lo -= pad;
    hi += pad;
}

double bisect_index(const Sturm& s, std::size_t k, double lo, double hi)
{
    for (int it = 0; it < 200; ++it) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi)
            break;
        if (hi - lo <= 2.0 * DBL_EPSILON * std::max(std::abs(lo), std::abs(hi)) + s.pivmin)
            break;
        if (s.count(mid) >= k + 1)
            hi = mid;
        else
            lo = mid;
    }
    return lo + 0.5 * (hi - lo);
}

// Implicit QL (eigenvalues only unless z is given). z, if present, holds one
// row of the eigenvector matrix and is rotated along.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, std::vector<double>* z)
{
    const std::size_t n = d.size();
    e.resize(n, 0.0);
    e[n - 1] = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        for (;;) {
            std::size_t m = l;
            for (; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= DBL_EPSILON * dd)
                    break;
            }
            if (m == l)
                break;
            if (++iter > 60)
                throw Error("QL iteration failed to converge");
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool deflated = false;
            for (std::size_t ii = m; ii-- > l;) {
                const double f = s * e[ii];
                const double b = c * e[ii];
                r = std::sqrt(f * f + g * g);
                e[ii + 1] = r;
                if (r == 0.0) {
                    d[ii + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[ii + 1] - p;
                r = (d[ii] - g) * s + 2.0 * c * b;
                p = s * r;
                d[ii + 1] = g + p;
                g = c * r - b;
                if (z) {
                    double* zr = z->data();
                    const double t = zr[ii + 1];
                    zr[ii + 1] = s * zr[ii] + c * t;
                    zr[ii] = c * zr[ii] - s * t;
                }
            }
            if (deflated)
                continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

}  // namespace

std::size_t sturm_count(std::span<const double> diag, std::span<const double> offdiag, double x)
{
    return Sturm(diag, offdiag).count(x);
}

std::vector<double> symmetric_tridiagonal_eigenvalues(std::span<const double> diag, std::span<const double> offdiag,
                                                      EigenMethod method)
{
    const std::size_t n = diag.size();
    if (n == 0)
        return {};
    if (n == 1)
        return {diag[0]};
    const Sturm sturm(diag, offdiag);
    double glo, ghi;
    gershgorin(diag, offdiag, glo, ghi);

    std::vector<double> eig(n);
    if (method == EigenMethod::Bisection) {
        for (std::size_t k = 0; k < n; ++k)
            eig[k] = bisect_index(sturm, k, glo, ghi);
        return eig;
    }

    std::vector<double> d(diag.begin(), diag.end());
    std::vector<double> e(offdiag.begin(), offdiag.end());
    ql_implicit(d, e, nullptr);
    std::sort(d.begin(), d.end());

    const double scale = std::max({d.back() - d.front(), std::abs(d.front()), std::abs(d.back())});
    const double delta = 1e-12 * scale + 4.0 * sturm.pivmin;
    std::vector<double> probes(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
        probes[2 * k] = d[k] - delta;
        probes[2 * k + 1] = d[k] + delta;
    }
    std::vector<std::size_t> cnt(2 * n);
    sturm.counts(probes, cnt.data());
    for (std::size_t k = 0; k < n; ++k) {
        if (cnt[2 * k] <= k && cnt[2 * k + 1] >= k + 1)
            eig[k] = d[k];
        else
            eig[k] = bisect_index(sturm, k, glo, ghi);
    }
    std::sort(eig.begin(), eig.end());
    return eig;
}

std::vector<double> tridiag_eigenvalues(const JacobiMatrix& J, EigenMethod method)
{
    return symmetric_tridiagonal_eigenvalues(J.diag(), J.offdiag(), method);
}

SpectralPair spectral_pair(const JacobiMatrix& J)
{
    SpectralPair sp;
    sp.eigs_n = tridiag_eigenvalues(J);
    if (J.size() > 1)
        sp.eigs_sub = tridiag_eigenvalues(J.leading(J.size() - 1));
    return sp;
}

AtomicMeasure spectral_measure(const JacobiMatrix& J)
{
    if (J.size() == 1)
        return AtomicMeasure::dirac(J.diag()[0]);
    SpectralPair sp = spectral_pair(J);
    return markov_forward(cancel_common_roots(std::move(sp.eigs_n), std::move(sp.eigs_sub), 1e-12));
}

AtomicMeasure spectral_measure_eigenvectors(const JacobiMatrix& J)
{
    const std::size_t n = J.size();
    std::vector<double> d(J.diag().begin(), J.diag().end());
    std::vector<double> e(J.offdiag().begin(), J.offdiag().end());
    std::vector<double> z(n, 0.0);
    z[n - 1] = 1.0;
    ql_implicit(d, e, &z);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return d[i] < d[j]; });
    std::vector<double> atoms(n), w(n);
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        atoms[k] = d[order[k]];
        w[k] = z[order[k]] * z[order[k]];
        total += w[k];
    }
    for (double& v : w)
        v /= total;
    return AtomicMeasure(std::move(atoms), std::move(w));
}

AtomicMeasure counting_measure(std::span<const double> eigs)
{
    return AtomicMeasure::uniform(std::vector<double>(eigs.begin(), eigs.end()));
}

JacobiMatrix de_sample(std::size_t n, double beta, std::uint64_t seed)
{
    if (n == 0)
        throw InvalidArgument("de_sample needs n >= 1");
    if (!(beta > 0.0))
        throw InvalidArgument("beta must be positive");
    Rng rng(seed);
    std::vector<double> a(n), b(n - 1);
    const double sd = std::sqrt(2.0 / beta);
    for (auto& v : a)
        v = sd * rng.normal();
    const double isb = 1.0 / std::sqrt(beta);
    for (std::size_t i = 0; i + 1 < n; ++i)
        b[i] = rng.chi(static_cast<double>(i + 1) * beta) * isb;
    return JacobiMatrix(std::move(a), std::move(b));
}

TraceFormulaResidual trace_formula_check(const JacobiMatrix& J)
{
    if (J.size() < 2)
        throw InvalidArgument("trace formula check needs n >= 2");
    SpectralPair sp = spectral_pair(J);
    const AtomicMeasure mu_markov = markov_forward(cancel_common_roots(sp.eigs_n, sp.eigs_sub, 1e-12));
    const AtomicMeasure mu_vec = spectral_measure_eigenvectors(J);
    const std::vector<double> crit = critical_points(sp.eigs_n);
    const AtomicMeasure rho_markov = markov_forward(verify_interlacing(sp.eigs_n, crit));
    const AtomicMeasure rho = counting_measure(sp.eigs_n);
    return {tv_distance(mu_markov, mu_vec), tv_distance(rho_markov, rho)};
}

}  // namespace markovlab
