#include "markovlab/chebyshev.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "markovlab/error.hpp"

namespace markovlab {

double cheb_eval(ChebKind kind, int k, double x)
{
    if (k < 0)
        throw InvalidArgument("Chebyshev index must be nonnegative");
    double p0 = 1.0;
    if (k == 0)
        return p0;
    double p1 = kind == ChebKind::FirstKind ? x : 2.0 * x;
    for (int j = 1; j < k; ++j) {
        const double p2 = 2.0 * x * p1 - p0;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

void cheb_eval_all(ChebKind kind, int k_max, double x, double* out)
{
    out[0] = 1.0;
    if (k_max == 0)
        return;
    out[1] = kind == ChebKind::FirstKind ? x : 2.0 * x;
    for (int j = 2; j <= k_max; ++j)
        out[j] = 2.0 * x * out[j - 1] - out[j - 2];
}

double lsvk_shape(double x)
{
    if (std::abs(x) >= 2.0)
        return std::abs(x);
    return (2.0 / std::numbers::pi) * (x * std::asin(x / 2.0) + std::sqrt(4.0 - x * x));
}

double reference_density(ReferenceMeasure m, double x)
{
    if (std::abs(x) >= 2.0)
        return 0.0;
    if (m == ReferenceMeasure::Semicircle)
        return std::sqrt((2.0 - x) * (2.0 + x)) / (2.0 * std::numbers::pi);
    return 1.0 / (std::numbers::pi * std::sqrt((2.0 - x) * (2.0 + x)));
}

AtomicMeasure gauss_nodes(ReferenceMeasure m, std::size_t N)
{
    if (N == 0)
        throw InvalidArgument("quadrature needs at least one node");
    const double pi = std::numbers::pi;
    const double dn = static_cast<double>(N);
    std::vector<double> x(N), w(N);
    // 2cos(theta) written as 2sin(pi/2 - theta): exact zero and exact symmetry
    for (std::size_t i = 0; i < N; ++i) {
        const double j = static_cast<double>(N - i);  // ascending nodes
        if (m == ReferenceMeasure::Semicircle) {
            x[i] = 2.0 * std::sin((dn + 1.0 - 2.0 * j) * pi / (2.0 * (dn + 1.0)));
            const double s = std::sin(j * pi / (dn + 1.0));
            w[i] = 2.0 / (dn + 1.0) * s * s;
        } else {
            x[i] = 2.0 * std::sin((dn - 2.0 * j + 1.0) * pi / (2.0 * dn));
            w[i] = 1.0 / dn;
        }
    }
    double total = 0.0;
    for (double v : w)
        total += v;
    for (double& v : w)
        v /= total;
    return AtomicMeasure(std::move(x), std::move(w));
}

void validate_quadrature(std::size_t N)
{
    if (N < 4)
        throw InvalidArgument("quadrature validation needs N >= 4");
    const double sc[7] = {1, 0, 1, 0, 2, 0, 5};
    const double ar[7] = {1, 0, 2, 0, 6, 0, 20};
    for (auto m : {ReferenceMeasure::Semicircle, ReferenceMeasure::Arcsine}) {
        const AtomicMeasure q = gauss_nodes(m, N);
        const double* ref = m == ReferenceMeasure::Semicircle ? sc : ar;
        for (int k = 0; k <= 6; ++k) {
            double mk = 0.0;
            for (std::size_t j = 0; j < q.size(); ++j) {
                double p = 1.0;
                for (int r = 0; r < k; ++r)
                    p *= q.atom(j);
                mk += q.weight(j) * p;
            }
            if (std::abs(mk - ref[k]) > 1e-12)
                throw Error("quadrature rule failed moment " + std::to_string(k));
        }
    }
}

ChebCoeffs cheb_moments(const AtomicMeasure& mu, ChebKind kind, int k_max)
{
    if (k_max < 0)
        throw InvalidArgument("k_max must be nonnegative");
    ChebCoeffs out{kind, std::vector<double>(static_cast<std::size_t>(k_max) + 1, 0.0)};
    std::vector<double> buf(static_cast<std::size_t>(k_max) + 1);
    for (std::size_t j = 0; j < mu.size(); ++j) {
        cheb_eval_all(kind, k_max, mu.atom(j) / 2.0, buf.data());
        for (int k = 0; k <= k_max; ++k)
            out.values[k] += mu.weight(j) * buf[k];
    }
    return out;
}

std::complex<double> stieltjes(const AtomicMeasure& mu, std::complex<double> z)
{
    std::complex<double> s = 0.0;
    for (std::size_t j = 0; j < mu.size(); ++j) {
        const std::complex<double> d = mu.atom(j) - z;
        if (d == 0.0)
            throw InvalidArgument("Stieltjes transform evaluated at an atom");
        s += mu.weight(j) / d;
    }
    return s;
}

std::complex<double> sqrt_z2m4(std::complex<double> z)
{
    return std::sqrt(z - 2.0) * std::sqrt(z + 2.0);
}

std::complex<double> semicircle_stieltjes(std::complex<double> z)
{
    return 0.5 * (-z + sqrt_z2m4(z));
}

std::complex<double> arcsine_cheb_stieltjes(int k, std::complex<double> z)
{
    const std::complex<double> s = sqrt_z2m4(z);
    const std::complex<double> q = 0.5 * (z - s);
    return -std::pow(q, k) / s;
}

double semicircle_t_moment(int k)
{
    if (k == 0)
        return 1.0;
    if (k == 2)
        return -0.5;
    return 0.0;
}

}  // namespace markovlab
