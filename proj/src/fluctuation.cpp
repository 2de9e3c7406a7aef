#include "markovlab/fluctuation.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "markovlab/chebyshev.hpp"
#include "markovlab/error.hpp"
#include "markovlab/hermitian.hpp"
#include "markovlab/jacobi.hpp"
#include "markovlab/partition.hpp"
#include "markovlab/rng.hpp"

namespace markovlab {

DiagramFluct linearized_markov_push(const FluctCoeffs& c)
{
    DiagramFluct d{0.0, {}};
    if (!c.c.empty())
        d.arcsin_coeff = -4.0 * c.c[0] / std::numbers::pi;
    for (std::size_t i = 1; i < c.c.size(); ++i) {
        const double k = static_cast<double>(i + 1);
        d.u.push_back(4.0 * c.c[i] / (k - 1.0));
    }
    return d;
}

std::complex<double> fluct_stieltjes(const FluctCoeffs& c, std::complex<double> z)
{
    std::complex<double> r = 0.0;
    for (std::size_t i = 0; i < c.c.size(); ++i)
        r += c.c[i] * 2.0 * arcsine_cheb_stieltjes(static_cast<int>(i + 1), z);
    return r;
}

namespace {

std::complex<double> complex_log1p(std::complex<double> d)
{
    const double re = d.real(), im = d.imag();
    return {0.5 * std::log1p(2.0 * re + re * re + im * im), std::atan2(im, 1.0 + re)};
}

}  // namespace

double fluct_lemma_residual(const FluctCoeffs& direction, double epsilon, std::size_t N,
                            std::span<const std::complex<double>> z_grid, int degree)
{
    if (!(epsilon > 0.0))
        throw InvalidArgument("epsilon must be positive");
    if (degree < static_cast<int>(direction.c.size()))
        throw InvalidArgument("expansion degree must be at least k_max");
    validate_quadrature(N);
    const AtomicMeasure mu0 = gauss_nodes(ReferenceMeasure::Semicircle, N);
    std::vector<double> w(mu0.size());
    std::vector<double> u(static_cast<std::size_t>(degree) + 1);
    double total = 0.0;
    for (std::size_t j = 0; j < mu0.size(); ++j) {
        cheb_eval_all(ChebKind::SecondKind, degree, mu0.atom(j) / 2.0, u.data());
        double h = 0.0;
        for (std::size_t i = 0; i < direction.c.size(); ++i)
            for (std::size_t m = i + 1; m <= static_cast<std::size_t>(degree); m += 2)
                h += direction.c[i] * 2.0 * u[m];
        w[j] = mu0.weight(j) * (1.0 + epsilon * h);
        if (!(w[j] > 0.0))
            throw InvalidArgument("perturbed weight at node " + std::to_string(j) + " is not positive");
        total += w[j];
    }
    for (double& v : w)
        v /= total;
    const AtomicMeasure mue(std::vector<double>(mu0.atoms().begin(), mu0.atoms().end()), std::move(w));
    const InterlacingPair p0 = markov_inverse(mu0);
    const InterlacingPair pe = markov_inverse(mue);

    double res = 0.0;
    for (const auto z : z_grid) {
        std::complex<double> s = 0.0;
        for (std::size_t i = 0; i < p0.b().size(); ++i) {
            const std::complex<double> base = p0.b()[i] - z;
            s += complex_log1p((pe.b()[i] - p0.b()[i]) / base);
        }
        const std::complex<double> lhs = 2.0 * s / epsilon;
        // the applied perturbation stops at U_degree; remove the tail
        // sum_{m > degree} c_k 2 int U_m(x/2) (x-z)^{-1} drho_sc = -2 c_k q^{m+1}
        const std::complex<double> q = (z - sqrt_z2m4(z)) / 2.0;
        std::complex<double> tail = 0.0;
        for (std::size_t i = 0; i < direction.c.size(); ++i) {
            const int k = static_cast<int>(i + 1);
            const int m0 = degree + 1 + ((degree + 1 - k) % 2 != 0);
            tail += direction.c[i] * -2.0 * std::pow(q, m0 + 1) / (1.0 - q * q);
        }
        const std::complex<double> target = 2.0 * (fluct_stieltjes(direction, z) - tail) / semicircle_stieltjes(z);
        res = std::max(res, std::abs(lhs - target));
    }
    return res;
}

std::string to_string(CltEnsemble e)
{
    switch (e) {
    case CltEnsemble::GueTrace:
        return "gue-trace";
    case CltEnsemble::GueSpectral:
        return "gue-spectral";
    case CltEnsemble::UnimodularTrace:
        return "unimodular";
    case CltEnsemble::PlancherelTransition:
        return "plancherel";
    }
    return "unknown";
}

CltEnsemble parse_clt_ensemble(const std::string& s)
{
    if (s == "gue-trace" || s == "gue")
        return CltEnsemble::GueTrace;
    if (s == "gue-spectral")
        return CltEnsemble::GueSpectral;
    if (s == "unimodular" || s == "unif" || s == "unimodular-trace")
        return CltEnsemble::UnimodularTrace;
    if (s == "plancherel" || s == "plancherel-transition")
        return CltEnsemble::PlancherelTransition;
    throw InvalidArgument("unknown ensemble '" + s + "'");
}

namespace {

std::uint64_t stream_of(CltEnsemble e)
{
    switch (e) {
    case CltEnsemble::GueTrace:
    case CltEnsemble::GueSpectral:
        return streams::de;
    case CltEnsemble::UnimodularTrace:
        return streams::unimodular;
    case CltEnsemble::PlancherelTransition:
        return streams::plancherel;
    }
    return 0;
}

// X_k = sum_j T_k(lambda_j / (2 sqrt n)) - n t_k
std::vector<double> trace_statistics(std::span<const double> eigs, std::size_t n, int k_max)
{
    const double scale = 1.0 / (2.0 * std::sqrt(static_cast<double>(n)));
    std::vector<double> out(static_cast<std::size_t>(k_max) + 1, 0.0), buf(out.size());
    for (double l : eigs) {
        cheb_eval_all(ChebKind::FirstKind, k_max, l * scale, buf.data());
        for (std::size_t k = 0; k < out.size(); ++k)
            out[k] += buf[k];
    }
    for (int k = 0; k <= k_max; ++k)
        out[static_cast<std::size_t>(k)] -= static_cast<double>(n) * semicircle_t_moment(k);
    return out;
}

// sqrt(n) (sum_j p_j P_k(a_j / (2 sqrt n)) - centering_k)
std::vector<double> measure_statistics(const AtomicMeasure& mu, std::size_t n, int k_max, ChebKind kind)
{
    const double sn = std::sqrt(static_cast<double>(n));
    const AtomicMeasure r = rescale_measure(mu, sn);
    const ChebCoeffs m = cheb_moments(r, kind, k_max);
    std::vector<double> out(m.values.size());
    for (int k = 0; k <= k_max; ++k) {
        const double centre = kind == ChebKind::FirstKind ? semicircle_t_moment(k) : (k == 0 ? 1.0 : 0.0);
        out[static_cast<std::size_t>(k)] = sn * (m.values[static_cast<std::size_t>(k)] - centre);
    }
    return out;
}

template <class F>
void parallel_for(std::size_t M, unsigned threads, F&& body)
{
    threads = std::max(1u, threads);
    if (threads == 1 || M < 2) {
        for (std::size_t i = 0; i < M; ++i)
            body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < M; i += threads)
                    body(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    for (auto& th : pool)
        th.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

}  // namespace

std::vector<double> clt_sample(CltEnsemble ensemble, std::size_t n, int k_max, std::uint64_t sample_seed)
{
    switch (ensemble) {
    case CltEnsemble::GueTrace: {
        const JacobiMatrix J = de_sample(n, 2.0, sample_seed);
        return trace_statistics(tridiag_eigenvalues(J), n, k_max);
    }
    case CltEnsemble::GueSpectral: {
        const JacobiMatrix J = de_sample(n, 2.0, sample_seed);
        return measure_statistics(spectral_measure(J), n, k_max, ChebKind::SecondKind);
    }
    case CltEnsemble::UnimodularTrace: {
        const HermitianMatrix H = sample({Ensemble::UnimodularUnif, n}, sample_seed);
        return trace_statistics(hermitian_eigenvalues(H), n, k_max);
    }
    case CltEnsemble::PlancherelTransition: {
        const Partition lam = plancherel_grow(static_cast<int>(n), sample_seed);
        return measure_statistics(transition_measure(lam), n, k_max, ChebKind::FirstKind);
    }
    }
    throw InvalidArgument("unknown ensemble");
}

std::vector<CLTStat> clt_run(CltEnsemble ensemble, std::size_t n, std::size_t M, int k_max, std::uint64_t seed,
                             unsigned threads)
{
    if (n < 2 || M < 1 || k_max < 0)
        throw InvalidArgument("clt_run needs n >= 2, M >= 1, k_max >= 0");
    const double work = static_cast<double>(M) *
                        (ensemble == CltEnsemble::UnimodularTrace ? std::pow(static_cast<double>(n), 3.0) / 50.0
                                                                  : static_cast<double>(n) * static_cast<double>(n));
    if (work > 5e12)
        throw Infeasible("requested CLT run exceeds the work bound 5e12 (n^2 M, or n^3 M / 50 for dense draws)");
    if (ensemble == CltEnsemble::UnimodularTrace && n < 3)
        throw InvalidArgument("unimodular ensemble needs n >= 3");
    std::vector<std::vector<double>> per_sample(M);
    const std::uint64_t stream = stream_of(ensemble);
    parallel_for(M, threads, [&](std::size_t i) {
        per_sample[i] = clt_sample(ensemble, n, k_max, derive_seed(seed, stream, i));
    });
    const CltScale scale = ensemble == CltEnsemble::GueTrace || ensemble == CltEnsemble::UnimodularTrace
                               ? CltScale::N
                               : CltScale::SqrtN;
    std::vector<CLTStat> out;
    for (int k = 0; k <= k_max; ++k) {
        CLTStat s{ensemble, k, scale, n, std::vector<double>(M)};
        for (std::size_t i = 0; i < M; ++i)
            s.samples[i] = per_sample[i][static_cast<std::size_t>(k)];
        out.push_back(std::move(s));
    }
    return out;
}

double pairwise_sum(std::span<const double> x)
{
    if (x.size() <= 8) {
        double s = 0.0;
        for (double v : x)
            s += v;
        return s;
    }
    const std::size_t h = x.size() / 2;
    return pairwise_sum(x.subspan(0, h)) + pairwise_sum(x.subspan(h));
}

CltSummary clt_summary(const std::vector<CLTStat>& stats)
{
    if (stats.empty())
        throw InvalidArgument("no statistics to summarize");
    const std::size_t M = stats.front().samples.size();
    if (M < 100)
        throw InvalidArgument("summary needs M >= 100 samples");
    for (const auto& s : stats)
        if (s.samples.size() != M)
            throw InvalidArgument("statistics have different sample counts");
    const double dM = static_cast<double>(M);
    CltSummary out;
    std::vector<std::vector<double>> centred;
    std::vector<double> tmp(M);
    for (const auto& s : stats) {
        const double mean = pairwise_sum(s.samples) / dM;
        std::vector<double> d(M);
        for (std::size_t i = 0; i < M; ++i)
            d[i] = s.samples[i] - mean;
        for (std::size_t i = 0; i < M; ++i)
            tmp[i] = d[i] * d[i];
        const double ss = pairwise_sum(tmp);
        const double var = ss / (dM - 1.0);
        // leave-one-out variances: (ss - d_i^2 M/(M-1)) / (M-2)
        for (std::size_t i = 0; i < M; ++i)
            tmp[i] = (ss - d[i] * d[i] * dM / (dM - 1.0)) / (dM - 2.0);
        const double jbar = pairwise_sum(tmp) / dM;
        for (std::size_t i = 0; i < M; ++i)
            tmp[i] = (tmp[i] - jbar) * (tmp[i] - jbar);
        const double var_se = std::sqrt((dM - 1.0) / dM * pairwise_sum(tmp));
        double p = 1.0;
        const double m2 = ss / dM;
        if (m2 > 1e-300 * (1.0 + mean * mean)) {
            for (std::size_t i = 0; i < M; ++i)
                tmp[i] = d[i] * d[i] * d[i];
            const double m3 = pairwise_sum(tmp) / dM;
            for (std::size_t i = 0; i < M; ++i)
                tmp[i] = d[i] * d[i] * d[i] * d[i];
            const double m4 = pairwise_sum(tmp) / dM;
            const double skew = m3 / std::pow(m2, 1.5);
            const double kurt = m4 / (m2 * m2) - 3.0;
            const double jb = dM / 6.0 * (skew * skew + kurt * kurt / 4.0);
            p = std::exp(-jb / 2.0);
        }
        out.rows.push_back({s.k, mean, std::sqrt(var / dM), var, var_se, var - 1.96 * var_se, var + 1.96 * var_se, p});
        centred.push_back(std::move(d));
    }
    const std::size_t K = stats.size();
    out.covariance.assign(K, std::vector<double>(K, 0.0));
    out.covariance_se.assign(K, std::vector<double>(K, 0.0));
    for (std::size_t a = 0; a < K; ++a)
        for (std::size_t b = 0; b < K; ++b) {
            for (std::size_t i = 0; i < M; ++i)
                tmp[i] = centred[a][i] * centred[b][i];
            out.covariance[a][b] = pairwise_sum(tmp) / (dM - 1.0);
            out.covariance_se[a][b] = std::sqrt(out.rows[a].variance * out.rows[b].variance / dM);
        }
    return out;
}

CltTarget clt_target(CltEnsemble e, int k)
{
    using K = CltTarget::Kind;
    const double dk = static_cast<double>(k);
    switch (e) {
    case CltEnsemble::GueTrace:
        return k >= 1 ? CltTarget{K::Variance, dk / 4.0} : CltTarget{K::Constant, 0.0};
    case CltEnsemble::GueSpectral:
        return k >= 1 ? CltTarget{K::Variance, 1.0} : CltTarget{K::Constant, 0.0};
    case CltEnsemble::UnimodularTrace:
        if (k == 0 || k == 1)
            return {K::Constant, 0.0};
        if (k == 2)
            return {K::Constant, -0.5};
        return {K::Variance, dk / 4.0};
    case CltEnsemble::PlancherelTransition:
        if (k == 0 || k == 1)
            return {K::Constant, 0.0};
        if (k == 2)
            return {K::VarianceAtMost, 0.05};
        return {K::Variance, (dk - 1.0) / 4.0};
    }
    return {};
}

bool clt_row_pass(const CltTarget& t, const CltRow& row, const CLTStat& stat)
{
    switch (t.kind) {
    case CltTarget::Kind::None:
        return true;
    case CltTarget::Kind::Variance:
        return row.variance >= 0.85 * t.value && row.variance <= 1.15 * t.value;
    case CltTarget::Kind::VarianceAtMost:
        return row.variance <= t.value;
    case CltTarget::Kind::Constant:
        for (double v : stat.samples)
            if (std::abs(v - t.value) > 1e-9)
                return false;
        return true;
    }
    return false;
}

namespace {

// Monomial coefficients of U_j(x/2).
std::vector<double> u_half_poly(int j)
{
    std::vector<double> p0{1.0}, p1{0.0, 1.0};
    if (j == 0)
        return p0;
    for (int i = 1; i < j; ++i) {
        std::vector<double> p2(p1.size() + 1, 0.0);
        for (std::size_t r = 0; r < p1.size(); ++r)
            p2[r + 1] += p1[r];
        for (std::size_t r = 0; r < p0.size(); ++r)
            p2[r] -= p0[r];
        p0 = std::move(p1);
        p1 = std::move(p2);
    }
    return p1;
}

double poly_eval(const std::vector<double>& p, double x)
{
    double s = 0.0;
    for (std::size_t i = p.size(); i-- > 0;)
        s = s * x + p[i];
    return s;
}

struct AbsKernel {
    std::vector<double> g1;  // antiderivative of P
    std::vector<double> g2;  // antiderivative of xP

    explicit AbsKernel(const std::vector<double>& P)
    {
        g1.assign(P.size() + 1, 0.0);
        g2.assign(P.size() + 2, 0.0);
        for (std::size_t i = 0; i < P.size(); ++i) {
            g1[i + 1] = P[i] / static_cast<double>(i + 1);
            g2[i + 2] = P[i] / static_cast<double>(i + 2);
        }
    }

    // int_lo^hi (x - c) P(x) dx
    double linear(double c, double lo, double hi) const
    {
        return (poly_eval(g2, hi) - c * poly_eval(g1, hi)) - (poly_eval(g2, lo) - c * poly_eval(g1, lo));
    }

    // int_{-2}^{2} |x - c| P(x) dx
    double abs_integral(double c) const
    {
        if (c <= -2.0)
            return linear(c, -2.0, 2.0);
        if (c >= 2.0)
            return -linear(c, -2.0, 2.0);
        return -linear(c, -2.0, c) + linear(c, c, 2.0);
    }
};

double lsvk_u_integral(int j)
{
    const auto P = u_half_poly(j);
    auto f = [&](double t) {
        const double x = 2.0 * std::cos(t);
        return lsvk_shape(x) * poly_eval(P, x) * 2.0 * std::sin(t);
    };
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, std::numbers::pi, 15, 1e-15);
}

}  // namespace

std::vector<double> diagram_u_coefficients(const Diagram& d, int j_max)
{
    std::vector<double> out;
    for (int j = 0; j <= j_max; ++j) {
        const AbsKernel K(u_half_poly(j));
        double s = 0.0;
        for (double a : d.pair().a())
            s += K.abs_integral(a);
        for (double b : d.pair().b())
            s -= K.abs_integral(b);
        out.push_back(s - lsvk_u_integral(j));
    }
    return out;
}

std::vector<double> predicted_u_coefficients(const FluctCoeffs& c, int j_max)
{
    const DiagramFluct f = linearized_markov_push(c);
    std::vector<double> out;
    for (int j = 0; j <= j_max; ++j) {
        const double arc = j % 2 == 1 ? 2.0 * std::numbers::pi / (j + 1.0) : 0.0;
        const double u = static_cast<std::size_t>(j) < f.u.size() ? f.u[static_cast<std::size_t>(j)] : 0.0;
        out.push_back(f.arcsin_coeff * arc + u);
    }
    return out;
}

TransportResult transport_cross_check(TransportKind kind, std::size_t n, std::size_t M, int k_max,
                                      std::uint64_t seed, unsigned threads)
{
    if (k_max < 2 || n < 3 || M < 1)
        throw InvalidArgument("transport check needs k_max >= 2, n >= 3, M >= 1");
    const int j_max = k_max - 2;
    const double sn = std::sqrt(static_cast<double>(n));
    std::vector<std::vector<double>> dir(M), pred(M);
    parallel_for(M, threads, [&](std::size_t i) {
        const JacobiMatrix J = de_sample(n, 2.0, derive_seed(seed, streams::de, i));
        SpectralPair sp = spectral_pair(J);
        FluctCoeffs c;
        std::vector<double> d;
        if (kind == TransportKind::Spectral) {
            const InterlacingPair pair = cancel_common_roots(sp.eigs_n, sp.eigs_sub, 1e-12);
            const auto stat = measure_statistics(markov_forward(pair), n, k_max, ChebKind::FirstKind);
            c.c.assign(stat.begin() + 1, stat.end());
            d = diagram_u_coefficients(rescale_diagram(Diagram(pair), sn), j_max);
            for (double& v : d)
                v *= sn;
        } else {
            const auto stat = trace_statistics(sp.eigs_n, n, k_max);
            c.c.assign(stat.begin() + 1, stat.end());
            const InterlacingPair pair = verify_interlacing(sp.eigs_n, critical_points(sp.eigs_n));
            d = diagram_u_coefficients(rescale_diagram(Diagram(pair), sn), j_max);
            for (double& v : d)
                v *= static_cast<double>(n);
        }
        dir[i] = std::move(d);
        pred[i] = predicted_u_coefficients(c, j_max);
    });
    TransportResult r{0.0, {}, M, j_max};
    double num = 0.0, den = 0.0;
    for (int j = 0; j <= j_max; ++j) {
        double nj = 0.0, dj = 0.0;
        for (std::size_t i = 0; i < M; ++i) {
            const double e = dir[i][static_cast<std::size_t>(j)] - pred[i][static_cast<std::size_t>(j)];
            nj += e * e;
            dj += pred[i][static_cast<std::size_t>(j)] * pred[i][static_cast<std::size_t>(j)];
        }
        num += nj;
        den += dj;
        r.rms_relative_per_j.push_back(dj > 0.0 ? std::sqrt(nj / dj) : std::sqrt(nj));
    }
    r.rms_relative = den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
    return r;
}

}  // namespace markovlab
