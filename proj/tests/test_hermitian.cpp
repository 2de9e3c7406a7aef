#include "doctest.h"

#include <cmath>
#include <random>

#include "markovlab/chebyshev.hpp"
#include "markovlab/error.hpp"
#include "markovlab/hermitian.hpp"
#include "markovlab/rng.hpp"
#include "oracles.hpp"

using namespace markovlab;

namespace {

HermitianMatrix dense2(cplx a, cplx b, cplx c, cplx d)
{
    const std::vector<cplx> m{a, b, c, d};
    return HermitianMatrix::from_dense(2, m);
}

std::vector<double> grid_pm3() { return uniform_grid(-3.0, 3.0, 0.01); }

}  // namespace

TEST_CASE("sample: GUE second moments")
{
    const int M = 100000;
    double h11 = 0.0, h12 = 0.0, re12 = 0.0;
    for (int s = 0; s < M; ++s) {
        const HermitianMatrix H = sample({Ensemble::GUE, 3}, derive_seed(5, streams::gue, static_cast<std::uint64_t>(s)));
        h11 += std::norm(H(0, 0));
        h12 += std::norm(H(0, 1));
        re12 += H(0, 1).real() * H(0, 1).real();
        CHECK(H(1, 0) == std::conj(H(0, 1)));
    }
    CHECK(std::abs(h11 / M - 1.0) <= 0.02);
    CHECK(std::abs(h12 / M - 1.0) <= 0.02);
    CHECK(std::abs(re12 / M - 0.5) <= 0.015);
}

TEST_CASE("sample: unimodular entries")
{
    for (std::uint64_t s = 0; s < 200; ++s) {
        const HermitianMatrix H = sample({Ensemble::UnimodularUnif, 4}, s);
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(H(i, i) == cplx(0.0, 0.0));
            for (std::size_t j = i + 1; j < 4; ++j)
                CHECK(std::abs(H(i, j)) == doctest::Approx(1.0).epsilon(1e-15));
        }
    }
    const HermitianMatrix x = sample({Ensemble::GUE, 6}, 77), y = sample({Ensemble::GUE, 6}, 77);
    CHECK(x.dense() == y.dense());
}

TEST_CASE("HermitianMatrix validation")
{
    const std::vector<cplx> bad{1.0, cplx(0, 1), cplx(0, 1), 2.0};
    CHECK_THROWS_AS(HermitianMatrix::from_dense(2, bad), InvalidArgument);
    HermitianMatrix H(2);
    CHECK_THROWS_AS(H.set(0, 0, cplx(1.0, 0.5)), InvalidArgument);
    H.set(1, 0, cplx(0.0, 2.0));
    CHECK(H(0, 1) == cplx(0.0, -2.0));
}

TEST_CASE("hermitian_eigenvalues examples")
{
    auto e = hermitian_eigenvalues(dense2(1.0, 0.0, 0.0, 2.0));
    CHECK(e[0] == doctest::Approx(1.0));
    CHECK(e[1] == doctest::Approx(2.0));
    e = hermitian_eigenvalues(dense2(0.0, 1.0, 1.0, 0.0));
    CHECK(e[0] == doctest::Approx(-1.0));
    CHECK(e[1] == doctest::Approx(1.0));
    // characteristic polynomial x^2 - |i|^2
    e = hermitian_eigenvalues(dense2(0.0, cplx(0, 1), cplx(0, -1), 0.0));
    CHECK(e[0] == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(e[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("hermitian_eigenvalues against the real-embedding oracle")
{
    for (std::uint64_t s = 0; s < 12; ++s) {
        const std::size_t n = 2 + s * 3;
        const Ensemble kind = s % 2 ? Ensemble::UnimodularUnif : Ensemble::GUE;
        const HermitianMatrix H = sample({kind, n}, s + 100);
        const auto ev = hermitian_eigenvalues(H);
        const auto ref = oracle::hermitian_eigs_embedded(H.dense(), n);
        const double span = ref.back() - ref.front();
        for (std::size_t i = 0; i < n; ++i)
            CHECK(std::abs(ev[i] - ref[i]) <= 1e-11 * span);
        double s1 = 0.0, s2 = 0.0;
        for (double x : ev) {
            s1 += x;
            s2 += x * x;
        }
        CHECK(std::abs(s1 - H.trace()) <= 1e-9 * n);
        CHECK(std::abs(s2 - H.trace_sq()) <= 1e-9 * n * n);
    }
}

TEST_CASE("block diagonal input takes the reducible path")
{
    HermitianMatrix H(4);
    H.set(0, 0, 1.0);
    H.set(0, 1, cplx(0.0, 1.0));
    H.set(2, 2, 3.0);
    H.set(2, 3, cplx(1.0, 1.0));
    const auto ev = hermitian_eigenvalues(H);
    const auto ref = oracle::hermitian_eigs_embedded(H.dense(), 4);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(ev[i] == doctest::Approx(ref[i]).epsilon(1e-13));
}

TEST_CASE("critical_points examples")
{
    const std::vector<double> a{-1, 1};
    CHECK(std::abs(critical_points(a)[0]) < 1e-15);
    const std::vector<double> b{0, 1, 3};
    const auto c = critical_points(b);
    REQUIRE(c.size() == 2);
    CHECK(c[0] == doctest::Approx((4.0 - std::sqrt(7.0)) / 3.0).epsilon(1e-14));
    CHECK(c[1] == doctest::Approx((4.0 + std::sqrt(7.0)) / 3.0).epsilon(1e-14));
    for (double x : c)
        CHECK(std::abs(3 * x * x - 8 * x + 3) < 1e-13);
    const std::vector<double> d{2.5, 7.25};
    CHECK(critical_points(d)[0] == doctest::Approx(4.875).epsilon(1e-15));
    const std::vector<double> dup{0, 1, 1};
    CHECK_THROWS_AS(critical_points(dup), DegenerateSpectrum);
}

TEST_CASE("critical points strictly interlace and annihilate the log-derivative")
{
    std::mt19937_64 g(4);
    std::uniform_real_distribution<double> U(1e-3, 1.0);
    for (int t = 0; t < 100; ++t) {
        std::vector<double> x(2 + g() % 40);
        double v = -5.0;
        for (auto& e : x)
            e = (v += U(g));
        const auto c = critical_points(x);
        REQUIRE(c.size() == x.size() - 1);
        CHECK_NOTHROW(verify_interlacing(x, c));
        for (double y : c) {
            double f = 0.0, scale = 0.0;
            for (double e : x) {
                f += 1.0 / (y - e);
                scale += std::abs(1.0 / (y - e));
            }
            CHECK(std::abs(f) <= 1e-10 * scale);
        }
    }
}

TEST_CASE("spectral_measure_dense examples")
{
    const AtomicMeasure m = spectral_measure_dense(dense2(0.0, 1.0, 1.0, 0.0));
    CHECK(m.weight(0) == doctest::Approx(0.5));
    CHECK(m.moment(2) == doctest::Approx(1.0));
    // last basis vector is an eigenvector: all mass at 2
    const AtomicMeasure m12 = spectral_measure_dense(dense2(1.0, 0.0, 0.0, 2.0));
    REQUIRE(m12.size() == 1);
    CHECK(m12.atom(0) == 2.0);
    HermitianMatrix D(3);
    D.set(0, 0, 0.0);
    D.set(1, 1, 1.0);
    D.set(2, 2, 2.0);
    D.set(0, 1, 0.5);
    const AtomicMeasure md = spectral_measure_dense(D);
    CHECK(md.moment(1) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(md.moment(2) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("spectral_measure_dense moments equal (H^k)_nn")
{
    for (std::uint64_t s = 0; s < 10; ++s) {
        const std::size_t n = s < 5 ? 4 : 9;
        const HermitianMatrix H = sample({s % 3 ? Ensemble::GUE : Ensemble::UnimodularUnif, n}, 300 + s);
        const AtomicMeasure mu = spectral_measure_dense(H);
        const auto A = H.dense();
        auto P = A;
        for (int k = 1; k <= 6; ++k) {
            const cplx ref = P[n * n - 1];
            CHECK(std::abs(ref.imag()) < 1e-10);
            CHECK(std::abs(mu.moment(k) - ref.real()) <= 1e-9 * std::max(1.0, std::abs(ref.real())));
            P = oracle::matmul(P, A, n);
        }
    }
}

TEST_CASE("build_diagrams examples")
{
    const DiagramPair p = build_diagrams(dense2(0.0, 1.0, 1.0, 0.0));
    CHECK(p.omega.pair().b()[0] == doctest::Approx(0.0));
    CHECK(p.varpi.pair().b()[0] == doctest::Approx(0.0));
    CHECK(p.omega.pair().a()[0] == doctest::Approx(-1.0));
    const DiagramPair q = build_diagrams(dense2(0.0, 0.0, 0.0, 2.0));
    CHECK(q.varpi.pair().b()[0] == doctest::Approx(1.0));
    CHECK(q.varpi.pair().a()[1] == doctest::Approx(2.0));
    // common root 0 of P_1 and P_2 cancels from omega, leaving |x - 2|
    CHECK(q.omega(0.5) == doctest::Approx(1.5));
    CHECK(q.omega(3.0) == doctest::Approx(1.0));
}

TEST_CASE("Markov transforms of the diagrams reproduce the measures")
{
    const HermitianMatrix H = sample({Ensemble::GUE, 50}, 2024);
    const DiagramPair p = build_diagrams(H);
    CHECK(tv_distance(markov_forward(p.omega.pair()), spectral_measure_dense(H)) <= 1e-8);
    CHECK(tv_distance(markov_forward(p.varpi.pair()), counting_measure(hermitian_eigenvalues(H))) <= 1e-8);
}

TEST_CASE("dense GUE and the beta = 2 tridiagonal model share eigenvalue moments")
{
    const std::size_t n = 8;
    const int M = 200000;
    const int K = 6;
    std::vector<double> sd(K + 1, 0.0), sd2(K + 1, 0.0), st(K + 1, 0.0), st2(K + 1, 0.0);
    for (int s = 0; s < M; ++s) {
        const auto ed = hermitian_eigenvalues(sample({Ensemble::GUE, n}, derive_seed(9, streams::gue, s)));
        const auto et = tridiag_eigenvalues(de_sample(n, 2.0, derive_seed(9, streams::de, s)));
        for (int k = 1; k <= K; ++k) {
            double md = 0.0, mt = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                md += std::pow(ed[i], k);
                mt += std::pow(et[i], k);
            }
            md /= n;
            mt /= n;
            sd[k] += md;
            sd2[k] += md * md;
            st[k] += mt;
            st2[k] += mt * mt;
        }
    }
    for (int k = 1; k <= K; ++k) {
        const double a = sd[k] / M, b = st[k] / M;
        const double va = sd2[k] / M - a * a, vb = st2[k] / M - b * b;
        const double se = std::sqrt((va + vb) / M);
        CAPTURE(k);
        CHECK(std::abs(a - b) <= 3.0 * se);
    }
}

TEST_CASE("Wigner law for counting and spectral measures")
{
    const std::size_t n = 400;
    const double L = std::sqrt(static_cast<double>(n));
    const int draws = 50;
    std::vector<double> uc(7, 0.0), us(7, 0.0);
    for (int s = 0; s < draws; ++s) {
        const HermitianMatrix H = sample({Ensemble::GUE, n}, derive_seed(11, streams::gue, s));
        const SpectralPair sp{hermitian_eigenvalues(H), hermitian_eigenvalues(H.leading(n - 1))};
        const AtomicMeasure rho = rescale_measure(counting_measure(sp.eigs_n), L);
        const AtomicMeasure mu = rescale_measure(markov_forward(verify_interlacing(sp.eigs_n, sp.eigs_sub)), L);
        const auto a = cheb_moments(rho, ChebKind::SecondKind, 6).values;
        const auto b = cheb_moments(mu, ChebKind::SecondKind, 6).values;
        for (int k = 1; k <= 6; ++k) {
            uc[k] += a[k] / draws;
            us[k] += b[k] / draws;
        }
    }
    for (int k = 1; k <= 6; ++k) {
        CAPTURE(k);
        CHECK(std::abs(uc[k]) <= 0.1);
        CHECK(std::abs(us[k]) <= 0.1);
    }
}

TEST_CASE("rescaled diagrams approach the LSVK shape")
{
    const std::size_t n = 400;
    const HermitianMatrix H = sample({Ensemble::GUE, n}, 31337);
    const DiagramPair p = build_diagrams(H);
    const auto grid = grid_pm3();
    const double L = std::sqrt(static_cast<double>(n));
    CHECK(diagram_sup_distance(rescale_diagram(p.omega, L), lsvk_shape, grid) <= 0.2);
    CHECK(diagram_sup_distance(rescale_diagram(p.varpi, L), lsvk_shape, grid) <= 0.2);
}
