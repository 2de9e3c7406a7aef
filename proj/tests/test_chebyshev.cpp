#include "doctest.h"

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "markovlab/chebyshev.hpp"
#include "markovlab/error.hpp"

using namespace markovlab;
using std::numbers::pi;

namespace {

// integral of f against a reference density on [-2, 2]
template <class F>
double oracle_integral(ReferenceMeasure m, F f)
{
    boost::math::quadrature::tanh_sinh<double> q;
    if (m == ReferenceMeasure::Semicircle)
        return q.integrate([&](double x) { return f(x) * std::sqrt(4.0 - x * x) / (2.0 * pi); }, -2.0, 2.0);
    // arcsine: substitute x = 2cos t to remove the endpoint singularity
    return q.integrate([&](double t) { return f(2.0 * std::cos(t)) / pi; }, 0.0, pi);
}

double trig_t(int k, double x) { return std::cos(k * std::acos(x)); }
double trig_u(int k, double x)
{
    const double t = std::acos(x);
    return std::sin((k + 1) * t) / std::sin(t);
}

}  // namespace

TEST_CASE("cheb_eval worked values")
{
    CHECK(cheb_eval(ChebKind::FirstKind, 2, 1.0) == 1.0);
    for (double x : {2.0, -1.0, 0.5, 3.0})
        CHECK(cheb_eval(ChebKind::FirstKind, 2, x / 2) == doctest::Approx(x * x / 2 - 1));
    CHECK(cheb_eval(ChebKind::SecondKind, 0, 0.37) == 1.0);
    CHECK(cheb_eval(ChebKind::FirstKind, 3, 0.5) == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("cheb_eval agrees with the trigonometric form")
{
    for (int k = 0; k <= 12; ++k)
        for (double x = -0.95; x < 1.0; x += 0.1) {
            CHECK(cheb_eval(ChebKind::FirstKind, k, x) == doctest::Approx(trig_t(k, x)).epsilon(1e-12));
            CHECK(cheb_eval(ChebKind::SecondKind, k, x) == doctest::Approx(trig_u(k, x)).epsilon(1e-12));
        }
}

TEST_CASE("cheb_eval is exact on integers")
{
    // T_k(2) and U_k(2) are integers: T: 1,2,7,26,97; U: 1,4,15,56,209
    const double t[] = {1, 2, 7, 26, 97};
    const double u[] = {1, 4, 15, 56, 209};
    for (int k = 0; k < 5; ++k) {
        CHECK(cheb_eval(ChebKind::FirstKind, k, 2.0) == t[k]);
        CHECK(cheb_eval(ChebKind::SecondKind, k, 2.0) == u[k]);
    }
    CHECK_THROWS_AS(cheb_eval(ChebKind::FirstKind, -1, 0.0), InvalidArgument);
}

TEST_CASE("lsvk_shape values and diagram properties")
{
    CHECK(lsvk_shape(0.0) == doctest::Approx(4.0 / pi).epsilon(1e-15));
    CHECK(lsvk_shape(2.0) == 2.0);
    CHECK(lsvk_shape(3.0) == 3.0);
    CHECK(lsvk_shape(-3.5) == 3.5);
    CHECK(lsvk_shape(2.0 - 1e-12) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(lsvk_shape(-2.0 + 1e-12) == doctest::Approx(2.0).epsilon(1e-9));
    double prev = lsvk_shape(-4.0);
    for (double x = -4.0 + 0.001; x <= 4.0; x += 0.001) {
        const double v = lsvk_shape(x);
        CHECK(std::abs(v - prev) <= 0.001 * (1.0 + 1e-9));
        CHECK(v >= std::abs(x) - 1e-15);
        prev = v;
    }
}

TEST_CASE("reference densities integrate to one")
{
    CHECK(oracle_integral(ReferenceMeasure::Semicircle, [](double) { return 1.0; }) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(oracle_integral(ReferenceMeasure::Arcsine, [](double) { return 1.0; }) == doctest::Approx(1.0).epsilon(1e-12));
    boost::math::quadrature::tanh_sinh<double> q;
    const double direct = q.integrate([](double x) { return reference_density(ReferenceMeasure::Arcsine, x); }, -2.0, 2.0);
    // mass within one ulp of +-2 is unreachable in x, about sqrt(eps) / pi
    CHECK(direct == doctest::Approx(1.0).epsilon(2e-8));
}

TEST_CASE("gauss_nodes")
{
    const AtomicMeasure one = gauss_nodes(ReferenceMeasure::Semicircle, 1);
    REQUIRE(one.size() == 1);
    CHECK(one.atom(0) == 0.0);
    CHECK(one.weight(0) == 1.0);
    CHECK_THROWS_AS(gauss_nodes(ReferenceMeasure::Semicircle, 0), InvalidArgument);

    const double sc2 = oracle_integral(ReferenceMeasure::Semicircle, [](double x) { return x * x; });
    const double ar2 = oracle_integral(ReferenceMeasure::Arcsine, [](double x) { return x * x; });
    CHECK(gauss_nodes(ReferenceMeasure::Semicircle, 10).moment(2) == doctest::Approx(sc2).epsilon(1e-12));
    CHECK(gauss_nodes(ReferenceMeasure::Arcsine, 10).moment(2) == doctest::Approx(ar2).epsilon(1e-12));
    CHECK(sc2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ar2 == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("gauss_nodes integrates polynomials of degree 2N-1 exactly")
{
    for (auto m : {ReferenceMeasure::Semicircle, ReferenceMeasure::Arcsine})
        for (std::size_t N : {1u, 2u, 3u, 5u, 8u}) {
            const AtomicMeasure g = gauss_nodes(m, N);
            for (int k = 0; k <= static_cast<int>(2 * N - 1); ++k) {
                const double exact = oracle_integral(m, [k](double x) { return std::pow(x, k); });
                CHECK(g.moment(k) == doctest::Approx(exact).epsilon(1e-11).scale(1.0));
            }
        }
    CHECK_NOTHROW(validate_quadrature(20));
    CHECK_NOTHROW(validate_quadrature(200));
}

TEST_CASE("orthogonality relations on the Gauss rules")
{
    const AtomicMeasure ar = gauss_nodes(ReferenceMeasure::Arcsine, 12);
    const AtomicMeasure sc = gauss_nodes(ReferenceMeasure::Semicircle, 12);
    for (int k = 0; k <= 5; ++k)
        for (int l = 0; l <= 5; ++l) {
            const double tt = ar.integrate([&](double x) {
                return cheb_eval(ChebKind::FirstKind, k, x / 2) * cheb_eval(ChebKind::FirstKind, l, x / 2);
            });
            const double uu = sc.integrate([&](double x) {
                return cheb_eval(ChebKind::SecondKind, k, x / 2) * cheb_eval(ChebKind::SecondKind, l, x / 2);
            });
            const double expect_t = k == l ? (k == 0 ? 1.0 : 0.5) : 0.0;
            CHECK(std::abs(tt - expect_t) <= 1e-10);
            CHECK(std::abs(uu - (k == l ? 1.0 : 0.0)) <= 1e-10);
        }
}

TEST_CASE("cheb_moments")
{
    CHECK(cheb_moments(AtomicMeasure::dirac(0.0), ChebKind::FirstKind, 2).values[2] == -1.0);
    const AtomicMeasure g = gauss_nodes(ReferenceMeasure::Semicircle, 20);
    const ChebCoeffs u = cheb_moments(g, ChebKind::SecondKind, 5);
    CHECK(u.values[0] == doctest::Approx(1.0));
    for (int k = 1; k <= 5; ++k)
        CHECK(std::abs(u.values[k]) <= 1e-12);
    const ChebCoeffs t = cheb_moments(g, ChebKind::FirstKind, 4);
    const double oracle = oracle_integral(ReferenceMeasure::Semicircle, [](double x) { return x * x / 2.0 - 1.0; });
    CHECK(t.values[2] == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(t.values[2] == doctest::Approx(-0.5).epsilon(1e-12));
    for (int k = 0; k <= 4; ++k)
        CHECK(t.values[k] == doctest::Approx(semicircle_t_moment(k)).scale(1.0).epsilon(1e-12));
}

TEST_CASE("stieltjes")
{
    using C = std::complex<double>;
    const C w = stieltjes(AtomicMeasure::dirac(0.0), C(0.0, 2.0));
    CHECK(w.real() == doctest::Approx(0.0));
    CHECK(w.imag() == doctest::Approx(0.5));
    const AtomicMeasure two({-1.0, 1.0}, {0.5, 0.5});
    CHECK(stieltjes(two, 2.0).real() == doctest::Approx(0.5 * (1.0 / -3.0) + 0.5 * (1.0 / -1.0)));
    CHECK(stieltjes(two, 2.0).real() == doctest::Approx(-2.0 / 3.0));
    CHECK_THROWS_AS(stieltjes(two, 1.0), InvalidArgument);

    const double oracle = oracle_integral(ReferenceMeasure::Semicircle, [](double x) { return 1.0 / (x - 3.0); });
    const C g = stieltjes(gauss_nodes(ReferenceMeasure::Semicircle, 200), 3.0);
    CHECK(g.real() == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(g.real() == doctest::Approx((-3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-12));
    CHECK(semicircle_stieltjes(3.0).real() == doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("closed-form transforms match quadrature off the real axis")
{
    using C = std::complex<double>;
    const AtomicMeasure sc = gauss_nodes(ReferenceMeasure::Semicircle, 400);
    const AtomicMeasure ar = gauss_nodes(ReferenceMeasure::Arcsine, 400);
    for (C z : {C(3.0, 0.0), C(2.0, 2.0), C(-0.5, 1.0), C(-3.0, -0.2)}) {
        CHECK(std::abs(stieltjes(sc, z) - semicircle_stieltjes(z)) < 1e-10);
        for (int k = 0; k <= 5; ++k) {
            C s = 0.0;
            for (std::size_t j = 0; j < ar.size(); ++j)
                s += ar.weight(j) * cheb_eval(ChebKind::FirstKind, k, ar.atom(j) / 2) / (ar.atom(j) - z);
            CHECK(std::abs(s - arcsine_cheb_stieltjes(k, z)) < 1e-10);
        }
    }
}

TEST_CASE("Nevanlinna property")
{
    using C = std::complex<double>;
    const AtomicMeasure mu({-1.3, 0.2, 0.9, 4.0}, {0.1, 0.2, 0.3, 0.4});
    for (double re = -5; re <= 5; re += 0.7)
        for (double im : {-2.0, -0.01, 0.01, 1.0}) {
            const C w = stieltjes(mu, C(re, im));
            CHECK(w.imag() * im > 0.0);
        }
}
