#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "markovlab/measure.hpp"

namespace markovlab {

enum class ChebKind { FirstKind, SecondKind };

enum class ReferenceMeasure { Semicircle, Arcsine };

struct ChebCoeffs {
    ChebKind kind;
    std::vector<double> values;  // k = 0..k_max
};

// T_k(x) or U_k(x) by the three-term recurrence.
double cheb_eval(ChebKind kind, int k, double x);

// out[k] = P_k(x) for k = 0..k_max.
void cheb_eval_all(ChebKind kind, int k_max, double x, double* out);

double lsvk_shape(double x);

double reference_density(ReferenceMeasure m, double x);

AtomicMeasure gauss_nodes(ReferenceMeasure m, std::size_t N);

// Throws unless the N-point rule reproduces moments 0..6 to 1e-12.
void validate_quadrature(std::size_t N);

// Entry k is sum_j p_j P_k(a_j / 2).
ChebCoeffs cheb_moments(const AtomicMeasure& mu, ChebKind kind, int k_max);

std::complex<double> stieltjes(const AtomicMeasure& mu, std::complex<double> z);

// sqrt(z^2 - 4) on the branch behaving like z at infinity.
std::complex<double> sqrt_z2m4(std::complex<double> z);

// (-z + sqrt(z^2 - 4)) / 2
std::complex<double> semicircle_stieltjes(std::complex<double> z);

// Integral of T_k(x/2)/(x - z) against the arcsine law on [-2, 2].
std::complex<double> arcsine_cheb_stieltjes(int k, std::complex<double> z);

// Centering constant: integral of T_k(x/2) against the semicircle law.
double semicircle_t_moment(int k);

}  // namespace markovlab
