#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "markovlab/interlacing.hpp"

namespace markovlab {

// Measure fluctuation sum_k c_k 2T_k(x/2) dx / (pi sqrt(4-x^2)); c[0] holds c_1.
struct FluctCoeffs {
    std::vector<double> c;
};

// Diagram fluctuation arcsin_coeff * arcsin(x/2) + sum_j u_j U_j(x/2) sqrt(4-x^2)/(2pi).
struct DiagramFluct {
    double arcsin_coeff;
    std::vector<double> u;  // j = 0..k_max-2
};

DiagramFluct linearized_markov_push(const FluctCoeffs& c);

// R(z) = sum_k c_k 2 w_k(z) where w_k is the arcsine Chebyshev-Stieltjes transform.
std::complex<double> fluct_stieltjes(const FluctCoeffs& c, std::complex<double> z);

// max_z | (1/eps) int (x-z)^{-1} d(omega_eps - omega_0) - 2 R(z)/w(z) |, the
// perturbation being the degree-`degree` U-expansion of the direction on the
// N-node semicircle rule. R is the closed form minus the analytic tail beyond
// U_degree, so it is the transform of the perturbation actually applied.
double fluct_lemma_residual(const FluctCoeffs& direction, double epsilon, std::size_t N,
                            std::span<const std::complex<double>> z_grid, int degree = 24);

enum class CltEnsemble { GueTrace, GueSpectral, UnimodularTrace, PlancherelTransition };
enum class CltScale { N, SqrtN };

std::string to_string(CltEnsemble e);
CltEnsemble parse_clt_ensemble(const std::string& s);

struct CLTStat {
    CltEnsemble ensemble;
    int k;
    CltScale scale;
    std::size_t n;
    std::vector<double> samples;
};

// Statistics for k = 0..k_max; sample i is drawn with derive_seed(seed, stream, i).
std::vector<CLTStat> clt_run(CltEnsemble ensemble, std::size_t n, std::size_t M, int k_max, std::uint64_t seed,
                             unsigned threads = 1);

// One sample's statistics k = 0..k_max.
std::vector<double> clt_sample(CltEnsemble ensemble, std::size_t n, int k_max, std::uint64_t sample_seed);

struct CltRow {
    int k;
    double mean;
    double mean_se;
    double variance;
    double var_se;  // jackknife
    double var_lo;
    double var_hi;
    double jb_pvalue;
};

struct CltSummary {
    std::vector<CltRow> rows;
    std::vector<std::vector<double>> covariance;
    std::vector<std::vector<double>> covariance_se;
};

CltSummary clt_summary(const std::vector<CLTStat>& stats);

struct CltTarget {
    enum class Kind { None, Variance, VarianceAtMost, Constant } kind = Kind::None;
    double value = 0.0;
};

CltTarget clt_target(CltEnsemble e, int k);
bool clt_row_pass(const CltTarget& t, const CltRow& row, const CLTStat& stat);

double pairwise_sum(std::span<const double> x);

enum class TransportKind {
    Spectral,  // omega_n against the spectral measure, scale sqrt(n)
    Trace,     // varpi_n against the counting measure, scale n
};

// int_{-2}^{2} (d(x) - Omega(x)) U_j(x/2) dx for j = 0..j_max
std::vector<double> diagram_u_coefficients(const Diagram& d, int j_max);

// int_{-2}^{2} F(x) U_j(x/2) dx predicted by linearized_markov_push.
std::vector<double> predicted_u_coefficients(const FluctCoeffs& c, int j_max);

struct TransportResult {
    double rms_relative;
    std::vector<double> rms_relative_per_j;
    std::size_t samples;
    int j_max;
};

TransportResult transport_cross_check(TransportKind kind, std::size_t n, std::size_t M, int k_max,
                                      std::uint64_t seed, unsigned threads = 1);

}  // namespace markovlab
