#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "markovlab/interlacing.hpp"
#include "markovlab/measure.hpp"

namespace markovlab {

class JacobiMatrix {
public:
    JacobiMatrix(std::vector<double> diag, std::vector<double> offdiag);

    std::size_t size() const { return diag_.size(); }
    std::span<const double> diag() const { return diag_; }
    std::span<const double> offdiag() const { return offdiag_; }

    // Top-left m x m block.
    JacobiMatrix leading(std::size_t m) const;

private:
    std::vector<double> diag_;
    std::vector<double> offdiag_;
};

enum class EigenMethod {
    Bisection,  // Sturm bisection only
    Fast,       // implicit QL, each eigenvalue certified by Sturm counts
};

struct SpectralPair {
    std::vector<double> eigs_n;
    std::vector<double> eigs_sub;
};

std::vector<double> tridiag_eigenvalues(const JacobiMatrix& J, EigenMethod method = EigenMethod::Fast);

// Symmetric tridiagonal with nonnegative off-diagonal that may contain zeros.
std::vector<double> symmetric_tridiagonal_eigenvalues(std::span<const double> diag,
                                                      std::span<const double> offdiag,
                                                      EigenMethod method = EigenMethod::Fast);

// Number of eigenvalues strictly below x.
std::size_t sturm_count(std::span<const double> diag, std::span<const double> offdiag, double x);

SpectralPair spectral_pair(const JacobiMatrix& J);

AtomicMeasure spectral_measure(const JacobiMatrix& J);

// Weights from squared last eigenvector components (QL with last-row tracking).
AtomicMeasure spectral_measure_eigenvectors(const JacobiMatrix& J);

AtomicMeasure counting_measure(std::span<const double> eigs);

JacobiMatrix de_sample(std::size_t n, double beta, std::uint64_t seed);

struct TraceFormulaResidual {
    double residual_mu;
    double residual_rho;
};

TraceFormulaResidual trace_formula_check(const JacobiMatrix& J);

}  // namespace markovlab
