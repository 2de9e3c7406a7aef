#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "markovlab/interlacing.hpp"
#include "markovlab/jacobi.hpp"
#include "markovlab/measure.hpp"

namespace markovlab {

using cplx = std::complex<double>;

// Hermitian matrix with packed upper-triangle storage.
class HermitianMatrix {
public:
    explicit HermitianMatrix(std::size_t n);
    // Row-major dense input; must be Hermitian to 1e-12.
    static HermitianMatrix from_dense(std::size_t n, std::span<const cplx> dense);

    std::size_t size() const { return n_; }
    cplx operator()(std::size_t i, std::size_t j) const;
    // Sets (i,j) and its conjugate partner; diagonal values must be real.
    void set(std::size_t i, std::size_t j, cplx v);

    HermitianMatrix leading(std::size_t m) const;
    std::vector<cplx> dense() const;
    double trace() const;
    double trace_sq() const;  // tr H^2

private:
    std::size_t index(std::size_t i, std::size_t j) const { return i * n_ - i * (i + 1) / 2 + j; }
    std::size_t n_;
    std::vector<cplx> upper_;
};

enum class Ensemble { GUE, UnimodularUnif };

struct EnsembleSpec {
    Ensemble kind;
    std::size_t n;
};

HermitianMatrix sample(const EnsembleSpec& spec, std::uint64_t seed);

// Householder reduction to real tridiagonal form (diag, |offdiag|).
void hermitian_tridiagonalize(const HermitianMatrix& H, std::vector<double>& diag, std::vector<double>& offdiag);

std::vector<double> hermitian_eigenvalues(const HermitianMatrix& H);

std::vector<double> critical_points(std::span<const double> eigs);

AtomicMeasure spectral_measure_dense(const HermitianMatrix& H);

struct DiagramPair {
    Diagram omega;
    Diagram varpi;
};

DiagramPair build_diagrams(const HermitianMatrix& H);
DiagramPair build_diagrams(const JacobiMatrix& J);
// From precomputed spectra of the matrix and its top-left submatrix.
DiagramPair build_diagrams(std::vector<double> eigs_n, std::vector<double> eigs_sub);

}  // namespace markovlab
