#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "markovlab/chebyshev.hpp"
#include "markovlab/error.hpp"
#include "markovlab/fluctuation.hpp"
#include "markovlab/hermitian.hpp"
#include "markovlab/interlacing.hpp"
#include "markovlab/jacobi.hpp"
#include "markovlab/partition.hpp"
#include "markovlab/rng.hpp"
#include "markovlab/symgroup.hpp"

namespace py = pybind11;
using namespace markovlab;

namespace {

using Measure = std::pair<std::vector<double>, std::vector<double>>;

Measure to_py(const AtomicMeasure& m)
{
    return {{m.atoms().begin(), m.atoms().end()}, {m.weights().begin(), m.weights().end()}};
}

Measure to_py(const InterlacingPair& p)
{
    return {{p.a().begin(), p.a().end()}, {p.b().begin(), p.b().end()}};
}

HermitianMatrix from_rows(const std::vector<std::vector<cplx>>& rows)
{
    const std::size_t n = rows.size();
    std::vector<cplx> dense;
    for (const auto& r : rows) {
        if (r.size() != n)
            throw InvalidArgument("matrix must be square");
        dense.insert(dense.end(), r.begin(), r.end());
    }
    return HermitianMatrix::from_dense(n, dense);
}

std::vector<std::vector<cplx>> to_rows(const HermitianMatrix& H)
{
    const auto d = H.dense();
    const std::size_t n = H.size();
    std::vector<std::vector<cplx>> rows(n);
    for (std::size_t i = 0; i < n; ++i)
        rows[i].assign(d.begin() + static_cast<std::ptrdiff_t>(i * n), d.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
    return rows;
}

Ensemble parse_ensemble(const std::string& s)
{
    if (s == "gue")
        return Ensemble::GUE;
    if (s == "unif" || s == "unimodular")
        return Ensemble::UnimodularUnif;
    throw InvalidArgument("ensemble must be 'gue' or 'unif'");
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Markov transform, interlacing spectra, Plancherel growth and fluctuation experiments";

    auto& base = py::register_exception<Error>(m, "MarkovlabError");
    py::register_exception<InterlacingError>(m, "InterlacingError", base);
    py::register_exception<CancellationError>(m, "CancellationError", base);
    py::register_exception<DegenerateSpectrum>(m, "DegenerateSpectrum", base);
    py::register_exception<Infeasible>(m, "Infeasible", base);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);

    m.def("markov_forward",
          [](std::vector<double> a, std::vector<double> b) { return to_py(markov_forward(verify_interlacing(a, b))); },
          py::arg("a"), py::arg("b"), "Atoms and weights of the Markov transform of an interlacing pair.");
    m.def("markov_inverse",
          [](std::vector<double> atoms, std::vector<double> weights) {
              return to_py(markov_inverse(AtomicMeasure(atoms, weights)));
          },
          py::arg("atoms"), py::arg("weights"));
    m.def("diagram_eval",
          [](std::vector<double> a, std::vector<double> b, std::vector<double> xs) {
              const Diagram d(verify_interlacing(a, b));
              std::vector<double> out;
              for (double x : xs)
                  out.push_back(d(x));
              return out;
          },
          py::arg("a"), py::arg("b"), py::arg("x"));
    m.def("lsvk_shape", &lsvk_shape, py::arg("x"));
    m.def("cheb_eval",
          [](const std::string& kind, int k, double x) {
              return cheb_eval(kind == "T" ? ChebKind::FirstKind : ChebKind::SecondKind, k, x);
          },
          py::arg("kind"), py::arg("k"), py::arg("x"));

    m.def("de_sample",
          [](std::size_t n, double beta, std::uint64_t seed) {
              const JacobiMatrix J = de_sample(n, beta, seed);
              return Measure{{J.diag().begin(), J.diag().end()}, {J.offdiag().begin(), J.offdiag().end()}};
          },
          py::arg("n"), py::arg("beta") = 2.0, py::arg("seed") = 0x5EED);
    m.def("tridiag_eigenvalues",
          [](std::vector<double> d, std::vector<double> e) { return tridiag_eigenvalues(JacobiMatrix(d, e)); },
          py::arg("diag"), py::arg("offdiag"));
    m.def("spectral_measure",
          [](std::vector<double> d, std::vector<double> e) { return to_py(spectral_measure(JacobiMatrix(d, e))); },
          py::arg("diag"), py::arg("offdiag"));
    m.def("trace_formula_check",
          [](std::vector<double> d, std::vector<double> e) {
              const auto r = trace_formula_check(JacobiMatrix(d, e));
              return std::pair<double, double>{r.residual_mu, r.residual_rho};
          },
          py::arg("diag"), py::arg("offdiag"));

    m.def("sample",
          [](const std::string& ensemble, std::size_t n, std::uint64_t seed) {
              return to_rows(sample({parse_ensemble(ensemble), n}, seed));
          },
          py::arg("ensemble"), py::arg("n"), py::arg("seed") = 0x5EED, "Dense Hermitian draw as a list of rows.");
    m.def("hermitian_eigenvalues",
          [](const std::vector<std::vector<cplx>>& rows) { return hermitian_eigenvalues(from_rows(rows)); },
          py::arg("matrix"));
    m.def("spectral_measure_dense",
          [](const std::vector<std::vector<cplx>>& rows) { return to_py(spectral_measure_dense(from_rows(rows))); },
          py::arg("matrix"));
    m.def("critical_points", [](std::vector<double> eigs) { return critical_points(eigs); }, py::arg("eigs"));

    m.def("corners",
          [](std::vector<int> rows) {
              const CornerData c = corners(Partition(rows));
              return std::pair<std::vector<int>, std::vector<int>>{c.outer, c.inner};
          },
          py::arg("rows"));
    m.def("transition_measure", [](std::vector<int> rows) { return to_py(transition_measure(Partition(rows))); },
          py::arg("rows"));
    m.def("dim_hook", [](std::vector<int> rows) { return py::int_(py::str(dim_hook(Partition(rows)).str())); },
          py::arg("rows"));
    m.def("plancherel_grow", [](int n, std::uint64_t seed) { return plancherel_grow(n, seed).rows(); }, py::arg("n"),
          py::arg("seed") = 0x5EED);

    m.def("verify_jm_path_lemma", &verify_jm_path_lemma, py::arg("l"), py::arg("m"));
    m.def("verify_trace_vs_transition",
          [](int k_max, int n) {
              const auto r = verify_trace_vs_transition(k_max, n);
              return std::pair<double, bool>{r.max_residual, r.exact_match};
          },
          py::arg("k_max"), py::arg("n"));
    m.def("nonbacktracking_trace_identity",
          [](const std::vector<std::vector<cplx>>& rows, int k) {
              const auto r = nonbacktracking_trace_identity(from_rows(rows), k);
              return py::dict(py::arg("residual") = r.residual, py::arg("value") = r.value,
                              py::arg("tk_k_even") = r.tk_k_even, py::arg("tk_n_even") = r.tk_n_even);
          },
          py::arg("matrix"), py::arg("k"));
    m.def("bass_series_check",
          [](const std::vector<std::vector<cplx>>& rows, int D) {
              const auto r = bass_series_check(from_rows(rows), D);
              return std::pair<double, double>{r.residual, r.residual_printed};
          },
          py::arg("matrix"), py::arg("degree"));

    m.def("linearized_markov_push",
          [](std::vector<double> c) {
              const DiagramFluct f = linearized_markov_push({std::move(c)});
              return std::pair<double, std::vector<double>>{f.arcsin_coeff, f.u};
          },
          py::arg("c"), "c[0] holds c_1; returns (arcsin coefficient, u_0..).");
    m.def("fluct_lemma_residual",
          [](std::vector<double> c, double eps, std::size_t N, std::vector<std::complex<double>> z) {
              return fluct_lemma_residual({std::move(c)}, eps, N, z);
          },
          py::arg("c"), py::arg("epsilon"), py::arg("nodes"), py::arg("z"));
    m.def("clt_run",
          [](const std::string& ensemble, std::size_t n, std::size_t M, int k_max, std::uint64_t seed, unsigned threads) {
              const auto stats = clt_run(parse_clt_ensemble(ensemble), n, M, k_max, seed, threads);
              std::vector<std::vector<double>> out;
              for (const auto& s : stats)
                  out.push_back(s.samples);
              return out;
          },
          py::arg("ensemble"), py::arg("n"), py::arg("M"), py::arg("k_max"), py::arg("seed") = 0x5EED,
          py::arg("threads") = 1, "Samples per k = 0..k_max.");
    m.def("clt_summary",
          [](const std::string& ensemble, std::size_t n, std::size_t M, int k_max, std::uint64_t seed, unsigned threads) {
              const CltEnsemble e = parse_clt_ensemble(ensemble);
              const auto stats = clt_run(e, n, M, k_max, seed, threads);
              const CltSummary s = clt_summary(stats);
              py::list rows;
              for (std::size_t k = 0; k < s.rows.size(); ++k) {
                  const CltRow& r = s.rows[k];
                  rows.append(py::dict(py::arg("k") = r.k, py::arg("mean") = r.mean, py::arg("var") = r.variance,
                                       py::arg("var_lo") = r.var_lo, py::arg("var_hi") = r.var_hi,
                                       py::arg("jb_pvalue") = r.jb_pvalue,
                                       py::arg("pass") = clt_row_pass(clt_target(e, r.k), r, stats[k])));
              }
              return rows;
          },
          py::arg("ensemble"), py::arg("n"), py::arg("M"), py::arg("k_max"), py::arg("seed") = 0x5EED,
          py::arg("threads") = 1);
    m.def("transport_cross_check",
          [](const std::string& kind, std::size_t n, std::size_t M, int k_max, std::uint64_t seed, unsigned threads) {
              if (kind != "spectral" && kind != "trace")
                  throw InvalidArgument("kind must be 'spectral' or 'trace'");
              const auto r = transport_cross_check(kind == "spectral" ? TransportKind::Spectral : TransportKind::Trace, n,
                                                   M, k_max, seed, threads);
              return std::pair<double, std::vector<double>>{r.rms_relative, r.rms_relative_per_j};
          },
          py::arg("kind"), py::arg("n"), py::arg("M"), py::arg("k_max") = 5, py::arg("seed") = 0x5EED,
          py::arg("threads") = 1);
}
