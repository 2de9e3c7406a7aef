#include "markovlab/measure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "markovlab/error.hpp"

namespace markovlab {

AtomicMeasure::AtomicMeasure(std::vector<double> atoms, std::vector<double> weights)
    : atoms_(std::move(atoms)), weights_(std::move(weights))
{
    if (atoms_.empty())
        throw InvalidArgument("atomic measure needs at least one atom");
    if (atoms_.size() != weights_.size())
        throw InvalidArgument("atoms and weights differ in length");
    double total = 0.0;
    for (std::size_t j = 0; j < atoms_.size(); ++j) {
        if (!std::isfinite(atoms_[j]) || !std::isfinite(weights_[j]))
            throw InvalidArgument("non-finite atom or weight at index " + std::to_string(j));
        if (!(weights_[j] > 0.0))
            throw InvalidArgument("non-positive weight at index " + std::to_string(j));
        if (j > 0 && !(atoms_[j - 1] < atoms_[j]))
            throw InvalidArgument("atoms not strictly increasing at index " + std::to_string(j));
        total += weights_[j];
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw InvalidArgument("weights sum to " + std::to_string(total) + ", not 1");
}

AtomicMeasure AtomicMeasure::dirac(double c)
{
    return AtomicMeasure({c}, {1.0});
}

AtomicMeasure AtomicMeasure::uniform(std::vector<double> atoms)
{
    std::sort(atoms.begin(), atoms.end());
    for (std::size_t j = 1; j < atoms.size(); ++j)
        if (atoms[j] == atoms[j - 1])
            throw DegenerateSpectrum("duplicate atom at index " + std::to_string(j));
    const std::size_t n = atoms.size();
    std::vector<double> w(n, n ? 1.0 / static_cast<double>(n) : 0.0);
    return AtomicMeasure(std::move(atoms), std::move(w));
}

double AtomicMeasure::moment(int k) const
{
    return integrate([k](double x) { return std::pow(x, k); });
}

double tv_distance(const AtomicMeasure& x, const AtomicMeasure& y, double atom_tol)
{
    const double span = std::max({std::abs(x.atoms().front()), std::abs(x.atoms().back()),
                                  std::abs(y.atoms().front()), std::abs(y.atoms().back()), 1.0});
    const double tol = atom_tol * span;
    double l1 = 0.0;
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (i < x.size() && j < y.size() && std::abs(x.atom(i) - y.atom(j)) <= tol) {
            l1 += std::abs(x.weight(i) - y.weight(j));
            ++i;
            ++j;
        } else if (j >= y.size() || (i < x.size() && x.atom(i) < y.atom(j))) {
            l1 += x.weight(i++);
        } else {
            l1 += y.weight(j++);
        }
    }
    return 0.5 * l1;
}

AtomicMeasure rescale_measure(const AtomicMeasure& mu, double L)
{
    if (!(L > 0.0))
        throw InvalidArgument("rescaling factor must be positive");
    std::vector<double> a(mu.atoms().begin(), mu.atoms().end());
    for (double& v : a)
        v /= L;
    return AtomicMeasure(std::move(a), std::vector<double>(mu.weights().begin(), mu.weights().end()));
}

}  // namespace markovlab
