#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace markovlab {

// Finitely supported probability measure: strictly increasing atoms,
// positive weights summing to one (within 1e-12).
class AtomicMeasure {
public:
    AtomicMeasure(std::vector<double> atoms, std::vector<double> weights);

    static AtomicMeasure dirac(double c);
    // Equal weights 1/n; duplicates are rejected.
    static AtomicMeasure uniform(std::vector<double> atoms);

    std::size_t size() const { return atoms_.size(); }
    std::span<const double> atoms() const { return atoms_; }
    std::span<const double> weights() const { return weights_; }
    double atom(std::size_t j) const { return atoms_[j]; }
    double weight(std::size_t j) const { return weights_[j]; }

    template <class F>
    double integrate(F&& f) const
    {
        double s = 0.0;
        for (std::size_t j = 0; j < atoms_.size(); ++j)
            s += weights_[j] * f(atoms_[j]);
        return s;
    }

    double moment(int k) const;

private:
    std::vector<double> atoms_;
    std::vector<double> weights_;
};

// Total-variation distance (half the l1 distance); atoms are matched
// when they differ by at most `atom_tol` (relative to the larger span).
double tv_distance(const AtomicMeasure& x, const AtomicMeasure& y, double atom_tol = 1e-9);

AtomicMeasure rescale_measure(const AtomicMeasure& mu, double L);

}  // namespace markovlab
