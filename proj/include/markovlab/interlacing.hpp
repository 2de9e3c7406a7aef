#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "markovlab/measure.hpp"

namespace markovlab {

// a_1 < b_1 < a_2 < ... < b_{n-1} < a_n
class InterlacingPair {
public:
    std::span<const double> a() const { return a_; }
    std::span<const double> b() const { return b_; }
    std::size_t size() const { return a_.size(); }

    friend InterlacingPair verify_interlacing(std::vector<double> a, std::vector<double> b);
    friend InterlacingPair make_pair_unchecked(std::vector<double> a, std::vector<double> b);

private:
    InterlacingPair(std::vector<double> a, std::vector<double> b) : a_(std::move(a)), b_(std::move(b)) {}
    std::vector<double> a_;
    std::vector<double> b_;
};

// Sorts both arrays and checks strict interlacing.
InterlacingPair verify_interlacing(std::vector<double> a, std::vector<double> b);

// Drops each b that coincides (within rel_tol times the span of a) with an a,
// together with that a, then verifies what is left. Neither the Markov
// transform nor the diagram depends on such common roots.
InterlacingPair cancel_common_roots(std::vector<double> a, std::vector<double> b, double rel_tol = 1e-10);
// For callers that construct interlacing data by design (root finders).
InterlacingPair make_pair_unchecked(std::vector<double> a, std::vector<double> b);

class Diagram {
public:
    explicit Diagram(InterlacingPair pair);

    const InterlacingPair& pair() const { return pair_; }
    double center() const { return center_; }
    double operator()(double x) const;

private:
    InterlacingPair pair_;
    double center_;
};

double diagram_eval(const Diagram& d, double x);

AtomicMeasure markov_forward(const InterlacingPair& pair);

InterlacingPair markov_inverse(const AtomicMeasure& mu);

InterlacingPair rescale_pair(const InterlacingPair& pair, double L);
Diagram rescale_diagram(const Diagram& d, double L);

double diagram_sup_distance(const Diagram& d, const std::function<double(double)>& reference,
                            std::span<const double> grid);

// Uniform grid lo, lo+step, ..., up to hi inclusive.
std::vector<double> uniform_grid(double lo, double hi, double step);

}  // namespace markovlab
