#include "markovlab/interlacing.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "markovlab/error.hpp"

namespace markovlab {

InterlacingPair verify_interlacing(std::vector<double> a, std::vector<double> b)
{
    if (a.empty())
        throw InvalidArgument("interlacing pair needs at least one a");
    if (b.size() + 1 != a.size())
        throw InterlacingError("length mismatch: |b| must equal |a| - 1", 0);
    for (double v : a)
        if (!std::isfinite(v))
            throw InvalidArgument("non-finite entry in a");
    for (double v : b)
        if (!std::isfinite(v))
            throw InvalidArgument("non-finite entry in b");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (!(a[i] < b[i]))
            throw InterlacingError("a[" + std::to_string(i) + "] < b[" + std::to_string(i) + "] violated", i);
        if (!(b[i] < a[i + 1]))
            throw InterlacingError("b[" + std::to_string(i) + "] < a[" + std::to_string(i + 1) + "] violated",
                                   i + 1);
    }
    return InterlacingPair(std::move(a), std::move(b));
}

InterlacingPair cancel_common_roots(std::vector<double> a, std::vector<double> b, double rel_tol)
{
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a.empty())
        throw InvalidArgument("interlacing pair needs at least one a");
    const double tol = rel_tol * std::max(1.0, a.back() - a.front());
    std::vector<double> ra, rb;
    std::size_t i = 0, j = 0;
    while (j < b.size()) {
        if (i < a.size() && std::abs(a[i] - b[j]) <= tol) {
            ++i;
            ++j;
        } else if (i < a.size() && a[i] < b[j]) {
            ra.push_back(a[i++]);
        } else {
            rb.push_back(b[j++]);
        }
    }
    ra.insert(ra.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
    return verify_interlacing(std::move(ra), std::move(rb));
}

InterlacingPair make_pair_unchecked(std::vector<double> a, std::vector<double> b)
{
    return InterlacingPair(std::move(a), std::move(b));
}

Diagram::Diagram(InterlacingPair pair) : pair_(std::move(pair)), center_(0.0)
{
    for (double v : pair_.a())
        center_ += v;
    for (double v : pair_.b())
        center_ -= v;
}

double Diagram::operator()(double x) const
{
    double s = 0.0;
    for (double v : pair_.a())
        s += std::abs(x - v);
    for (double v : pair_.b())
        s -= std::abs(x - v);
    return s;
}

double diagram_eval(const Diagram& d, double x)
{
    return d(x);
}

AtomicMeasure markov_forward(const InterlacingPair& pair)
{
    const auto a = pair.a();
    const auto b = pair.b();
    const std::size_t n = a.size();
    std::vector<double> p(n);
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        // every factor lies in (0, 1)
        double w = 1.0;
        for (std::size_t i = 0; i < j; ++i)
            w *= (a[j] - b[i]) / (a[j] - a[i]);
        for (std::size_t i = j; i + 1 < n; ++i)
            w *= (b[i] - a[j]) / (a[i + 1] - a[j]);
        if (!(w > 0.0))
            throw CancellationError("Markov weight underflowed at atom " + std::to_string(j));
        p[j] = w;
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw CancellationError("Markov weights sum to " + std::to_string(total) +
                                "; reduce n or increase separation");
    for (double& w : p)
        w /= total;
    return AtomicMeasure(std::vector<double>(a.begin(), a.end()), std::move(p));
}

namespace {

struct FValue {
    double f;
    double df;
};

FValue cauchy_eval(std::span<const double> a, std::span<const double> p, double z)
{
    double f = 0.0, df = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double r = 1.0 / (z - a[i]);
        const double t = p[i] * r;
        f += t;
        df -= t * r;
    }
    return {f, df};
}

double cauchy_f(std::span<const double> a, std::span<const double> p, double z)
{
    double f = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        f += p[i] / (z - a[i]);
    return f;
}

}  // namespace

InterlacingPair markov_inverse(const AtomicMeasure& mu)
{
    const auto a = mu.atoms();
    const auto p = mu.weights();
    const std::size_t n = a.size();
    std::vector<double> b;
    b.reserve(n ? n - 1 : 0);
    const double span = a.back() - a.front();
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const double gap = a[j + 1] - a[j];
        if (gap < 1e-12 * span)
            throw DegenerateSpectrum("atoms " + std::to_string(j) + " and " + std::to_string(j + 1) +
                                     " are closer than 1e-12 of the span");
        // f decreases from +inf to -inf on the gap
        double lo = a[j], hi = a[j + 1];
        const double width = 1e-13 * gap;
        while (hi - lo > width) {
            const double mid = lo + 0.5 * (hi - lo);
            if (mid <= lo || mid >= hi)
                break;
            if (cauchy_f(a, p, mid) > 0.0)
                lo = mid;
            else
                hi = mid;
        }
        double z = lo + 0.5 * (hi - lo);
        FValue fz = cauchy_eval(a, p, z);
        for (int it = 0; it < 3 && fz.f != 0.0; ++it) {
            const double step = fz.f / fz.df;
            const double zn = z - step;
            if (!(zn > a[j] && zn < a[j + 1]))
                break;
            const FValue fn = cauchy_eval(a, p, zn);
            if (!(std::abs(fn.f) < std::abs(fz.f)))
                break;
            z = zn;
            fz = fn;
        }
        b.push_back(z);
    }
    return make_pair_unchecked(std::vector<double>(a.begin(), a.end()), std::move(b));
}

InterlacingPair rescale_pair(const InterlacingPair& pair, double L)
{
    if (!(L > 0.0))
        throw InvalidArgument("rescaling factor must be positive");
    std::vector<double> a(pair.a().begin(), pair.a().end());
    std::vector<double> b(pair.b().begin(), pair.b().end());
    for (double& v : a)
        v /= L;
    for (double& v : b)
        v /= L;
    return make_pair_unchecked(std::move(a), std::move(b));
}

Diagram rescale_diagram(const Diagram& d, double L)
{
    return Diagram(rescale_pair(d.pair(), L));
}

double diagram_sup_distance(const Diagram& d, const std::function<double(double)>& reference,
                            std::span<const double> grid)
{
    if (grid.empty())
        throw InvalidArgument("grid must be nonempty");
    double m = 0.0;
    for (double x : grid)
        m = std::max(m, std::abs(d(x) - reference(x)));
    return m;
}

std::vector<double> uniform_grid(double lo, double hi, double step)
{
    if (!(step > 0.0) || hi < lo)
        throw InvalidArgument("invalid grid bounds or step");
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> g(count);
    for (std::size_t i = 0; i < count; ++i)
        g[i] = lo + static_cast<double>(i) * step;
    return g;
}

}  // namespace markovlab
