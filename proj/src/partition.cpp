#include "markovlab/partition.hpp"

#include <algorithm>
#include <sstream>

#include "markovlab/error.hpp"
#include "markovlab/rng.hpp"

namespace markovlab {

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows))
{
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] < 1)
            throw InvalidArgument("partition rows must be positive");
        if (i > 0 && rows_[i] > rows_[i - 1])
            throw InvalidArgument("partition rows must be non-increasing");
        size_ += rows_[i];
    }
}

void Partition::add_box(std::size_t r)
{
    if (r > rows_.size())
        throw InvalidArgument("row index out of range");
    if (r == rows_.size()) {
        rows_.push_back(1);
    } else {
        if (r > 0 && rows_[r] == rows_[r - 1])
            throw InvalidArgument("box at row " + std::to_string(r) + " is not addable");
        ++rows_[r];
    }
    ++size_;
}

std::string Partition::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(rows_[i]);
    }
    return s;
}

Partition Partition::parse(const std::string& s)
{
    std::vector<int> rows;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (tok.empty())
            continue;
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != tok.size())
            throw InvalidArgument("bad partition entry '" + tok + "'");
        rows.push_back(v);
    }
    return Partition(std::move(rows));
}

// Row j (0-based) of length r_j: the addable box sits at column r_j + 1 of
// row j + 1, content r_j - j; it exists when j == 0 or r_{j-1} > r_j. The
// removable box at the end of row j has content r_j - 1 - j and exists when
// r_j > r_{j+1}.
CornerData corners(const Partition& p)
{
    const auto& r = p.rows();
    const std::size_t L = r.size();
    CornerData c;
    c.outer.push_back(-static_cast<int>(L));
    for (std::size_t jj = L; jj-- > 0;) {
        const int j = static_cast<int>(jj);
        const int next = jj + 1 < L ? r[jj + 1] : 0;
        if (r[jj] > next)
            c.inner.push_back(r[jj] - 1 - j);
        if (jj == 0 || r[jj - 1] > r[jj])
            c.outer.push_back(r[jj] - j);
    }
    return c;
}

std::vector<std::size_t> outer_corner_rows(const Partition& p)
{
    const auto& r = p.rows();
    const std::size_t L = r.size();
    std::vector<std::size_t> rows;
    rows.push_back(L);
    for (std::size_t jj = L; jj-- > 0;)
        if (jj == 0 || r[jj - 1] > r[jj])
            rows.push_back(jj);
    return rows;
}

namespace {

InterlacingPair corner_pair(const CornerData& c)
{
    std::vector<double> a(c.outer.begin(), c.outer.end());
    std::vector<double> b(c.inner.begin(), c.inner.end());
    return make_pair_unchecked(std::move(a), std::move(b));
}

}  // namespace

AtomicMeasure transition_measure(const Partition& p)
{
    return markov_forward(corner_pair(corners(p)));
}

std::vector<Rational> transition_weights_exact(const Partition& p)
{
    const CornerData c = corners(p);
    const std::size_t n = c.outer.size();
    std::vector<Rational> w(n);
    for (std::size_t j = 0; j < n; ++j) {
        BigInt num = 1, den = 1;
        for (int b : c.inner)
            num *= c.outer[j] - b;
        for (std::size_t i = 0; i < n; ++i)
            if (i != j)
                den *= c.outer[j] - c.outer[i];
        if (den < 0) {
            num = -num;
            den = -den;
        }
        w[j] = Rational(num, den);
    }
    return w;
}

BigInt factorial(int n)
{
    BigInt f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

BigInt dim_hook(const Partition& p)
{
    const auto& r = p.rows();
    BigInt hooks = 1;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (int j = 0; j < r[i]; ++j) {
            int leg = 0;
            for (std::size_t k = i + 1; k < r.size() && r[k] > j; ++k)
                ++leg;
            hooks *= (r[i] - j - 1) + leg + 1;
        }
    return factorial(p.size()) / hooks;
}

namespace {

void grow_step(Partition& lam, Rng& rng)
{
    const AtomicMeasure mu = transition_measure(lam);
    const std::vector<std::size_t> rows = outer_corner_rows(lam);
    const double u = rng.uniform();
    double cum = 0.0;
    std::size_t pick = mu.size() - 1;
    for (std::size_t j = 0; j < mu.size(); ++j) {
        cum += mu.weight(j);
        if (u < cum) {
            pick = j;
            break;
        }
    }
    lam.add_box(rows[pick]);
}

}  // namespace

Partition plancherel_grow(int n, std::uint64_t seed)
{
    if (n < 0)
        throw InvalidArgument("n must be nonnegative");
    Rng rng(seed);
    Partition lam;
    for (int s = 0; s < n; ++s)
        grow_step(lam, rng);
    return lam;
}

std::vector<Partition> plancherel_chain(int n, std::uint64_t seed)
{
    if (n < 0)
        throw InvalidArgument("n must be nonnegative");
    Rng rng(seed);
    Partition lam;
    std::vector<Partition> chain{lam};
    for (int s = 0; s < n; ++s) {
        grow_step(lam, rng);
        chain.push_back(lam);
    }
    return chain;
}

Diagram partition_diagram(const Partition& p)
{
    return Diagram(corner_pair(corners(p)));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(remaining - k, k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n)
{
    if (n < 0)
        throw InvalidArgument("n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

}  // namespace markovlab
