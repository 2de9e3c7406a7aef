#include "markovlab/symgroup.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "markovlab/error.hpp"
#include "markovlab/partition.hpp"

namespace markovlab {

Permutation Permutation::identity(int n)
{
    if (n < 1 || n > max_symmetric_degree)
        throw Infeasible("symmetric group degree must be in [1, " + std::to_string(max_symmetric_degree) + "]");
    Permutation p;
    p.n_ = n;
    for (int i = 0; i < n; ++i)
        p.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    return p;
}

Permutation Permutation::transposition(int n, int i, int j)
{
    if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw InvalidArgument("transposition points out of range");
    Permutation p = identity(n);
    std::swap(p.img_[static_cast<std::size_t>(i - 1)], p.img_[static_cast<std::size_t>(j - 1)]);
    return p;
}

Permutation Permutation::from_one_line(const std::vector<int>& images)
{
    Permutation p = identity(static_cast<int>(images.size()));
    std::vector<bool> seen(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
        const int v = images[i] - 1;
        if (v < 0 || v >= static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v)])
            throw InvalidArgument("not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
        p.img_[i] = static_cast<std::uint8_t>(v);
    }
    return p;
}

bool Permutation::is_identity() const
{
    for (int i = 0; i < n_; ++i)
        if (img_[static_cast<std::size_t>(i)] != i)
            return false;
    return true;
}

std::uint64_t Permutation::key() const
{
    std::uint64_t k = 0;
    for (int i = 0; i < n_; ++i)
        k |= static_cast<std::uint64_t>(img_[static_cast<std::size_t>(i)]) << (4 * i);
    return k;
}

Permutation Permutation::from_key(int n, std::uint64_t key)
{
    Permutation p = identity(n);
    for (int i = 0; i < n; ++i)
        p.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((key >> (4 * i)) & 0xF);
    return p;
}

Permutation operator*(const Permutation& x, const Permutation& y)
{
    if (x.n_ != y.n_)
        throw InvalidArgument("permutation degree mismatch");
    Permutation r = x;
    for (int i = 0; i < x.n_; ++i)
        r.img_[static_cast<std::size_t>(i)] = x.img_[y.img_[static_cast<std::size_t>(i)]];
    return r;
}

GroupAlgebraElement GroupAlgebraElement::identity(int n)
{
    return of(Permutation::identity(n));
}

GroupAlgebraElement GroupAlgebraElement::of(const Permutation& p, const Rational& c)
{
    GroupAlgebraElement e(p.degree());
    e.add(p, c);
    return e;
}

Rational GroupAlgebraElement::coefficient(const Permutation& p) const
{
    const auto it = terms_.find(p.key());
    return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add(std::uint64_t key, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void GroupAlgebraElement::add(const Permutation& p, const Rational& c)
{
    if (p.degree() != n_)
        throw InvalidArgument("permutation degree mismatch");
    add(p.key(), c);
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o)
{
    if (o.n_ != n_)
        throw InvalidArgument("group algebra dimension mismatch");
    for (const auto& [k, c] : o.terms_)
        add(k, c);
    return *this;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Rational& c) const
{
    GroupAlgebraElement r(n_);
    if (c == 0)
        return r;
    for (const auto& [k, v] : terms_)
        r.terms_.emplace(k, v * c);
    return r;
}

GroupAlgebraElement jm_element(int m, int n)
{
    if (m < 2 || m > n)
        throw InvalidArgument("Jucys-Murphy index must satisfy 2 <= m <= n");
    GroupAlgebraElement x(n);
    for (int i = 1; i < m; ++i)
        x.add(Permutation::transposition(n, i, m), 1);
    return x;
}

GroupAlgebraElement algebra_mul(const GroupAlgebraElement& x, const GroupAlgebraElement& y)
{
    if (x.degree() != y.degree())
        throw InvalidArgument("group algebra dimension mismatch");
    const int n = x.degree();
    std::vector<std::pair<Permutation, const Rational*>> ys;
    ys.reserve(y.size());
    for (const auto& [k, c] : y.terms())
        ys.emplace_back(Permutation::from_key(n, k), &c);
    GroupAlgebraElement r(n);
    for (const auto& [kx, cx] : x.terms()) {
        const Permutation px = Permutation::from_key(n, kx);
        for (const auto& [py, cy] : ys)
            r.add((px * py).key(), cx * *cy);
    }
    return r;
}

GroupAlgebraElement poly_apply(const Polynomial& P, const GroupAlgebraElement& x)
{
    const int n = x.degree();
    GroupAlgebraElement acc(n);
    for (std::size_t i = P.size(); i-- > 0;) {
        acc = algebra_mul(acc, x);
        acc.add(Permutation::identity(n), Rational(P[i]));
    }
    return acc;
}

Rational normalized_trace(const GroupAlgebraElement& x)
{
    return x.coefficient(Permutation::identity(x.degree()));
}

namespace {

Polynomial poly_sub(const Polynomial& a, const Polynomial& b)
{
    Polynomial r(std::max(a.size(), b.size()), BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] -= b[i];
    while (!r.empty() && r.back() == 0)
        r.pop_back();
    return r;
}

// V_0..V_L with V_{j+1} = x V_j - q V_{j-1}
std::vector<Polynomial> v_family(int L, long q)
{
    std::vector<Polynomial> V;
    V.push_back({BigInt(1)});
    if (L >= 1)
        V.push_back({BigInt(0), BigInt(1)});
    for (int j = 1; j < L; ++j) {
        Polynomial next(V[j].size() + 1, BigInt(0));
        for (std::size_t i = 0; i < V[j].size(); ++i)
            next[i + 1] += V[j][i];
        for (std::size_t i = 0; i < V[j - 1].size(); ++i)
            next[i] -= q * V[j - 1][i];
        V.push_back(std::move(next));
    }
    return V;
}

}  // namespace

Polynomial scaled_cheb_u(int l, long q)
{
    if (l < 0)
        return {};
    return v_family(l, q)[static_cast<std::size_t>(l)];
}

Polynomial scaled_cheb_t(int k, long q)
{
    if (k < 0)
        return {};
    if (k == 0)
        return {BigInt(2)};
    // 2T_k = U_k - U_{k-2}, so W_k = V_k - q V_{k-2}
    const auto V = v_family(k, q);
    Polynomial qv;
    if (k >= 2)
        for (const auto& c : V[static_cast<std::size_t>(k - 2)])
            qv.push_back(q * c);
    return poly_sub(V[static_cast<std::size_t>(k)], qv);
}

Polynomial p_poly(int l, int m)
{
    return poly_sub(scaled_cheb_u(l, m - 1), scaled_cheb_u(l - 2, m - 1));
}

Polynomial q_poly(int k, int m)
{
    return poly_sub(scaled_cheb_t(k, m - 1), scaled_cheb_t(k - 2, m - 1));
}

bool verify_jm_path_lemma(int l, int m)
{
    if (l < 0 || m < 2)
        throw InvalidArgument("need l >= 0 and m >= 2");
    if (m > max_symmetric_degree)
        throw Infeasible("m must be at most " + std::to_string(max_symmetric_degree));
    double paths = l == 0 ? 1.0 : (m - 1) * std::pow(m - 2.0, l - 1);
    if (paths > 2e6)
        throw Infeasible("path enumeration of size " + std::to_string(paths) + " exceeds the bound 2e6");
    const int n = m;
    const GroupAlgebraElement lhs = poly_apply(p_poly(l, m - 1), jm_element(m, n));

    GroupAlgebraElement rhs(n);
    std::vector<Permutation> tau;
    for (int j = 1; j < m; ++j)
        tau.push_back(Permutation::transposition(n, j, m));
    std::function<void(int, int, const Permutation&)> rec = [&](int depth, int prev, const Permutation& acc) {
        if (depth == l) {
            rhs.add(acc, 1);
            return;
        }
        for (int j = 1; j < m; ++j)
            if (j != prev)
                rec(depth + 1, j, acc * tau[static_cast<std::size_t>(j - 1)]);
    };
    rec(0, 0, Permutation::identity(n));
    return lhs == rhs;
}

TraceTransitionResult verify_trace_vs_transition(int k_max, int n)
{
    if (n < 2 || k_max < 0)
        throw InvalidArgument("need n >= 2 and k_max >= 0");
    if (n > 8)
        throw Infeasible("trace/transition check needs n <= 8 (group algebra of size n!)");
    const GroupAlgebraElement X = jm_element(n, n);
    std::vector<Rational> lhs;
    GroupAlgebraElement Y = GroupAlgebraElement::identity(n);
    for (int k = 0; k <= k_max; ++k) {
        if (k > 0)
            Y = algebra_mul(Y, X);
        lhs.push_back(normalized_trace(Y));
    }
    std::vector<Rational> rhs_exact(static_cast<std::size_t>(k_max) + 1, Rational(0));
    std::vector<double> rhs(static_cast<std::size_t>(k_max) + 1, 0.0);
    const BigInt nf = factorial(n - 1);
    for (const Partition& lam : partitions_of(n - 1)) {
        const BigInt d = dim_hook(lam);
        const Rational plan(d * d, nf);
        const double plan_d = static_cast<double>(plan);
        const CornerData c = corners(lam);
        const std::vector<Rational> w = transition_weights_exact(lam);
        const AtomicMeasure mu = transition_measure(lam);
        for (int k = 0; k <= k_max; ++k) {
            Rational s = 0;
            for (std::size_t j = 0; j < w.size(); ++j) {
                Rational a = 1;
                for (int r = 0; r < k; ++r)
                    a *= c.outer[j];
                s += w[j] * a;
            }
            rhs_exact[static_cast<std::size_t>(k)] += plan * s;
            rhs[static_cast<std::size_t>(k)] += plan_d * mu.moment(k);
        }
    }
    TraceTransitionResult r{0.0, true};
    for (int k = 0; k <= k_max; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        r.max_residual = std::max(r.max_residual, std::abs(static_cast<double>(lhs[kk]) - rhs[kk]));
        r.exact_match = r.exact_match && lhs[kk] == rhs_exact[kk];
    }
    return r;
}

void require_unimodular_class(const HermitianMatrix& H)
{
    const std::size_t n = H.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double a = std::abs(H(i, j));
            if (i == j ? a > 1e-12 : std::abs(a - 1.0) > 1e-12)
                throw InvalidArgument("matrix is not unimodular-class at (" + std::to_string(i) + "," +
                                      std::to_string(j) + ")");
        }
}

namespace {

void check_enumeration_size(std::size_t n, int k)
{
    const double size = static_cast<double>(n) * std::pow(static_cast<double>(n) - 1.0, k > 0 ? 1 : 0) *
                        std::pow(std::max(static_cast<double>(n) - 2.0, 1.0), std::max(k - 2, 0));
    if (size > 2e8)
        throw Infeasible("path enumeration of size " + std::to_string(size) + " exceeds the bound 2e8");
}

}  // namespace

std::complex<double> cyclic_nonbacktracking_sum(const HermitianMatrix& H, int k)
{
    if (k < 1)
        throw InvalidArgument("path length must be positive");
    const std::size_t n = H.size();
    check_enumeration_size(n, k);
    std::vector<cplx> A = H.dense();
    std::vector<std::size_t> u(static_cast<std::size_t>(k) + 1);
    cplx total = 0.0;
    // u[0..k-1] chosen; closure u[k] = u[0]
    std::function<void(int, cplx)> rec = [&](int r, cplx prod) {
        if (r == k) {
            const std::size_t u0 = u[0], last = u[static_cast<std::size_t>(k - 1)];
            if (u0 == last)
                return;
            if (k >= 2 && u0 == u[static_cast<std::size_t>(k - 2)])
                return;
            if (k >= 2 && last == u[1])
                return;
            total += prod * A[last * n + u0];
            return;
        }
        for (std::size_t v = 0; v < n; ++v) {
            const auto rr = static_cast<std::size_t>(r);
            if (v == u[rr - 1])
                continue;
            if (rr >= 2 && v == u[rr - 2])
                continue;
            u[rr] = v;
            rec(r + 1, prod * A[u[rr - 1] * n + v]);
        }
    };
    for (std::size_t v = 0; v < n; ++v) {
        u[0] = v;
        rec(1, cplx(1.0, 0.0));
    }
    return total;
}

std::complex<double> matrix_poly_trace(const HermitianMatrix& H, const Polynomial& P)
{
    const std::size_t n = H.size();
    const std::vector<cplx> A = H.dense();
    std::vector<cplx> acc(n * n, 0.0), tmp(n * n);
    for (std::size_t d = P.size(); d-- > 0;) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                cplx s = 0.0;
                for (std::size_t l = 0; l < n; ++l)
                    s += acc[i * n + l] * A[l * n + j];
                tmp[i * n + j] = s;
            }
        acc.swap(tmp);
        const double c = static_cast<double>(P[d]);
        for (std::size_t i = 0; i < n; ++i)
            acc[i * n + i] += c;
    }
    cplx t = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        t += acc[i * n + i];
    return t;
}

NonbacktrackingResult nonbacktracking_trace_identity(const HermitianMatrix& H, int k)
{
    require_unimodular_class(H);
    if (k < 1)
        throw InvalidArgument("k must be positive");
    const std::size_t n = H.size();
    if (n < 3)
        throw InvalidArgument("non-backtracking identities need n >= 3");
    const long q = static_cast<long>(n) - 2;
    const double corr = static_cast<double>(n) * (static_cast<double>(n) - 3.0);
    const cplx ck = cyclic_nonbacktracking_sum(H, k);
    const cplx tk = matrix_poly_trace(H, scaled_cheb_t(k, q));
    NonbacktrackingResult r{};
    r.tk_k_even = std::abs(tk - ck + (k % 2 == 0 ? corr : 0.0));
    r.tk_n_even = std::abs(tk - ck + (n % 2 == 0 ? corr : 0.0));
    if (k == 1) {
        r.value = tk.real();
        r.residual = std::abs(tk);
    } else if (k == 2) {
        r.value = tk.real();
        r.residual = std::abs(tk + corr);
    } else {
        const cplx tq = matrix_poly_trace(H, q_poly(k, static_cast<int>(n) - 1));
        const cplx ck2 = cyclic_nonbacktracking_sum(H, k - 2);
        r.value = tq.real();
        r.residual = std::abs(tq - ck + ck2);
    }
    return r;
}

namespace {

// Coefficients c_l, l = 1..D+1, of u^{l-1} in
// -d/du log[(1-u^2)^E det(1 - uH + q u^2)].
std::vector<double> bass_lhs(const HermitianMatrix& H, int D, double q)
{
    const std::size_t n = H.size();
    const int L = D + 1;
    std::vector<double> tr(static_cast<std::size_t>(L) + 1);
    tr[0] = static_cast<double>(n);
    for (int j = 1; j <= L; ++j) {
        Polynomial mono(static_cast<std::size_t>(j) + 1, BigInt(0));
        mono[static_cast<std::size_t>(j)] = 1;
        tr[static_cast<std::size_t>(j)] = matrix_poly_trace(H, mono).real();
    }
    const double E = static_cast<double>(n) * (static_cast<double>(n) - 3.0) / 2.0;
    std::vector<double> c(static_cast<std::size_t>(L) + 1, 0.0);
    for (int l = 1; l <= L; ++l) {
        double v = l % 2 == 0 ? 2.0 * E : 0.0;
        // pairs r + s = l, 0 <= s <= r
        for (int s = 0; 2 * s <= l; ++s) {
            const int r = l - s;
            double binom = 1.0;
            for (int i = 0; i < s; ++i)
                binom = binom * (r - i) / (i + 1);
            v += binom * std::pow(-q, s) * tr[static_cast<std::size_t>(r - s)] * l / r;
        }
        c[static_cast<std::size_t>(l)] = v;
    }
    return c;
}

}  // namespace

BassResult bass_series_check(const HermitianMatrix& H, int D)
{
    require_unimodular_class(H);
    const std::size_t n = H.size();
    if (n > 8 || D > 8)
        throw Infeasible("Bass series check needs n <= 8 and D <= 8");
    if (D < 0)
        throw InvalidArgument("degree must be nonnegative");
    const double nn = static_cast<double>(n);
    const std::vector<double> lhs = bass_lhs(H, D, nn - 2.0);
    const std::vector<double> lhs_printed = bass_lhs(H, D, nn - 1.0);
    BassResult r{0.0, 0.0};
    for (int l = 1; l <= D + 1; ++l) {
        const cplx N = n >= 2 ? cyclic_nonbacktracking_sum(H, l) : cplx(0.0);
        const auto ll = static_cast<std::size_t>(l);
        r.residual = std::max(r.residual, std::abs(lhs[ll] - N));
        r.residual_printed = std::max(r.residual_printed, std::abs(lhs_printed[ll] - static_cast<double>(l) * N));
    }
    return r;
}

namespace {

bool identically_one(const std::vector<std::size_t>& p, const std::vector<std::size_t>& q, std::size_t nv)
{
    // forward minus backward traversals per unordered edge must vanish
    std::vector<int> bal(nv * nv, 0);
    auto walk = [&](const std::vector<std::size_t>& w) {
        for (std::size_t r = 0; r + 1 < w.size(); ++r) {
            const std::size_t a = w[r], b = w[r + 1];
            if (a < b)
                ++bal[a * nv + b];
            else
                --bal[b * nv + a];
        }
    };
    walk(p);
    walk(q);
    for (int v : bal)
        if (v != 0)
            return false;
    return true;
}

}  // namespace

int count_matrix_cycle_alignments(int k)
{
    if (k < 3 || k > 8)
        throw InvalidArgument("cycle length must be in [3, 8]");
    const auto nv = static_cast<std::size_t>(k);
    std::vector<std::size_t> base(nv + 1);
    for (std::size_t i = 0; i < nv; ++i)
        base[i] = i;
    base[nv] = 0;
    int count = 0;
    std::vector<std::size_t> u(nv + 1);
    std::function<void(std::size_t)> rec = [&](std::size_t r) {
        if (r == nv) {
            u[nv] = u[0];
            if (u[0] == u[nv - 1] || u[0] == u[nv - 2] || u[nv - 1] == u[1])
                return;
            count += identically_one(base, u, nv);
            return;
        }
        for (std::size_t v = 0; v < nv; ++v) {
            if (v == u[r - 1] || (r >= 2 && v == u[r - 2]))
                continue;
            u[r] = v;
            rec(r + 1);
        }
    };
    for (std::size_t v = 0; v < nv; ++v) {
        u[0] = v;
        rec(1);
    }
    return count;
}

int count_jm_cycle_alignments(int k)
{
    if (k < 3 || k > 8)
        throw InvalidArgument("cycle length must be in [3, 8]");
    const int m = k;  // symbols 1..k-1, pivot m
    const int n = m;
    auto pi = [&](const std::vector<int>& word) {
        Permutation acc = Permutation::identity(n);
        for (int j : word)
            acc = acc * Permutation::transposition(n, j, m);
        return acc;
    };
    std::vector<int> base;
    for (int j = 1; j < m; ++j)
        base.push_back(j);
    base.push_back(1);
    const Permutation target = pi(base);
    int count = 0;
    std::vector<int> order(base.begin(), base.end() - 1);
    std::sort(order.begin(), order.end());
    do {
        std::vector<int> word = order;
        word.push_back(order.front());
        count += (pi(word) * target).is_identity();
    } while (std::next_permutation(order.begin(), order.end()));
    return count;
}

}  // namespace markovlab
