#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "markovlab/hermitian.hpp"

namespace markovlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr int max_symmetric_degree = 12;

// One-line notation on {0..n-1}; (x * y)(i) = x(y(i)).
class Permutation {
public:
    static Permutation identity(int n);
    static Permutation transposition(int n, int i, int j);  // 1-based points
    static Permutation from_one_line(const std::vector<int>& images);  // 1-based images

    int degree() const { return n_; }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
    bool is_identity() const;
    std::uint64_t key() const;
    static Permutation from_key(int n, std::uint64_t key);

    friend Permutation operator*(const Permutation& x, const Permutation& y);

private:
    int n_ = 0;
    std::array<std::uint8_t, max_symmetric_degree> img_{};
};

using Polynomial = std::vector<BigInt>;  // ascending powers

class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(int n) : n_(n) {}
    static GroupAlgebraElement identity(int n);
    static GroupAlgebraElement of(const Permutation& p, const Rational& c = 1);

    int degree() const { return n_; }
    const std::map<std::uint64_t, Rational>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const Permutation& p) const;

    void add(const Permutation& p, const Rational& c);
    void add(std::uint64_t key, const Rational& c);
    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
    GroupAlgebraElement scaled(const Rational& c) const;

    friend bool operator==(const GroupAlgebraElement& x, const GroupAlgebraElement& y)
    {
        return x.n_ == y.n_ && x.terms_ == y.terms_;
    }

private:
    int n_;
    std::map<std::uint64_t, Rational> terms_;
};

GroupAlgebraElement jm_element(int m, int n);
GroupAlgebraElement algebra_mul(const GroupAlgebraElement& x, const GroupAlgebraElement& y);
GroupAlgebraElement poly_apply(const Polynomial& P, const GroupAlgebraElement& x);
Rational normalized_trace(const GroupAlgebraElement& x);

// V_l = q^{l/2} U_l(x / (2 sqrt q)) and W_k = 2 q^{k/2} T_k(x / (2 sqrt q)),
// both integer polynomials in x for integer q.
Polynomial scaled_cheb_u(int l, long q);
Polynomial scaled_cheb_t(int k, long q);
// P_{l,m} = V_l - V_{l-2} and Q_{k,m} = W_k - W_{k-2}, both with q = m - 1.
Polynomial p_poly(int l, int m);
Polynomial q_poly(int k, int m);

bool verify_jm_path_lemma(int l, int m);

struct TraceTransitionResult {
    double max_residual;  // floating-point right-hand side
    bool exact_match;     // both sides as rationals
};

TraceTransitionResult verify_trace_vs_transition(int k_max, int n);

// Sum of H(u_0,u_1)...H(u_{k-1},u_0) over closed tuples with u_r != u_{r-1},
// u_r != u_{r-2} and u_{k-1} != u_1.
std::complex<double> cyclic_nonbacktracking_sum(const HermitianMatrix& H, int k);

// tr p(H) for an integer polynomial, through dense matrix powers.
std::complex<double> matrix_poly_trace(const HermitianMatrix& H, const Polynomial& P);

struct NonbacktrackingResult {
    double residual;       // Q-combination for k >= 3, closed forms for k = 1, 2
    double tk_k_even;      // T_k form with correction -n(n-3) 1{k even}
    double tk_n_even;      // same with 1{n even}
    double value;          // tr of the k = 1, 2 closed-form polynomial, else tr Q
};

NonbacktrackingResult nonbacktracking_trace_identity(const HermitianMatrix& H, int k);

struct BassResult {
    double residual;          // det(1 - uH + (n-2)u^2), sum N_l u^{l-1}
    double residual_printed;  // det(1 - uH + (n-1)u^2), sum l N_l u^{l-1}
};

BassResult bass_series_check(const HermitianMatrix& H, int D);

// Closed cyclically non-backtracking k-walks on a fixed k-cycle vertex set
// whose edge multiset matches the cycle.
int count_matrix_cycle_alignments(int k);
// Non-backtracking index words of length k over k-1 distinct symbols
// reproducing a fixed product of transpositions.
int count_jm_cycle_alignments(int k);

void require_unimodular_class(const HermitianMatrix& H);

}  // namespace markovlab
