#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "markovlab/interlacing.hpp"
#include "markovlab/measure.hpp"

namespace markovlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> rows);

    const std::vector<int>& rows() const { return rows_; }
    std::size_t length() const { return rows_.size(); }
    int size() const { return size_; }
    bool empty() const { return rows_.empty(); }

    // Adds a box at the end of row r (r == length() starts a new row).
    void add_box(std::size_t r);

    std::string to_string() const;  // "7,4,4,3,1"; empty partition is ""
    static Partition parse(const std::string& s);

    friend bool operator==(const Partition& x, const Partition& y) { return x.rows_ == y.rows_; }
    friend auto operator<=>(const Partition& x, const Partition& y) { return x.rows_ <=> y.rows_; }

private:
    std::vector<int> rows_;
    int size_ = 0;
};

struct CornerData {
    std::vector<int> outer;  // contents of addable boxes, increasing
    std::vector<int> inner;  // contents of removable boxes, increasing
};

CornerData corners(const Partition& p);

// Row index receiving the box for each outer corner (same order as outer).
std::vector<std::size_t> outer_corner_rows(const Partition& p);

AtomicMeasure transition_measure(const Partition& p);

// Exact weights p_j = prod (a_j - b_i) / prod_{i != j} (a_j - a_i) at integer contents.
std::vector<Rational> transition_weights_exact(const Partition& p);

BigInt dim_hook(const Partition& p);

Partition plancherel_grow(int n, std::uint64_t seed);
std::vector<Partition> plancherel_chain(int n, std::uint64_t seed);

Diagram partition_diagram(const Partition& p);

// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

BigInt factorial(int n);

}  // namespace markovlab
