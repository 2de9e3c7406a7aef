#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace markovlab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Thrown by verify_interlacing; index is the first position where strict
// alternation a_1 < b_1 < a_2 < ... fails (0-based, in the merged sequence).
class InterlacingError : public Error {
public:
    InterlacingError(const std::string& what, std::size_t index)
        : Error(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class CancellationError : public Error {
public:
    using Error::Error;
};

class DegenerateSpectrum : public Error {
public:
    using Error::Error;
};

class Infeasible : public Error {
public:
    using Error::Error;
};

}  // namespace markovlab
