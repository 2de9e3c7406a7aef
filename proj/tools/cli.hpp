#pragma once

namespace markovlab::cli {

inline constexpr unsigned long long default_seed = 0x5EED;

// Runs the command line; returns 0 iff every requested check passes.
int run(int argc, char** argv);

}  // namespace markovlab::cli
