#include "cli.hpp"
int main(int argc, char** argv) { return markovlab::cli::run(argc, argv); }
