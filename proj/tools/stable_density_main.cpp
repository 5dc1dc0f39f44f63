#include "stable/cli.hpp"

int main(int argc, char** argv) { return stable::cli::run(argc, argv); }
