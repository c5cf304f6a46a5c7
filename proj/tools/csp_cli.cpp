#include "csp/cli.hpp"

int main(int argc, char** argv) { return csp::cli::run(argc, argv); }
