#include "tzlab/cli.hpp"

int main(int argc, char** argv) { return tzlab::cli::run(argc, argv); }
