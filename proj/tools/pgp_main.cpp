#include "pgp/cli.hpp"

int main(int argc, char** argv) { return pgp::cli::run(argc, argv); }
