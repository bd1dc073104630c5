#include "cosmotope/cli.hpp"

int main(int argc, char** argv) { return cosmo::cli_main(argc, argv); }
