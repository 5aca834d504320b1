#include "ratcheb/cli.hpp"

int main(int argc, char** argv) { return ratcheb::cli_main(argc, argv); }
