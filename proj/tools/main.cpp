#include "dhs/cli.hpp"

int main(int argc, char** argv) { return dhs::run_cli(argc, argv); }
