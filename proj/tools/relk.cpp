#include "relk/cli.hpp"

int main(int argc, char** argv) { return relk::run_cli(argc, argv, std::cout, std::cerr); }
