#include <iostream>

#include "imtw/cli.hpp"

int main(int argc, char **argv) { return imtw::cli::run(argc, argv, std::cout, std::cerr); }
