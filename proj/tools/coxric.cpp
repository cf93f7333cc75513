#include <iostream>

#include "coxric/cli.hpp"

int main(int argc, char** argv) { return coxric::run_cli(argc, const_cast<const char* const*>(argv), std::cout, std::cerr); }
