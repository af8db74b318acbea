#include <iostream>

#include "tautcalc/commands.hpp"

int main(int argc, char** argv) { return tautcalc::run_cli(argc, argv, std::cout, std::cerr); }
