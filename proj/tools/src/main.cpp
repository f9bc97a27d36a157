#include "comax/cli.hpp"

int main(int argc, char** argv) { return comax::cli::main_entry(argc, argv); }
