#include "tnc/cli/cli.hpp"

int main(int argc, char** argv) { return tnc::cli::main_entry(argc, argv); }
