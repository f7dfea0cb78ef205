// Writes a bundled fixture document to stdout; used to refresh fixtures/*.json.
#include <iostream>

#include "tnc/cli/cli.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: dump_fixture example1|example2\n";
        return 2;
    }
    try {
        std::cout << tnc::cli::load_fixture(argv[1]).dump(2) << "\n";
    } catch (const tnc::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}
