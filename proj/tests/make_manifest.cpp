// Regenerates the frozen test-set manifest (data/standard_testset.tsv).
#include <fstream>
#include <iostream>

#include "monoclt/verify.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: make_manifest <output-path>\n";
        return 2;
    }
    std::ofstream out(argv[1], std::ios::binary);
    if (!out) {
        std::cerr << "cannot open " << argv[1] << "\n";
        return 1;
    }
    out << monoclt::test_set_manifest();
    return 0;
}
