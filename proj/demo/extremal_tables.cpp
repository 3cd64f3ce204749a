// SPDX-License-Identifier: Apache-2.0
// Prints b_n and c_n for n <= 20 from the embedded dataset, or from a file given as argv[1].
#include <fstream>
#include <iomanip>
#include <iostream>

#include "salem/cli/record.hpp"

int main(int argc, char** argv) {
    using namespace salem;
    SalemDataset ds;
    if (argc > 1) {
        std::ifstream in(argv[1]);
        if (!in) {
            std::cerr << "cannot open " << argv[1] << "\n";
            return 1;
        }
        ds = load_dataset(in);
    } else {
        ds = embedded_dataset();
    }
    ExtremalTable t = compute_tables(ds, 20, true, true);
    std::cout << "  n  b_n           c_n           c_n witness\n";
    for (std::size_t i = 0; i < t.b.size(); ++i) {
        const BRow& b = t.b[i];
        const CRow& c = t.c[i];
        std::cout << std::setw(3) << b.n << "  " << std::left << std::setw(12)
                  << (b.value ? record::decimal_or_interval(*b.value, 10) : "-") << "  " << std::setw(12)
                  << (c.value ? record::decimal_or_interval(*c.value, 10) : "-") << "  "
                  << (c.witness ? ds.entries[*c.witness].label + ", alpha = " + c.sqrt_witness->alpha.to_string() : "-")
                  << (b.conditional || c.conditional ? "  *" : "") << std::right << "\n";
    }
    std::cout << "* conditional on the dataset being complete in that degree\n";
    return 0;
}
