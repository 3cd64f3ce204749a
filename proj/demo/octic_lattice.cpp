// SPDX-License-Identifier: Apache-2.0
// Builds the hyperbolic isometry of H^3 over Q(sqrt 6) whose translation length is half the
// log of the octic Salem number, and prints A, C, D with the exact identity checks.
#include <iostream>

#include "salem/cli/app.hpp"

int main() {
    using namespace salem;
    const IntPoly p{Int(1), Int(-4), Int(0), Int(-8), Int(-1), Int(-8), Int(0), Int(-4), Int(1)};
    SalemCertificate c = classify_salem(p);
    Realization R = realize_salem_as_length(c, 6, 3, RealizeMode::HalfLength);
    std::cout << "p(x) = " << p.to_string() << "\n";
    std::cout << "over Q(sqrt 6): " << R.minpoly.to_string() << "\n";
    std::cout << cli::lattice_text(R.lattice);
    if (R.isometry.translation_length)
        std::cout << "translation length " << record::decimal_or_interval(*R.isometry.translation_length, 12) << " = (1/2) log "
                  << record::decimal_or_interval(c.lambda, 12) << "\n";
    return R.lattice.ok() ? 0 : 1;
}
