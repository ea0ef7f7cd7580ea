// Derives the five-point scheme, prints its tables, and runs one
// standing-wave simulation with it.

#include <iostream>

#include "wavestencil/wavestencil.hpp"

int main() {
    using namespace wavestencil;

    const LagrangeBasis basis = lagrange_basis(6);
    std::cout << "det(D) = " << to_string(basis.determinant) << "\n";
    for (std::size_t s = 0; s < basis.m; ++s) {
        std::cout << "node (" << basis.nodes[s].q1 << "," << basis.nodes[s].q2 << "):";
        for (const auto& [mu, c] : basis.polynomial(s))
            std::cout << "  " << to_string(c) << " x1^" << mu.a1 << " x2^" << mu.a2;
        std::cout << "\n";
    }

    const SchemeSpec p5 = named_scheme("P5");
    std::cout << '\n' << to_string(p5);
    std::cout << "lambda_max = " << lambda_max(p5) << "\n";

    const SimReport r = run(SimConfig::standing_wave(p5, 20, 20, 0.707, BoundaryCondition::Dirichlet));
    std::cout << "E(20, 20) = " << r.error << "\n";
}
