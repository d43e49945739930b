// Regenerates the displayed-matrix golden files for the lambda-family
// composites, straight from the closed entry pattern: entry (r, c) is
// f_{c-r} evaluated at lambda + (p-r) hbar sigma, with the single
// hbar^2/12 correction in the top right corner at p = 3. The generic
// f_j are quadratic with symbolic mu(j, i) coefficients. This route uses
// substitution only, so the files are an independent check of the matrix
// evaluation path.
#include <fstream>
#include <iostream>

#include "ca/json_io.hpp"

using namespace ca;

static ParamPoly generic_f(int j, const ParamPoly& arg) {
    ParamPoly f;
    for (int i = 0; i <= 2; ++i)
        f += ParamPoly::var(Var::mu(j, i)) * arg.pow(i);
    return f;
}

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "data/golden";
    ParamPoly kappa = ParamPoly::var(Var::hbar()) * ParamPoly::var(Var::sigma());
    ParamPoly lambda = ParamPoly::var(Var::lambda(1));

    for (int p = 0; p <= 3; ++p) {
        std::size_t n = static_cast<std::size_t>(p) + 1;
        PPolyMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = r; c < n; ++c) {
                ParamPoly arg = lambda + kappa * ParamPoly::constant(p - static_cast<long>(r));
                m(r, c) = generic_f(static_cast<int>(c - r), arg);
            }
        if (p == 3) {
            ParamPoly h2 = ParamPoly::var(Var::hbar()).pow(2);
            h2.scale(Rational(1, 12));
            m(0, 3) += h2 * generic_f(1, lambda + kappa * ParamPoly::constant(3));
        }
        Json j{{"p", p}, {"matrix", matrix_to_json(m)}};
        std::string path = dir + "/wtpi_" + std::to_string(p) + ".json";
        std::ofstream out(path);
        out << j.dump(2) << "\n";
        std::cout << "wrote " << path << "\n";
    }
    return 0;
}
