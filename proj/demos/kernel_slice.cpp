// Tabulates the Riesz kernel N_{beta/2}(x, .) along a line through x,
// together with the I/II/III majorant, to show the diagonal singularity
// and the Gaussian decay. Usage: demo_kernel_slice [beta] [x]

#include <cstdio>
#include <cstdlib>

#include "griesz/bounds.hpp"
#include "griesz/riesz.hpp"

int main(int argc, char** argv) {
    using namespace griesz;
    const double beta = argc > 1 ? std::atof(argv[1]) : 2.0;
    const double xv = argc > 2 ? std::atof(argv[2]) : 0.8;
    const RieszOrder order(beta);
    const Point x{xv};

    std::printf("# beta = %g, x = %g\n", beta, xv);
    std::printf("%10s %16s %16s %10s\n", "y", "N(x,y)", "I+II+III", "|N|/sum");
    for (int i = -30; i <= 30; ++i) {
        const double yv = xv + 0.12 * i + (i == 0 ? 1e-3 : 0.0);
        const Point y{yv};
        const double n = riesz_kernel_eval(order, x, y);
        const double s = decomposition_terms(order, x, y).sum();
        std::printf("%10.4f %16.8e %16.8e %10.6f\n", yv, n, s, std::abs(n) / s);
    }
    return 0;
}
