#include "lcstat/coefficients.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lcstat {

ExpansionCoefficients expansion_coefficients(double eta) {
    if (!(eta > 0.0) || eta > 1.0) throw std::invalid_argument("expansion_coefficients: eta must be in (0, 1]");
    const double pi = std::numbers::pi;
    const double ln2 = std::numbers::ln2;
    const double e2 = eta * eta, e3 = e2 * eta, e4 = e3 * eta;

    ExpansionCoefficients c{};
    c.alpha11 = e2 / 6 + e3 / 2 + 4 * e4 / 15;
    c.alpha12 = -(2 * e2 / 3) * (5.0 / 32.0);
    c.alpha13 = -(2 * e2 / 3) * (9.0 / 256.0);
    c.alpha21 = 1.0 / 24.0 + eta * (1 + 2 * eta) / 3 + e3 / 4;
    c.alpha22 = -5.0 / 192.0 + 5 * e2 / 12;
    c.alpha31 = e2 * (ln2 / 3 - 1.0 / 3.0);
    c.alpha32 = e2 * (5.0 / 24.0 - 5 * ln2 / 6);

    c.mu11 = 1.0 / 160.0 + 3 * eta / 40;
    c.mu21 = 1.0 / 288.0 + eta / 24;
    c.mu22 = -5.0 / 2304.0;

    c.sqrt_coeff = {pi / 4, -5 * pi / 32, -9 * pi / 256};
    c.inv_sqrt_coeff = {pi / 2, 5 * pi / 8};
    c.arcsin_coeff = {pi * ln2 / 2, (5 * pi / 16) * (3 - 4 * ln2)};

    c.b = {0.0, 1.0, 1.5, 2.5, 35.0 / 8.0};
    return c;
}

}  // namespace lcstat
