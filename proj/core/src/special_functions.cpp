#include "pathmean/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace pathmean {

namespace {

constexpr double kCfTiny = 1e-300;
constexpr double kCfStop = 1e-14;
constexpr int kCfMaxIter = 500;

// Continued fraction for I_x(a,b) (modified Lentz); valid for x < (a+1)/(a+b+2).
double betainc_cf(double a, double b, double x) {
    double c = 1.0;
    double d = 1.0 - (a + b) * x / (a + 1.0);
    if (std::abs(d) < kCfTiny) d = kCfTiny;
    d = 1.0 / d;
    double f = d;
    for (int m = 1; m <= kCfMaxIter; ++m) {
        const double dm = static_cast<double>(m);
        // even step
        double num = dm * (b - dm) * x / ((a + 2.0 * dm - 1.0) * (a + 2.0 * dm));
        d = 1.0 + num * d;
        if (std::abs(d) < kCfTiny) d = kCfTiny;
        d = 1.0 / d;
        c = 1.0 + num / c;
        if (std::abs(c) < kCfTiny) c = kCfTiny;
        f *= c * d;
        // odd step
        num = -(a + dm) * (a + b + dm) * x / ((a + 2.0 * dm) * (a + 2.0 * dm + 1.0));
        d = 1.0 + num * d;
        if (std::abs(d) < kCfTiny) d = kCfTiny;
        d = 1.0 / d;
        c = 1.0 + num / c;
        if (std::abs(c) < kCfTiny) c = kCfTiny;
        const double cd = c * d;
        f *= cd;
        if (std::abs(1.0 - cd) < kCfStop) return f;
    }
    throw std::runtime_error("betainc_reg: continued fraction did not converge");
}

} // namespace

double lbeta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

double betainc_reg(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw std::invalid_argument("betainc_reg: a, b must be positive");
    }
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::invalid_argument("betainc_reg: x must be in [0, 1]");
    }
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double front =
        std::exp(a * std::log(x) + b * std::log1p(-x) - lbeta(a, b)) / a;
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * betainc_cf(a, b, x);
    }
    // symmetry I_x(a,b) = 1 - I_{1-x}(b,a), where the CF converges
    const double front_sym =
        std::exp(b * std::log1p(-x) + a * std::log(x) - lbeta(b, a)) / b;
    return 1.0 - front_sym * betainc_cf(b, a, 1.0 - x);
}

double ball_marginal_cdf(int n, double t) {
    if (t <= -1.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double half_tail = 0.5 * betainc_reg(0.5, 0.5 * (n + 1), t * t);
    return t >= 0.0 ? 0.5 + half_tail : 0.5 - half_tail;
}

} // namespace pathmean
