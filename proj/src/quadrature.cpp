#include "mbeam/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace mbeam {
namespace {

// 15-point Kronrod extension of 7-point Gauss on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277,
                           0.381830050505119, 0.417959183673469};

struct Estimate {
    double kronrod;
    double error;
};

Estimate gk15(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(mid);
    double kron = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const double fsum = f(mid - dx) + f(mid + dx);
        kron += kWgk[i] * fsum;
        if (i % 2 == 1) gauss += kWg[i / 2] * fsum;
    }
    return {kron * half, std::fabs(kron - gauss) * half};
}

double adaptive(const std::function<double(double)>& f, double a, double b,
                double tol, int depth) {
    const Estimate e = gk15(f, a, b);
    if (e.error <= tol || depth >= 48 ||
        (b - a) <= 4.0e-16 * (std::fabs(a) + std::fabs(b)))
        return e.kronrod;
    const double mid = 0.5 * (a + b);
    return adaptive(f, a, mid, 0.5 * tol, depth + 1) +
           adaptive(f, mid, b, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol) {
    if (a == b) return 0.0;
    if (a > b) return -integrate(f, b, a, abs_tol);
    return adaptive(f, a, b, abs_tol, 0);
}

double integrate_split(const std::function<double(double)>& f, double a, double b,
                       std::span<const double> breakpoints, double abs_tol) {
    if (a == b) return 0.0;
    if (a > b) return -integrate_split(f, b, a, breakpoints, abs_tol);
    std::vector<double> cuts;
    cuts.push_back(a);
    for (double x : breakpoints)
        if (x > a && x < b) cuts.push_back(x);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    const double tol_each = abs_tol / static_cast<double>(cuts.size() - 1);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        total += adaptive(f, cuts[i], cuts[i + 1], tol_each, 0);
    return total;
}

}  // namespace mbeam
