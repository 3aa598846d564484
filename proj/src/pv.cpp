#include "qext/pv.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qext {

namespace {

double gk(const std::function<double(double)>& f, double a, double b, double tol,
          int depth) {
    if (a == b) return 0.0;
    double err = 0;
    return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, depth,
                                                                         tol, &err);
}

// integral over [a,b] with balls of radius eps removed around each pole
double excised(const std::function<double(double)>& f, double a, double b,
               const std::vector<double>& poles, double eps, const PvOptions& opt) {
    std::vector<double> cuts = {a};
    for (double p : poles) {
        cuts.push_back(p - eps);
        cuts.push_back(p + eps);
    }
    cuts.push_back(b);
    double tol = opt.abs_tol / static_cast<double>(poles.size() + 1);
    double sum = 0;
    for (size_t i = 0; i + 1 < cuts.size(); i += 2)
        sum += gk(f, cuts[i], cuts[i + 1], tol, opt.max_depth);
    return sum;
}

}  // namespace

double pv_integral(const std::function<double(double)>& f, double a, double b,
                   std::vector<double> poles, const PvOptions& opt) {
    if (!(a < b)) {
        if (a == b) return 0.0;
        throw std::invalid_argument("pv_integral: need a < b");
    }
    std::vector<double> inside;
    for (double p : poles) {
        if (p == a || p == b)
            throw std::invalid_argument("pv_integral: pole at an endpoint");
        if (p > a && p < b) inside.push_back(p);
    }
    std::sort(inside.begin(), inside.end());

    if (inside.empty()) return gk(f, a, b, opt.abs_tol, opt.max_depth);

    // excision radius must keep the balls separated and inside [a,b]
    double eps0 = opt.excision0;
    double lo = a;
    for (double p : inside) {
        eps0 = std::min(eps0, (p - lo) / 8.0);
        lo = p;
    }
    eps0 = std::min(eps0, (b - inside.back()) / 8.0);
    if (eps0 <= 0) throw std::invalid_argument("pv_integral: pole at an endpoint");

    // fit I(eps) = I0 + c1 eps + c2 eps log eps on three dyadic radii
    double e[3] = {eps0, eps0 / 2, eps0 / 4};
    double I[3];
    for (int k = 0; k < 3; ++k) I[k] = excised(f, a, b, inside, e[k], opt);

    double m[3][4];
    for (int k = 0; k < 3; ++k) {
        m[k][0] = 1;
        m[k][1] = e[k];
        m[k][2] = e[k] * std::log(e[k]);
        m[k][3] = I[k];
    }
    for (int c = 0; c < 3; ++c) {
        int p = c;
        for (int i = c + 1; i < 3; ++i)
            if (std::fabs(m[i][c]) > std::fabs(m[p][c])) p = i;
        std::swap(m[c], m[p]);
        for (int i = 0; i < 3; ++i) {
            if (i == c) continue;
            double q = m[i][c] / m[c][c];
            for (int j = c; j < 4; ++j) m[i][j] -= q * m[c][j];
        }
    }
    return m[0][3] / m[0][0];
}

double pv_integral_oriented(const std::function<double(double)>& f, double a, double b,
                            std::vector<double> poles, const PvOptions& opt) {
    if (a == b) return 0.0;
    if (a < b) return pv_integral(f, a, b, std::move(poles), opt);
    return -pv_integral(f, b, a, std::move(poles), opt);
}

double pv_integral_line(const std::function<double(double)>& f,
                        std::vector<double> poles, const PvOptions& opt) {
    double r = 4.0;
    for (double p : poles) r = std::max(r, 2.0 * std::fabs(p) + 1.0);

    double middle = pv_integral(f, -r, r, std::move(poles), opt);
    auto tail_pos = [&](double u) { return f(1.0 / u) / (u * u); };
    auto tail_neg = [&](double u) { return f(-1.0 / u) / (u * u); };
    double tp = gk(tail_pos, 0.0, 1.0 / r, opt.abs_tol, opt.max_depth);
    double tn = gk(tail_neg, 0.0, 1.0 / r, opt.abs_tol, opt.max_depth);
    return middle + tp + tn;
}

}  // namespace qext
