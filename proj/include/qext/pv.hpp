#pragma once

#include <functional>
#include <vector>

namespace qext {

struct PvOptions {
    double abs_tol = 1e-10;     // target accuracy per integral
    double excision0 = 1e-4;    // starting excision radius
    int max_depth = 18;         // adaptive Gauss-Kronrod depth
};

// Principal value of the integral of f over [a,b] (a < b) with simple,
// possibly log-weighted, poles at the listed interior points. Symmetric
// excision of radius eps around each pole, with the eps -> 0 limit taken by
// fitting I(eps) = I0 + c1*eps + c2*eps*log(eps) on three dyadic radii.
double pv_integral(const std::function<double(double)>& f, double a, double b,
                   std::vector<double> poles, const PvOptions& opt = {});

// Oriented version: swaps the endpoints and the sign when b < a.
double pv_integral_oriented(const std::function<double(double)>& f, double a,
                            double b, std::vector<double> poles,
                            const PvOptions& opt = {});

// Full-line principal value; tails are transformed by u = 1/r. The integrand
// must decay like log|r|/r^2.
double pv_integral_line(const std::function<double(double)>& f,
                        std::vector<double> poles, const PvOptions& opt = {});

}  // namespace qext
