#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qext/pv.hpp"

namespace qext {

// Numerical verification of the two continuous matched pairs and of the
// quantized cocycle family living on the second one.

struct SampleReport {
    std::string name;
    int samples = 0;
    int rejected = 0;
    std::map<std::string, double> max_residual;  // per identity family
    bool pass = false;
    double tolerance = 0;
    std::vector<std::string> notes;

    double worst() const {
        double w = 0;
        for (const auto& [k, v] : max_residual) w = std::max(w, v);
        return w;
    }
};

// Group R \ {0} acting on itself: alpha_g(s) = g s / (s(g-1)+1),
// beta_s(g) = s(g-1)+1. Verifies the action laws, the self-duality identity,
// the closed modular forms against the general ones, and that the scaling
// data is nontrivial (not of Kac type).
SampleReport axb_example_check(int samples, std::uint64_t seed, double tol = 1e-12);

// Upper-triangular pair: G1 = {(a,b), a>0} with (a,b)(c,d) = (ac, ad+b/c)
// acting on (R,+); includes the sign-split beta and the modular forms
// P = a^2/(a+bx)^2, nabla = 1/(a^2 (a+bx)^2), delta_M = 1, delta_Mhat = (a+bx)^4.
SampleReport sl2_example_check(int samples, std::uint64_t seed, double tol = 1e-12);

// --- the cocycle family on the triangular pair ---

struct G1Elem {
    double a = 1, b = 0;  // a > 0
};

G1Elem g1_mul(const G1Elem& x, const G1Elem& y);
G1Elem g1_inv(const G1Elem& x);
double g2_alpha(const G1Elem& g, double x);   // x / (a(a+bx))
G1Elem g2_beta(double x, const G1Elem& g);    // sign-split

// flow phi_s(g,h) = (beta_{alpha_h(s)}(g), beta_s(h))
std::pair<G1Elem, G1Elem> flow(double s, const G1Elem& g, const G1Elem& h);

double f_lambda(double lam, const G1Elem& g, const G1Elem& h);  // lam b log c/(a c^2)
double flow_value(double lam, double r, const G1Elem& g, const G1Elem& h);
double flow_closed_form(double lam, double r, const G1Elem& g, const G1Elem& h);

// analytic pole locations of r -> flow_closed_form(.., r, g, h)
std::vector<double> flow_poles(const G1Elem& g, const G1Elem& h);

// residual of the four-point functional equation at (a,b,c,d,l,m)
double star1_residual(const std::function<double(double, double, double, double)>& f,
                      const std::array<double, 6>& p);

// principal value over the whole line; the exact value is +- lam pi^2 / 2
// with the sign of (d/b)(ad + b/c)
double pv_line_value(double lam, const G1Elem& g, const G1Elem& h,
                     const PvOptions& opt = {});

// phase A(g,h,s) = PV int_0^s of the flow integrand
double cocycle_phase(double lam, const G1Elem& g, const G1Elem& h, double s,
                     const PvOptions& opt = {});

// | A(g,h,alpha_k(s)) + A(gh,k,s) - A(h,k,s) - A(g,hk,s) |  reduced mod 2 pi
double cocycle_residual_mod_2pi(double lam, const G1Elem& g, const G1Elem& h,
                                const G1Elem& k, double s, const PvOptions& opt = {});

// full-line values on random admissible points plus the quantization bank:
// residual < tol for lam = 4n/pi on pole-crossing samples, and the same bank
// rejects lam = 1.
SampleReport pv_value_check(int samples, std::uint64_t seed, double tol = 1e-6,
                            const PvOptions& opt = {});
SampleReport quantization_check(int bank_size, const std::vector<int>& ns,
                                std::uint64_t seed, double tol = 1e-6,
                                const PvOptions& opt = {});

// finite-difference recovery of the infinitesimal structure constants:
// r(1-r) and (-2x, -x^2) for the two pairs, the mixed-derivative pair (0, lam)
// of the flow integrand, and the commutator coefficient -4n/pi.
SampleReport infinitesimal_check(double tol = 1e-4);

// deterministic uniform double in [lo, hi)
double uniform(std::uint64_t& state, double lo, double hi);

}  // namespace qext
