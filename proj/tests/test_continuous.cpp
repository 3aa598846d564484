#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qext/continuous.hpp"

using namespace qext;

TEST_CASE("ax+b pair: report and spot values") {
    SampleReport rep = axb_example_check(2000, 42);
    INFO(rep.worst());
    CHECK(rep.pass);
    CHECK(rep.samples == 2000);

    // (g,s) = (2,1): alpha = 2*1/(1*(2-1)+1) = 1, beta = 2, nabla = 1/2
    auto alpha = [](double g, double s) { return g * s / (s * (g - 1) + 1); };
    auto beta = [](double s, double g) { return s * (g - 1) + 1; };
    CHECK(alpha(2, 1) == doctest::Approx(1.0));
    CHECK(beta(1, 2) == doctest::Approx(2.0));
    CHECK(1.0 / std::fabs(beta(1, 2)) == doctest::Approx(0.5));  // nabla(2,1)
    // unit laws
    CHECK(alpha(1, 0.7) == doctest::Approx(0.7));
    CHECK(beta(0.7, 1) == doctest::Approx(1.0));
}

TEST_CASE("sl2 pair: report and spot values") {
    SampleReport rep = sl2_example_check(2000, 43);
    INFO(rep.worst());
    CHECK(rep.pass);
    CHECK(rep.worst() < 1e-12);

    // (a,b,x) = (1,1,1): alpha = 1/2, beta = (2,1), delta_Mhat = 16
    CHECK(g2_alpha({1, 1}, 1) == doctest::Approx(0.5));
    G1Elem b = g2_beta(1, {1, 1});
    CHECK(b.a == doctest::Approx(2));
    CHECK(b.b == doctest::Approx(1));

    // sign split: a + bx < 0 flips both coordinates
    G1Elem c = g2_beta(-3, {1, 1});
    CHECK(c.a == doctest::Approx(2));
    CHECK(c.b == doctest::Approx(-1));
}

TEST_CASE("functional equation residuals") {
    std::uint64_t rng = 7;
    auto flam = [](double lam) {
        return [lam](double a, double b, double c, double) {
            return lam * b * std::log(c) / (a * c * c);
        };
    };
    auto trivial = [](double (*B)(double, double)) {
        return [B](double a, double b, double c, double d) {
            return B(a, b) / (c * c) + B(c, d) - B(a * c, a * d + b / c);
        };
    };

    std::vector<std::function<double(double, double, double, double)>> sols = {
        flam(1.0), flam(4.0 / M_PI),
        trivial(+[](double a, double b) { return a * b; }),
        trivial(+[](double a, double b) { return a * a + std::sin(b); }),
        trivial(+[](double a, double b) { return std::log(a) * (1 + b * b); })};

    for (int i = 0; i < 1000; ++i) {
        std::array<double, 6> p;
        p[0] = std::exp(uniform(rng, -1, 1));
        p[1] = uniform(rng, -2, 2);
        p[2] = std::exp(uniform(rng, -1, 1));
        p[3] = uniform(rng, -2, 2);
        p[4] = std::exp(uniform(rng, -1, 1));
        p[5] = uniform(rng, -2, 2);
        for (const auto& f : sols) CHECK(star1_residual(f, p) < 1e-12);
    }

    // negative control: a perturbation scales the residual with epsilon
    auto bad = [](double a, double b, double c, double) {
        return b * std::log(c) / (a * c * c) + 1e-3 * b;
    };
    int nonzero = 0;
    for (int i = 0; i < 50; ++i) {
        std::array<double, 6> p = {std::exp(uniform(rng, -1, 1)), uniform(rng, 1, 2),
                                   std::exp(uniform(rng, -1, 1)), uniform(rng, 1, 2),
                                   std::exp(uniform(rng, -1, 1)), uniform(rng, 1, 2)};
        if (star1_residual(bad, p) > 1e-5) ++nonzero;
    }
    CHECK(nonzero > 40);
}

TEST_CASE("flow closed form and composition") {
    std::uint64_t rng = 17;
    for (int i = 0; i < 200; ++i) {
        G1Elem g{std::exp(uniform(rng, -1, 1)), uniform(rng, -2, 2)};
        G1Elem h{std::exp(uniform(rng, -1, 1)), uniform(rng, -2, 2)};
        double r = uniform(rng, -3, 3);
        bool clear = true;
        for (double p : flow_poles(g, h))
            if (std::fabs(r - p) < 1e-2) clear = false;
        if (!clear) continue;
        double direct = flow_value(1.3, r, g, h);
        double closed = flow_closed_form(1.3, r, g, h);
        CHECK(std::fabs(direct - closed) <=
              1e-12 * std::max({1.0, std::fabs(direct), std::fabs(closed)}));
    }
}

TEST_CASE("full-line value matches lambda pi^2 / 2 on the frozen example") {
    double lam = 4.0 / M_PI;
    // (a,b,c,d) = (1,1,1,1): indicator (d/b)(ad+b/c) = 2 > 0, value 2 pi
    double v = pv_line_value(lam, {1, 1}, {1, 1});
    CHECK(v == doctest::Approx(2 * M_PI).epsilon(1e-7));

    // b = 0 kills the integrand
    CHECK(pv_line_value(lam, {1, 0}, {1, 1}) == 0.0);

    // (1,1,1,-1/2): indicator (-1/2)(1/2) < 0, value -2 pi
    double w = pv_line_value(lam, {1, 1}, {1, -0.5});
    CHECK(w == doctest::Approx(-2 * M_PI).epsilon(1e-7));
}

TEST_CASE("pv value bank") {
    SampleReport rep = pv_value_check(30, 11);
    INFO(rep.max_residual.at("pv_value"));
    CHECK(rep.pass);
}

TEST_CASE("quantization bank: 4n/pi passes, lambda = 1 fails") {
    SampleReport rep = quantization_check(8, {-1, 0, 1}, 5);
    INFO(rep.max_residual.at("quantized_n1"));
    INFO(rep.max_residual.at("lambda_one_min"));
    CHECK(rep.pass);
    // the lambda = 1 jump is pi^2/2 away from a multiple of 2 pi
    double expect = 2 * M_PI - M_PI * M_PI / 2;
    CHECK(rep.max_residual.at("lambda_one_min") ==
          doctest::Approx(expect).epsilon(1e-4));
}

TEST_CASE("infinitesimal structure constants") {
    SampleReport rep = infinitesimal_check();
    for (const auto& [k, v] : rep.max_residual) INFO(k, " = ", v);
    CHECK(rep.pass);
}
