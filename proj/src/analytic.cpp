#include "cfub/analytic.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>

#include "cfub/fubini.hpp"

namespace cfub {

namespace {

using cplx = std::complex<double>;

cplx denom(cplx t, double x) { return 1.0 - 2.0 * x * std::sinh(t / 2.0); }
cplx denom_deriv(cplx t) { return -std::cosh(t / 2.0); }

// 4-point Gauss-Legendre rule on [-1, 1].
constexpr double kGlNodes[4] = {-0.8611363115940526, -0.3399810435848563,
                                0.3399810435848563, 0.8611363115940526};
constexpr double kGlWeights[4] = {0.3478548451374538, 0.6521451548625461,
                                  0.6521451548625461, 0.3478548451374538};

double factorial_d(unsigned n) { return std::tgamma(static_cast<double>(n) + 1.0); }

double log_sqrt5() { return 0.5 * std::log(5.0); }

// Re(log(phi)^(-n-1) - (i pi + log(phi-1))^(-n-1)); log(phi-1) = -log(phi).
double golden_ratio_part(unsigned n) {
    const double lnphi = std::log((1.0 + std::sqrt(5.0)) / 2.0);
    double first = std::pow(lnphi, -(static_cast<double>(n) + 1.0));
    cplx z(-lnphi, M_PI);
    cplx term = std::pow(z, -(cplx(static_cast<double>(n)) + 1.0));
    return first - term.real();
}

}  // namespace

std::string AsymptoticReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["exact"] = c_number(n).to_string();
    j["estimate"] = estimate;
    j["ratio"] = ratio;
    return j.dump();
}

std::complex<double> egf_value(std::complex<double> t, double x) {
    cplx d = denom(t, x);
    if (std::abs(d) < 1e-12) throw std::domain_error("egf_value: evaluation at or near a pole");
    return 1.0 / d;
}

double integral_representation(unsigned n, double x, unsigned panels) {
    if (panels == 0) throw std::invalid_argument("integral_representation: panels must be positive");
    const double h = M_PI / panels;
    double sum = 0.0;
    for (unsigned p = 0; p < panels; ++p) {
        const double mid = (p + 0.5) * h;
        for (int q = 0; q < 4; ++q) {
            const double theta = mid + 0.5 * h * kGlNodes[q];
            cplx d = denom(std::exp(cplx(0.0, theta)), x);
            if (std::abs(d) < 1e-9)
                throw std::domain_error("integral_representation: denominator vanishes on path");
            cplx integrand = std::sin(n * theta) / d;
            sum += kGlWeights[q] * 0.5 * h * integrand.imag();
        }
    }
    return 2.0 * factorial_d(n) / M_PI * sum;
}

std::vector<PoleData> find_dominant_poles(unsigned count) {
    if (count < 1 || count > 2)
        throw std::invalid_argument("find_dominant_poles: count must be 1 or 2");
    const cplx seeds[2] = {cplx(1.0, 0.0), cplx(-1.0, 6.0)};
    std::vector<PoleData> poles;
    for (unsigned i = 0; i < count; ++i) {
        cplx t = seeds[i];
        bool converged = false;
        for (int it = 0; it < 200; ++it) {
            cplx d = denom(t, 1.0);
            if (std::abs(d) < 1e-14) { converged = true; break; }
            cplx step = d / denom_deriv(t);
            double scale = 1.0;
            while (scale > 1.0 / 1024.0 && std::abs(denom(t - scale * step, 1.0)) >= std::abs(d))
                scale *= 0.5;
            t -= scale * step;
        }
        if (!converged && std::abs(denom(t, 1.0)) >= 1e-14)
            throw std::runtime_error("find_dominant_poles: Newton iteration did not converge");
        PoleData pd;
        pd.location = t;
        pd.residue = 1.0 / denom_deriv(t);
        pd.modulus = std::abs(t);
        poles.push_back(pd);
    }
    if (poles.size() == 2 && poles[1].modulus < poles[0].modulus)
        std::swap(poles[0], poles[1]);
    return poles;
}

double asymptotic_estimate(unsigned n) {
    return factorial_d(n) / (std::pow(2.0, static_cast<double>(n)) * std::sqrt(5.0)) *
           golden_ratio_part(n);
}

double asymptotic_estimate_log(unsigned n) {
    return std::lgamma(static_cast<double>(n) + 1.0) -
           static_cast<double>(n) * std::log(2.0) - log_sqrt5() +
           std::log(std::fabs(golden_ratio_part(n)));
}

double asymptotic_estimate_from_poles(unsigned n, const std::vector<PoleData>& poles) {
    double sum = 0.0;
    for (const auto& p : poles) {
        cplx term = -p.residue * std::pow(p.location, -(cplx(static_cast<double>(n)) + 1.0));
        sum += term.real();
    }
    return factorial_d(n) * sum;
}

std::vector<AsymptoticReport> asymptotic_report(const std::vector<unsigned>& n_values) {
    std::vector<AsymptoticReport> out;
    auto poles = find_dominant_poles(2);
    for (unsigned n : n_values) {
        AsymptoticReport r;
        r.n = n;
        r.estimate = asymptotic_estimate(n);
        Rational exact = c_number(n);
        r.exact = exact.to_double();
        // Log-space ratio stays finite where the plain doubles overflow.
        r.ratio = std::exp(exact.log_abs() - asymptotic_estimate_log(n));
        r.poles_used = poles;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace cfub
