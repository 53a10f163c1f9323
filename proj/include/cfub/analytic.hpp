#pragma once

#include <complex>
#include <string>
#include <vector>

namespace cfub {

struct PoleData {
    std::complex<double> location;
    std::complex<double> residue;
    double modulus = 0.0;
};

struct AsymptoticReport {
    unsigned n = 0;
    double estimate = 0.0;
    double exact = 0.0;   // exact c_n converted to double (inf when out of range)
    double ratio = 0.0;   // exact / estimate, computed in log space
    std::vector<PoleData> poles_used;

    std::string to_json() const;
};

/// G(x;t) = 1/(1 - 2x sinh(t/2)). Throws when |denominator| < 1e-12.
std::complex<double> egf_value(std::complex<double> t, double x);

/// Composite Gauss-Legendre quadrature of
/// (2 n!/pi) Im int_0^pi sin(n theta)/(1 - 2x sinh(e^{i theta}/2)) dtheta.
/// Throws if the denominator comes within 1e-9 of zero at a node.
double integral_representation(unsigned n, double x, unsigned panels);

/// The first `count` (1 or 2) roots of 1 - 2 sinh(t/2) by modulus, found
/// by damped Newton iteration from fixed seeds, with residues 1/D'(t).
std::vector<PoleData> find_dominant_poles(unsigned count);

/// Two-term closed-form asymptotic value for c_n (golden-ratio form),
/// as a plain double; overflows to inf for large n.
double asymptotic_estimate(unsigned n);
/// log of the closed-form estimate, safe for any n.
double asymptotic_estimate_log(unsigned n);

/// Same quantity from the numerically located poles:
/// n! sum_i Re(-res_i * t_i^(-n-1)).
double asymptotic_estimate_from_poles(unsigned n, const std::vector<PoleData>& poles);

std::vector<AsymptoticReport> asymptotic_report(const std::vector<unsigned>& n_values);

}  // namespace cfub
