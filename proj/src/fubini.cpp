#include "cfub/fubini.hpp"

#include <json.hpp>

#include <stdexcept>

namespace cfub {

namespace {

const Poly kX{Rational(0), Rational(1)};

std::vector<Poly> c_polys_odd_step(unsigned n) {
    std::vector<Poly> c(n + 1);
    c[0] = Poly::one();
    for (unsigned m = 0; m < n; ++m) {
        Poly acc;
        for (unsigned k = 0; 2 * k <= m; ++k)
            acc += (Rational(1, 4).pow(k) * binomial(m + 1, 2 * k + 1)) * c[m - 2 * k];
        c[m + 1] = kX * acc;
    }
    return c;
}

}  // namespace

std::optional<FubiniRoute> parse_route(const std::string& name) {
    if (name == "definition") return FubiniRoute::definition;
    if (name == "binomial" || name == "binomial_recurrence") return FubiniRoute::binomial_recurrence;
    if (name == "odd_step" || name == "odd_step_recurrence") return FubiniRoute::odd_step_recurrence;
    if (name == "stirling" || name == "stirling_connection") return FubiniRoute::stirling_connection;
    if (name == "second_order") return FubiniRoute::second_order;
    if (name == "determinant") return FubiniRoute::determinant;
    if (name == "egf" || name == "egf_series") return FubiniRoute::egf_series;
    if (name == "parity" || name == "parity_reflection") return FubiniRoute::parity_reflection;
    return std::nullopt;
}

std::string route_name(FubiniRoute r) {
    switch (r) {
        case FubiniRoute::definition: return "definition";
        case FubiniRoute::binomial_recurrence: return "binomial";
        case FubiniRoute::odd_step_recurrence: return "odd_step";
        case FubiniRoute::stirling_connection: return "stirling";
        case FubiniRoute::second_order: return "second_order";
        case FubiniRoute::determinant: return "determinant";
        case FubiniRoute::egf_series: return "egf";
        case FubiniRoute::parity_reflection: return "parity";
    }
    return "?";
}

const std::vector<FubiniRoute>& exact_routes() {
    static const std::vector<FubiniRoute> routes = {
        FubiniRoute::definition,        FubiniRoute::binomial_recurrence,
        FubiniRoute::odd_step_recurrence, FubiniRoute::stirling_connection,
        FubiniRoute::second_order,      FubiniRoute::determinant,
        FubiniRoute::egf_series,
    };
    return routes;
}

Rational delta_zero_power(unsigned m) {
    return Rational(1, 2).pow(m) - Rational(-1, 2).pow(m);
}

Poly c_poly_definition(unsigned n, const TriangleTable& table) {
    if (table.kind() != TriangleKind::central_T)
        throw std::invalid_argument("c_poly_definition: table must hold central T numbers");
    if (table.max_n() < n)
        throw std::invalid_argument("c_poly_definition: table too small for n");
    Poly out;
    for (unsigned k = 0; k <= n; ++k)
        out += Poly::monomial(factorial(k) * table.at(n, k), k);
    return out;
}

Poly c_poly_binomial_recurrence(unsigned n) {
    std::vector<Poly> c(n + 1);
    c[0] = Poly::one();
    for (unsigned m = 1; m <= n; ++m) {
        Poly acc;
        for (unsigned j = 0; j < m; ++j)
            acc += (binomial(m, j) * delta_zero_power(m - j)) * c[j];
        c[m] = kX * acc;
    }
    return c[n];
}

Poly c_poly_odd_step_recurrence(unsigned n) { return c_polys_odd_step(n)[n]; }

Poly c_poly_stirling(unsigned n, const TriangleTable& stirling) {
    if (stirling.kind() != TriangleKind::stirling2)
        throw std::invalid_argument("c_poly_stirling: table must hold Stirling numbers");
    if (stirling.max_n() < n)
        throw std::invalid_argument("c_poly_stirling: table too small for n");
    Poly out;
    for (unsigned k = 0; k <= n; ++k) {
        Rational inner(0);
        Rational half_k(-static_cast<long>(k), 2);
        for (unsigned j = 0; j <= n; ++j)
            inner += binomial(n, j) * half_k.pow(j) * stirling.at(n - j, k);
        out += Poly::monomial(factorial(k) * inner, k);
    }
    return out;
}

Poly c_poly_second_order(unsigned n) {
    if (n == 0) return Poly::one();
    if (n == 1) return kX;
    const Poly a = Rational(2) * (kX * kX);                                   // 2x^2
    const Poly b = Poly{Rational(0), Rational(1, 4), Rational(0), Rational(4)};  // x/4 + 4x^3
    const Poly c2 = Poly{Rational(0), Rational(0), Rational(1, 4), Rational(0), Rational(1)};  // x^2/4 + x^4
    Poly cur = (n % 2 == 0) ? Poly::one() : kX;
    for (unsigned m = (n % 2 == 0) ? 2u : 3u; m <= n; m += 2) {
        Poly d1 = cur.derivative();
        cur = a * cur + b * d1 + c2 * d1.derivative();
    }
    return cur;
}

Poly hessenberg_determinant(unsigned order,
                            const std::function<Poly(unsigned, unsigned)>& entry) {
    if (order == 0) throw std::invalid_argument("hessenberg_determinant: order must be positive");
    // Shape: unit superdiagonal, zeros above it, Toeplitz band R(i-j+1).
    for (unsigned i = 1; i <= order; ++i) {
        for (unsigned j = i + 1; j <= order; ++j) {
            const Poly e = entry(i, j);
            if (j == i + 1) {
                if (e != Poly::one())
                    throw std::invalid_argument("hessenberg_determinant: superdiagonal must be 1");
            } else if (!e.is_zero()) {
                throw std::invalid_argument("hessenberg_determinant: nonzero above superdiagonal");
            }
        }
        for (unsigned j = 1; j <= i; ++j)
            if (entry(i, j) != entry(i - j + 1, 1))
                throw std::invalid_argument("hessenberg_determinant: band is not Toeplitz");
    }
    std::vector<Poly> a(order + 1);
    a[0] = Poly::one();
    for (unsigned m = 1; m <= order; ++m) {
        Poly acc;
        for (unsigned j = 1; j <= m; ++j) {
            Poly term = entry(j, 1) * a[m - j];
            acc += (j % 2 == 1) ? term : -term;
        }
        a[m] = acc;
    }
    return a[order];
}

Poly determinant_band_entry(unsigned j) {
    Rational c = delta_zero_power(j) / factorial(j);
    if (j % 2 == 0) c = -c;
    return Poly::monomial(c, 1);
}

namespace {
Poly c_poly_determinant_with_band(unsigned n, const std::function<Poly(unsigned)>& band) {
    if (n == 0) return Poly::one();  // alpha_0 = 1 convention
    auto entry = [&](unsigned i, unsigned j) -> Poly {
        if (j == i + 1) return Poly::one();
        if (j > i) return Poly();
        return band(i - j + 1);
    };
    return factorial(n) * hessenberg_determinant(n, entry);
}
}  // namespace

Poly c_poly_determinant(unsigned n) {
    return c_poly_determinant_with_band(n, [](unsigned j) { return determinant_band_entry(j); });
}

Poly c_poly_determinant_injected(unsigned n, unsigned inject_j, const Poly& inject_value) {
    return c_poly_determinant_with_band(n, [&](unsigned j) {
        return j == inject_j ? inject_value : determinant_band_entry(j);
    });
}

Poly c_poly_from_egf(unsigned n) {
    Series denom(n + 1);
    denom.set_coeff(0, Poly::one());
    for (unsigned m = 1; m <= n; m += 2)
        denom.set_coeff(m, Poly::monomial(Rational(-2) * Rational(1, 2).pow(m) / factorial(m), 1));
    Series g = series_reciprocal(denom);
    return factorial(n) * g.coeff(n);
}

Poly c_poly(unsigned n, FubiniRoute route) {
    switch (route) {
        case FubiniRoute::definition: return c_poly_definition(n, build_central_T(n));
        case FubiniRoute::binomial_recurrence: return c_poly_binomial_recurrence(n);
        case FubiniRoute::odd_step_recurrence: return c_poly_odd_step_recurrence(n);
        case FubiniRoute::stirling_connection: return c_poly_stirling(n, build_stirling2(n));
        case FubiniRoute::second_order: return c_poly_second_order(n);
        case FubiniRoute::determinant: return c_poly_determinant(n);
        case FubiniRoute::egf_series: return c_poly_from_egf(n);
        case FubiniRoute::parity_reflection: return parity_reflect(n);
    }
    throw std::invalid_argument("c_poly: unknown route");
}

Rational c_number(unsigned n) { return c_poly_odd_step_recurrence(n).eval(Rational(1)); }

Poly umbral_check(unsigned n) {
    // (y+1/2)^n - (y-1/2)^n has y^k coefficient C(n,k) delta[0^(n-k)].
    auto c = c_polys_odd_step(n);
    Poly acc;
    for (unsigned k = 0; k < n; ++k)
        acc += (binomial(n, k) * delta_zero_power(n - k)) * c[k];
    if (n == 0) return Poly();  // both umbral powers collapse to 1
    return kX * acc;
}

std::pair<Poly, Poly> rth_derivative_identity(unsigned n, unsigned r) {
    auto c = c_polys_odd_step(n);
    Poly lhs = c[n];
    for (unsigned i = 0; i < r; ++i) lhs = lhs.derivative();

    Series egf(n + 1);
    for (unsigned m = 0; m <= n; ++m) egf.set_coeff(m, (Rational(1) / factorial(m)) * c[m]);
    Series power = Series::unit(n + 1);
    Poly rhs_raw;
    for (unsigned k = 0; k <= r; ++k) {
        power = series_mul(power, egf);  // egf^(k+1)
        Poly inner = factorial(n) * power.coeff(n);
        Poly term = (binomial(r, k)) * inner;
        rhs_raw += ((r - k) % 2 == 0) ? term : -term;
    }
    Poly rhs = (factorial(r) * rhs_raw).divide_by_power_of_x(r);
    return {lhs, rhs};
}

std::pair<Poly, Poly> derivative_convolution(unsigned n) {
    if (n == 0) throw std::invalid_argument("derivative_convolution: n must be positive");
    auto c = c_polys_odd_step(n);
    Poly lhs = kX * c[n].derivative();
    Poly rhs;
    for (unsigned k = 0; k < n; ++k) rhs += binomial(n, k) * (c[k] * c[n - k]);
    return {lhs, rhs};
}

Poly parity_reflect(unsigned n) {
    Poly p = c_poly_odd_step_recurrence(n).reflect();
    return n % 2 == 0 ? p : -p;
}

std::string poly_to_json(unsigned n, const Poly& p) {
    nlohmann::json j;
    j["n"] = n;
    auto cs = nlohmann::json::array();
    for (int i = 0; i <= p.degree(); ++i) cs.push_back(p.coeff(static_cast<std::size_t>(i)).to_string());
    if (p.is_zero()) cs.push_back("0");
    j["coeffs"] = std::move(cs);
    return j.dump();
}

}  // namespace cfub
