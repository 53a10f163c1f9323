#include "cfub/series.hpp"

#include <stdexcept>

namespace cfub {

Series::Series(std::size_t order, std::vector<Poly> cs) : coeffs_(std::move(cs)) {
    if (coeffs_.size() != order)
        throw std::invalid_argument("Series: coefficient count must equal order");
}

Series Series::unit(std::size_t order) {
    Series s(order);
    if (order > 0) s.set_coeff(0, Poly::one());
    return s;
}

Series series_mul(const Series& a, const Series& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series_mul: order mismatch");
    Series out(a.order());
    for (std::size_t m = 0; m < a.order(); ++m) {
        Poly acc;
        for (std::size_t i = 0; i <= m; ++i) acc += a.coeff(i) * b.coeff(m - i);
        out.set_coeff(m, std::move(acc));
    }
    return out;
}

Series series_pow(const Series& a, unsigned e) {
    Series out = Series::unit(a.order());
    for (unsigned i = 0; i < e; ++i) out = series_mul(out, a);
    return out;
}

Series series_reciprocal(const Series& a) {
    if (a.order() == 0) return Series(0);
    if (a.coeff(0) != Poly::one())
        throw std::invalid_argument("series_reciprocal: constant term must be 1");
    Series out(a.order());
    out.set_coeff(0, Poly::one());
    for (std::size_t m = 1; m < a.order(); ++m) {
        Poly acc;
        for (std::size_t i = 1; i <= m; ++i) acc += a.coeff(i) * out.coeff(m - i);
        out.set_coeff(m, -acc);
    }
    return out;
}

}  // namespace cfub
