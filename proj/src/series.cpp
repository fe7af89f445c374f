#include "charconj/series.hpp"

#include "charconj/errors.hpp"

namespace charconj {

XPoly XPoly::x(int m) {
    XPoly out(m);
    out.add(1, MultiPoly::constant(m, 1));
    return out;
}

XPoly XPoly::from_poly(const MultiPoly& c) {
    XPoly out(c.varspace());
    out.add(0, c);
    return out;
}

int XPoly::degree() const {
    if (coeffs_.empty()) throw error("BadArgument", "degree of the zero polynomial");
    return coeffs_.begin()->first;
}

const MultiPoly& XPoly::leading_coefficient() const {
    if (coeffs_.empty()) throw error("BadArgument", "leading coefficient of the zero polynomial");
    return coeffs_.begin()->second;
}

bool XPoly::monic() const {
    return !coeffs_.empty() && leading_coefficient() == MultiPoly::constant(m_, 1);
}

void XPoly::add(int xexp, const MultiPoly& c) {
    if (c.varspace() != m_) throw error("VarspaceMismatch", "coefficient in the wrong varspace");
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(xexp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

MultiPoly XPoly::coefficient(int xexp) const {
    auto it = coeffs_.find(xexp);
    return it == coeffs_.end() ? MultiPoly(m_) : it->second;
}

XPoly XPoly::operator+(const XPoly& rhs) const {
    XPoly out = *this;
    for (const auto& [e, c] : rhs.coeffs_) out.add(e, c);
    return out;
}

XPoly XPoly::operator-(const XPoly& rhs) const {
    XPoly out = *this;
    for (const auto& [e, c] : rhs.coeffs_) out.add(e, -c);
    return out;
}

XPoly XPoly::operator*(const XPoly& rhs) const {
    if (m_ != rhs.m_) throw error("VarspaceMismatch", "multiplying across varspaces");
    XPoly out(m_);
    for (const auto& [ea, ca] : coeffs_)
        for (const auto& [eb, cb] : rhs.coeffs_) out.add(ea + eb, ca * cb);
    return out;
}

void XPoly::subtract_shifted(const MultiPoly& c, int shift, const XPoly& rhs) {
    for (const auto& [e, rc] : rhs.coeffs_) add(e + shift, -(rc * c));
}

void XPoly::drop_below(int min_exp) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->first < min_exp)
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

void SeriesAtInfinity::set(int xexp, const MultiPoly& c) {
    if (xexp < order_) throw error("BadIndex", "coefficient below the truncation order");
    if (c.varspace() != m_) throw error("VarspaceMismatch", "coefficient in the wrong varspace");
    if (c.is_zero()) return;
    coeffs_.insert_or_assign(xexp, c);
}

MultiPoly SeriesAtInfinity::coefficient(int xexp) const {
    if (xexp < order_)
        throw error("TruncationTooShallow", "exponent " + std::to_string(xexp) +
                                                " is below the truncation order " + std::to_string(order_));
    auto it = coeffs_.find(xexp);
    return it == coeffs_.end() ? MultiPoly(m_) : it->second;
}

XPoly linear_falling_factorial(const MultiPoly& shift, int k) {
    if (k < 0) throw error("BadArgument", "falling factorial needs k >= 0");
    if (shift.total_degree() > 1) throw error("BadArgument", "shift must have total degree <= 1");
    const int m = shift.varspace();
    XPoly out(m);
    out.add(0, MultiPoly::constant(m, 1));
    for (int j = 0; j < k; ++j) {
        // multiply by (x - shift - j)
        XPoly factor = XPoly::x(m);
        factor.add(0, -(shift + MultiPoly::constant(m, j)));
        out = out * factor;
    }
    return out;
}

// Long division continued into negative exponents. The denominator is monic,
// so each step kills the remainder's top term exactly; a remainder term at
// exponent t only ever contributes to series exponents <= t - deg(den), which
// bounds how much of the remainder must be kept.
SeriesAtInfinity series_divide(const XPoly& num, const XPoly& den, int order) {
    if (num.varspace() != den.varspace()) throw error("VarspaceMismatch", "num and den varspaces differ");
    if (!den.monic()) throw error("NonMonicDenominator", "series division needs a monic denominator");
    const int deg_den = den.degree();
    SeriesAtInfinity out(num.varspace(), order);
    XPoly remainder = num;
    remainder.drop_below(order + deg_den);
    while (!remainder.is_zero()) {
        const int top = remainder.degree();
        const int e = top - deg_den;
        if (e < order) break;
        const MultiPoly c = remainder.coefficient(top);
        out.set(e, c);
        remainder.subtract_shifted(c, e, den);
        remainder.drop_below(order + deg_den);
    }
    return out;
}

MultiPoly extract_xinv(const SeriesAtInfinity& s) {
    if (s.order() > -1)
        throw error("TruncationTooShallow",
                    "series truncated at order " + std::to_string(s.order()) + ", need <= -1");
    return s.coefficient(-1);
}

MultiPoly formula9_Fk(int k, int m) {
    if (k < 1 || m < 1) throw error("BadArgument", "formula needs k >= 1 and m >= 1");

    XPoly num = linear_falling_factorial(MultiPoly(m), k);  // (x)_k
    XPoly den = XPoly::from_poly(MultiPoly::constant(m, 1));
    for (int i = 1; i <= m; ++i) {
        MultiPoly tail_from_next(m);  // p_{i+1} + ... + p_m
        for (int j = i + 1; j <= m; ++j) tail_from_next += MultiPoly::variable_p(m, j);
        const MultiPoly q_i = MultiPoly::variable_q(m, i);
        num = num * linear_falling_factorial(q_i + MultiPoly::variable_p(m, i) + tail_from_next, k);
        den = den * linear_falling_factorial(q_i + tail_from_next, k);
    }

    const MultiPoly residue = extract_xinv(series_divide(num, den, -1));
    MultiPoly out = residue * Rat(-1, k);
    if (!out.integer_coefficients())
        throw error("NonIntegerCoefficient", "coefficient extraction produced a non-integer; this is a bug");
    return out;
}

}  // namespace charconj
