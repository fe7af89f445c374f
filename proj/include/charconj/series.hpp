#pragma once

#include <functional>
#include <map>
#include <string>

#include "charconj/multipoly.hpp"

namespace charconj {

// Polynomial in the extra variable x with MultiPoly coefficients. Exponents
// may go negative while a series remainder is being consumed.
class XPoly {
public:
    using CoeffMap = std::map<int, MultiPoly, std::greater<int>>;

    explicit XPoly(int m) : m_(m) {}

    static XPoly x(int m);
    static XPoly from_poly(const MultiPoly& c);  // degree 0 in x

    int varspace() const noexcept { return m_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const CoeffMap& coeffs() const noexcept { return coeffs_; }
    int degree() const;  // throws on the zero polynomial
    const MultiPoly& leading_coefficient() const;
    bool monic() const;

    void add(int xexp, const MultiPoly& c);
    MultiPoly coefficient(int xexp) const;

    XPoly operator+(const XPoly& rhs) const;
    XPoly operator-(const XPoly& rhs) const;
    XPoly operator*(const XPoly& rhs) const;

    // this - c * x^shift * rhs
    void subtract_shifted(const MultiPoly& c, int shift, const XPoly& rhs);
    void drop_below(int min_exp);

private:
    int m_;
    CoeffMap coeffs_;
};

// Truncated expansion in descending powers of x; coefficients are retained for
// every exponent >= order and unknown below it.
class SeriesAtInfinity {
public:
    SeriesAtInfinity(int m, int order) : m_(m), order_(order) {}

    int varspace() const noexcept { return m_; }
    int order() const noexcept { return order_; }
    const XPoly::CoeffMap& coefficients() const noexcept { return coeffs_; }

    void set(int xexp, const MultiPoly& c);
    MultiPoly coefficient(int xexp) const;  // zero if absent; throws below order

private:
    int m_;
    int order_;
    XPoly::CoeffMap coeffs_;
};

// prod_{j=0}^{k-1} (x - shift - j), expanded; shift must have total degree <= 1.
XPoly linear_falling_factorial(const MultiPoly& shift, int k);

// Expansion of num/den at x = infinity down to exponent `order`. The
// denominator must be monic in x.
SeriesAtInfinity series_divide(const XPoly& num, const XPoly& den, int order);

// Coefficient of x^-1; requires the series to be expanded at least that deep.
MultiPoly extract_xinv(const SeriesAtInfinity& s);

// The coefficient-extraction formula for F_k on a union of m rectangles:
//   F_k = -(1/k) [x^-1] (x)_k prod_i (x-(q_i+p_i+...+p_m))_k
//                             / prod_i (x-(q_i+p_{i+1}+...+p_m))_k .
// The result is asserted to have integer coefficients.
MultiPoly formula9_Fk(int k, int m);

}  // namespace charconj
