#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charconj/errors.hpp"
#include "charconj/multipoly.hpp"
#include "charconj/series.hpp"

using namespace charconj;

namespace {
template <typename F>
std::string kind_of(F&& f) {
    try {
        f();
    } catch (const error& e) {
        return e.kind();
    }
    return "";
}
}  // namespace

TEST_CASE("monomial order: total degree, then p-degree, then lex") {
    const MonomialOrder less;
    // all of degree 3 in (p1,p2,q1,q2)
    const Exponents a{2, 0, 1, 0};  // p1^2 q1
    const Exponents b{1, 1, 0, 1};  // p1 p2 q2
    const Exponents c{0, 2, 0, 1};  // p2^2 q2
    const Exponents d{1, 0, 2, 0};  // p1 q1^2
    const Exponents e{0, 1, 0, 2};  // p2 q2^2
    CHECK(less(a, b));
    CHECK(less(b, c));
    CHECK(less(c, d));  // p-degree 2 sorts before p-degree 1
    CHECK(less(d, e));
    CHECK(less(Exponents{0, 0, 2, 0}, Exponents{1, 0, 0, 0}));  // q1^2 before p1: higher degree first
    CHECK(!less(a, a));
}

TEST_CASE("polynomial arithmetic and canonicalization") {
    const MultiPoly p1 = MultiPoly::variable_p(1, 1);
    const MultiPoly q1 = MultiPoly::variable_q(1, 1);

    MultiPoly f(1);
    f.add_term({1, 1}, 2);
    f.add_term({1, 1}, -2);
    CHECK(f.is_zero());
    CHECK(f.total_degree() == -1);
    CHECK(f == MultiPoly(1));

    const MultiPoly g = (p1 + q1) * (p1 - q1);
    MultiPoly expected(1);
    expected.add_term({2, 0}, 1);
    expected.add_term({0, 2}, -1);
    CHECK(g == expected);
    CHECK(g.total_degree() == 2);
    CHECK(g.coefficient_sum() == 0);
    CHECK((g - g).is_zero());
    CHECK((-g + g).is_zero());

    CHECK(MultiPoly::power(p1 + MultiPoly::constant(1, 1), 3).coefficient_sum() == 8);
    CHECK(kind_of([&] { MultiPoly::variable_p(1, 1) + MultiPoly::variable_p(2, 1); }) == "VarspaceMismatch");
    CHECK(kind_of([&] {
              MultiPoly h(1);
              h.add_term({1, 0, 0}, 1);
          }) == "LengthMismatch");
}

TEST_CASE("rendering matches the canonical order") {
    CHECK(MultiPoly(1).to_string() == "0");
    CHECK(MultiPoly::constant(1, Rat(-3)).to_string() == "-3");
    CHECK(MultiPoly::constant(2, Rat(5, 2)).to_string() == "5/2");

    const MultiPoly p1 = MultiPoly::variable_p(1, 1);
    const MultiPoly q1 = MultiPoly::variable_q(1, 1);
    CHECK(p1.to_string() == "p1");
    CHECK((-p1).to_string() == "-p1");
    CHECK((p1 * Rat(5, 2)).to_string() == "5/2*p1");
    CHECK((p1 - MultiPoly::constant(1, 3)).to_string() == "p1 - 3");
    CHECK((p1 * q1).to_string() == "p1*q1");
    CHECK((p1 * q1 * q1 - p1 * p1 * q1).to_string() == "-p1^2*q1 + p1*q1^2");
}

TEST_CASE("evaluation at rational points") {
    MultiPoly f(1);  // p1^2 q1
    f.add_term({2, 1}, 1);
    CHECK(f.eval({Rat(1, 2), Rat(4)}) == 1);
    CHECK(f.eval({Rat(3), Rat(-1)}) == -9);
    CHECK(kind_of([&] { f.eval({Rat(1)}); }) == "LengthMismatch");
}

TEST_CASE("substitution and composition") {
    const MultiPoly p1 = MultiPoly::variable_p(1, 1);
    const MultiPoly q1 = MultiPoly::variable_q(1, 1);
    const MultiPoly f = MultiPoly::power(p1 + q1, 2);
    CHECK(f.substitute(1, -q1) == MultiPoly::power(p1 - q1, 2));
    CHECK(f.substitute(1, MultiPoly::constant(1, 0)) == p1 * p1);

    // embed p1*q1 into the two-rectangle space with p1 -> p1+p2, q1 -> q2
    const MultiPoly embedded = (p1 * q1).compose(
        2, {MultiPoly::variable_p(2, 1) + MultiPoly::variable_p(2, 2), MultiPoly::variable_q(2, 2)});
    MultiPoly expected(2);
    expected.add_term({1, 0, 0, 1}, 1);
    expected.add_term({0, 1, 0, 1}, 1);
    CHECK(embedded == expected);

    CHECK(kind_of([&] { f.compose(2, {MultiPoly::variable_p(2, 1)}); }) == "LengthMismatch");
    CHECK(kind_of([&] { f.compose(2, {MultiPoly::variable_p(1, 1), MultiPoly::variable_q(1, 1)}); }) ==
          "VarspaceMismatch");
    CHECK(kind_of([&] { f.substitute(5, p1); }) == "BadIndex");
}

TEST_CASE("integrality flag") {
    MultiPoly f(1);
    f.add_term({1, 0}, Rat(1, 2));
    CHECK(!f.integer_coefficients());
    f.add_term({1, 0}, Rat(1, 2));
    CHECK(f.integer_coefficients());
}

TEST_CASE("JSON round trip is lossless") {
    MultiPoly f(2);
    f.add_term({2, 0, 1, 0}, -1);
    f.add_term({1, 1, 0, 1}, Rat(-7, 3));
    f.add_term({0, 0, 0, 0}, 5);
    const nlohmann::json j = f.to_json();
    CHECK(j.at("m") == 2);
    CHECK(j.at("terms").size() == 3);
    CHECK(j.at("terms")[0].at("coeff") == "-1");
    CHECK(j.at("terms")[0].at("exponents") == nlohmann::json({2, 0, 1, 0}));
    CHECK(MultiPoly::from_json(j) == f);
    CHECK(MultiPoly::from_json(nlohmann::json::parse(j.dump())) == f);
}

TEST_CASE("x-polynomials and falling factorials") {
    const XPoly f = linear_falling_factorial(MultiPoly(1), 3);  // x(x-1)(x-2)
    CHECK(f.degree() == 3);
    CHECK(f.monic());
    CHECK(f.coefficient(2) == MultiPoly::constant(1, -3));
    CHECK(f.coefficient(1) == MultiPoly::constant(1, 2));
    CHECK(f.coefficient(0).is_zero());

    const MultiPoly s = MultiPoly::variable_p(1, 1) + MultiPoly::variable_q(1, 1);
    const XPoly g = linear_falling_factorial(s, 2);  // (x-s)(x-s-1)
    CHECK(g.coefficient(1) == -(s + s + MultiPoly::constant(1, 1)));
    CHECK(g.coefficient(0) == s * s + s);
    CHECK(kind_of([&] { linear_falling_factorial(s * s, 1); }) == "BadArgument");

    const XPoly x = XPoly::x(1);
    const XPoly one = XPoly::from_poly(MultiPoly::constant(1, 1));
    CHECK(((x + one) * (x - one)).coefficient(0) == MultiPoly::constant(1, -1));
    CHECK(((x + one) * (x - one)).coefficient(1).is_zero());
}

TEST_CASE("series division at infinity") {
    const MultiPoly p = MultiPoly::variable_p(1, 1);
    const MultiPoly q = MultiPoly::variable_q(1, 1);

    XPoly num(1);  // x^2 - (p+q) x
    num.add(2, MultiPoly::constant(1, 1));
    num.add(1, -(p + q));
    XPoly den(1);  // x - q
    den.add(1, MultiPoly::constant(1, 1));
    den.add(0, -q);

    const SeriesAtInfinity s = series_divide(num, den, -3);
    CHECK(s.coefficient(1) == MultiPoly::constant(1, 1));
    CHECK(s.coefficient(0) == -p);
    CHECK(s.coefficient(-1) == -(p * q));
    CHECK(s.coefficient(-2) == -(p * q * q));
    CHECK(s.coefficient(-3) == -(p * q * q * q));
    CHECK(extract_xinv(s) == -(p * q));
    CHECK(kind_of([&] { s.coefficient(-4); }) == "TruncationTooShallow");

    XPoly bad = den;
    bad.add(1, MultiPoly::constant(1, 1));  // leading coefficient 2
    CHECK(kind_of([&] { series_divide(num, bad, -1); }) == "NonMonicDenominator");
    CHECK(kind_of([&] { extract_xinv(series_divide(num, den, 0)); }) == "TruncationTooShallow");

    // exact division leaves no tail
    const SeriesAtInfinity quotient = series_divide(den * den, den, -2);
    CHECK(quotient.coefficient(1) == MultiPoly::constant(1, 1));
    CHECK(quotient.coefficient(0) == -q);
    CHECK(quotient.coefficient(-1).is_zero());
    CHECK(quotient.coefficient(-2).is_zero());
}

TEST_CASE("coefficient extraction formula at small sizes") {
    CHECK(formula9_Fk(1, 1).to_string() == "p1*q1");
    CHECK(formula9_Fk(2, 1).to_string() == "-p1^2*q1 + p1*q1^2");
    CHECK(formula9_Fk(1, 2).to_string() == "p1*q1 + p2*q2");
    CHECK(formula9_Fk(1, 3).to_string() == "p1*q1 + p2*q2 + p3*q3");
    for (int k = 1; k <= 4; ++k) CHECK(formula9_Fk(k, 1).integer_coefficients());
    CHECK(kind_of([] { formula9_Fk(0, 1); }) == "BadArgument");
}
