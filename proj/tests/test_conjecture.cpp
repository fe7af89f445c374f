#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "charconj/conjecture.hpp"
#include "charconj/errors.hpp"
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

Partition P(const std::string& text) { return Partition::parse(text); }

// the six-pair polynomial for mu = (2), m = 2, with q unsigned
MultiPoly six_pair_table() {
    MultiPoly g(2);
    g.add_term({2, 0, 1, 0}, 1);  // p1^2 q1
    g.add_term({1, 1, 0, 1}, 2);  // 2 p1 p2 q2
    g.add_term({0, 2, 0, 1}, 1);  // p2^2 q2
    g.add_term({1, 0, 2, 0}, 1);  // p1 q1^2
    g.add_term({0, 1, 0, 2}, 1);  // p2 q2^2
    return g;
}
}  // namespace

TEST_CASE("pair enumeration polynomial for the two-color transposition") {
    const MultiPoly g = g_mu(P("2"), 2);
    CHECK(g == six_pair_table());
    CHECK(g.to_string() == "p1^2*q1 + 2*p1*p2*q2 + p2^2*q2 + p1*q1^2 + p2*q2^2");
    CHECK(g.coefficient_sum() == 6);
    CHECK(g_mu(P("1"), 1).to_string() == "p1*q1");
    CHECK(g_mu(P("1"), 2).to_string() == "p1*q1 + p2*q2");
    CHECK(g_mu(P("2"), 1).to_string() == "p1^2*q1 + p1*q1^2");
}

TEST_CASE("signed form flips q and applies the parity sign") {
    CHECK(conjectured_F(P("2"), 2).to_string() == "-p1^2*q1 - 2*p1*p2*q2 - p2^2*q2 + p1*q1^2 + p2*q2^2");
    CHECK(conjectured_F(P("2"), 1).to_string() == "-p1^2*q1 + p1*q1^2");
    CHECK(conjectured_F(P("1"), 1).to_string() == "p1*q1");
    CHECK(conjectured_F(P("1"), 3).to_string() == "p1*q1 + p2*q2 + p3*q3");
}

TEST_CASE("structural bounds on the pair polynomial") {
    for (int m = 1; m <= 2; ++m)
        for (int k = 1; k <= 4; ++k)
            for (const auto& mu : partitions_of(k)) {
                const MultiPoly g = g_mu(mu, m);
                CHECK(g.coefficient_sum() == Rat(falling_factorial(k + m - 1, k)));
                CHECK(g.integer_coefficients());
                const int bound = k + mu.length();
                for (const auto& [e, c] : g.terms()) {
                    int deg = 0;
                    for (int v : e) deg += v;
                    CHECK(deg <= bound);
                    CHECK((bound - deg) % 2 == 0);
                    CHECK(c > 0);
                }
            }
}

TEST_CASE("numeric normalized character on shapes") {
    CHECK(F_numeric(RectangleUnionShape::parse("2x3"), P("2")) == 6);
    CHECK(F_numeric(RectangleUnionShape::parse("2x2"), P("2")) == 0);
    CHECK(F_numeric(RectangleUnionShape::parse("1x1"), P("1")) == 1);
    CHECK(F_numeric(RectangleUnionShape::parse("2x2,1x1"), P("1")) == 5);
    CHECK(F_numeric(RectangleUnionShape::parse("1x5"), P("3")) == 60);  // single row: (q)_k
    CHECK(kind_of([] { F_numeric(RectangleUnionShape::parse("1x1"), P("2")); }) == "ShapeTooSmall");

    // equal underlying partitions give equal values, however the shape is sliced
    for (const auto& mu : partitions_of(3))
        CHECK(F_numeric(RectangleUnionShape::parse("2x3"), mu) ==
              F_numeric(RectangleUnionShape::parse("1x3,1x3"), mu));
}

TEST_CASE("rectangle campaign: enumeration matches the character") {
    const VerificationReport report = verify_theorem1(3, 3);
    CHECK(report.pass());
    CHECK(report.cases > 0);
    CHECK(report.identity == "theorem1");

    // byte-identical outcome independent of the worker count
    VerificationReport serial = verify_theorem1(3, 3, 1);
    VerificationReport parallel = verify_theorem1(3, 3, 4);
    serial.elapsed_ms = parallel.elapsed_ms = 0.0;
    CHECK(serial.to_json() == parallel.to_json());
}

TEST_CASE("two-rectangle campaign at desk scale") {
    const VerificationReport report = verify_conjecture(2, 2, 2);
    CHECK(report.pass());
    CHECK(report.cases > 0);
    CHECK(kind_of([] { verify_conjecture(2, 1, 2); }) == "BadArgument");
}

TEST_CASE("coefficient-sum specialization") {
    const VerificationReport report = verify_prop1_specialization(3, 2);
    CHECK(report.pass());
    CHECK(report.cases > 0);
}

TEST_CASE("merging equal widths collapses two rectangles") {
    // q2 := q1 in the six-pair polynomial gives (p1+p2)^2 q1 + (p1+p2) q1^2
    const MultiPoly merged = g_mu(P("2"), 2).substitute(3, MultiPoly::variable_q(2, 1));
    const MultiPoly s = MultiPoly::variable_p(2, 1) + MultiPoly::variable_p(2, 2);
    const MultiPoly q1 = MultiPoly::variable_q(2, 1);
    CHECK(merged == s * s * q1 + s * q1 * q1);

    CHECK(verify_reduction(P("2,1"), 2, 1).pass());
    CHECK(verify_reduction(P("3"), 3, 2).pass());
    CHECK(kind_of([] { verify_reduction(P("2"), 2, 0); }) == "BadIndex");
    CHECK(kind_of([] { verify_reduction(P("2"), 2, 2); }) == "BadIndex");
    const VerificationReport range = verify_reduction_range(3, 3);
    CHECK(range.pass());
    CHECK(range.cases == (1 + 2) * (1 + 2 + 3));  // i-choices per m, times partitions of k <= 3
}

TEST_CASE("coefficient extraction campaign") {
    CHECK(verify_formula9(2, 2, 2).pass());
    CHECK(formula9_Fk(3, 1) == conjectured_F(P("3"), 1));
}

TEST_CASE("oracle campaign") {
    const VerificationReport report = verify_oracles(3, 5);
    CHECK(report.pass());
    CHECK(report.cases > 0);
}

TEST_CASE("interpolation reconstructs the enumeration polynomial") {
    CHECK(interpolate_F(P("1"), 1) == conjectured_F(P("1"), 1));
    CHECK(interpolate_F(P("2"), 1) == conjectured_F(P("2"), 1));
    CHECK(interpolate_F(P("1,1"), 1) == conjectured_F(P("1,1"), 1));
    CHECK(interpolate_F(P("3"), 1) == conjectured_F(P("3"), 1));
    CHECK(interpolate_F(P("2"), 2) == conjectured_F(P("2"), 2));
    CHECK(interpolate_F(P("1,1"), 2) == conjectured_F(P("1,1"), 2));
    CHECK(kind_of([] { interpolate_F(P("3,2,1"), 3); }) == "GridTooLarge");  // 7^6 grid points
}

TEST_CASE("interpolated polynomials have integer coefficients") {
    CHECK(interpolate_F(P("2,1"), 1).integer_coefficients());
    CHECK(interpolate_F(P("2"), 2).integer_coefficients());
}

TEST_CASE("worker count resolution") {
    unsetenv("CHARCONJ_THREADS");
    CHECK(effective_threads(2) == 2);
    CHECK(effective_threads(0) == 1);
    setenv("CHARCONJ_THREADS", "3", 1);
    CHECK(effective_threads(1) == 3);
    setenv("CHARCONJ_THREADS", "abc", 1);
    CHECK(effective_threads(2) == 2);
    setenv("CHARCONJ_THREADS", "0", 1);
    CHECK(effective_threads(2) == 2);
    unsetenv("CHARCONJ_THREADS");
}

TEST_CASE("reports serialize with verbatim mismatches") {
    VerificationReport report;
    report.identity = "demo";
    report.params = {{"kmax", 1}};
    report.cases = 2;
    report.mismatches.push_back({{{"mu", "2"}}, "1", "2"});
    CHECK(!report.pass());
    const nlohmann::json j = report.to_json();
    CHECK(j.at("pass") == false);
    CHECK(j.at("cases") == 2);
    CHECK(j.at("mismatches")[0].at("lhs") == "1");
    CHECK(report.summary().rfind("FAIL demo", 0) == 0);

    VerificationReport ok;
    ok.identity = "demo";
    ok.cases = 1;
    CHECK(ok.pass());
    CHECK(ok.summary().rfind("PASS demo", 0) == 0);
}
