#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "charconj/numeric.hpp"

namespace charconj {

// Exponent vector of a monomial in (p_1..p_m, q_1..q_m), fixed length 2m.
using Exponents = std::vector<int>;

// Canonical term order used everywhere a polynomial is iterated, rendered or
// compared: total degree descending, then total p-degree descending, then
// lexicographic descending on (p_1..p_m, q_1..q_m).
struct MonomialOrder {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Exact multivariate polynomial over arbitrary-precision rationals. Zero
// coefficients are never stored, so equal polynomials have identical term maps.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rat, MonomialOrder>;

    explicit MultiPoly(int m);

    static MultiPoly constant(int m, const Rat& c);
    static MultiPoly variable(int m, int index);  // 0-based index into (p..,q..)
    static MultiPoly variable_p(int m, int i);    // 1-based i
    static MultiPoly variable_q(int m, int i);    // 1-based i

    int varspace() const noexcept { return m_; }
    int nvars() const noexcept { return 2 * m_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    void add_term(const Exponents& e, const Rat& c);

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly operator+(const MultiPoly& rhs) const;
    MultiPoly operator-(const MultiPoly& rhs) const;
    MultiPoly operator*(const MultiPoly& rhs) const;
    MultiPoly operator*(const Rat& s) const;
    MultiPoly operator-() const;

    Rat eval(const std::vector<Rat>& point) const;

    // var := replacement (same varspace), exact and canonicalized.
    MultiPoly substitute(int var, const MultiPoly& replacement) const;

    // Simultaneous substitution into another varspace: images[v] replaces
    // variable v, one image per source variable, all in the target space.
    MultiPoly compose(int target_m, const std::vector<MultiPoly>& images) const;

    static MultiPoly power(const MultiPoly& base, int e);

    Rat coefficient_sum() const;
    int total_degree() const;  // -1 for the zero polynomial
    bool integer_coefficients() const;

    // Canonical rendering, e.g. "-p1^2*q1 - 2*p1*p2*q2 + p1*q1^2".
    std::string to_string() const;

    // Structured form: {"m": m, "terms": [{"coeff": "...", "exponents": [...]}]}
    // with terms in canonical order and exact string coefficients.
    nlohmann::json to_json() const;
    static MultiPoly from_json(const nlohmann::json& j);

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

private:
    void check_varspace(const MultiPoly& other) const;

    int m_;
    TermMap terms_;
};

}  // namespace charconj
