#include "charconj/multipoly.hpp"

#include <algorithm>
#include <numeric>

#include "charconj/errors.hpp"

namespace charconj {

bool MonomialOrder::operator()(const Exponents& a, const Exponents& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    const auto half_a = a.begin() + static_cast<std::ptrdiff_t>(a.size() / 2);
    const auto half_b = b.begin() + static_cast<std::ptrdiff_t>(b.size() / 2);
    const int pa = std::accumulate(a.begin(), half_a, 0);
    const int pb = std::accumulate(b.begin(), half_b, 0);
    if (pa != pb) return pa > pb;
    return a > b;
}

MultiPoly::MultiPoly(int m) : m_(m) {
    if (m < 0) throw error("BadArgument", "varspace must be nonnegative");
}

MultiPoly MultiPoly::constant(int m, const Rat& c) {
    MultiPoly out(m);
    out.add_term(Exponents(static_cast<std::size_t>(2 * m), 0), c);
    return out;
}

MultiPoly MultiPoly::variable(int m, int index) {
    if (index < 0 || index >= 2 * m) throw error("BadIndex", "variable index " + std::to_string(index));
    MultiPoly out(m);
    Exponents e(static_cast<std::size_t>(2 * m), 0);
    e[static_cast<std::size_t>(index)] = 1;
    out.add_term(e, 1);
    return out;
}

MultiPoly MultiPoly::variable_p(int m, int i) { return variable(m, i - 1); }
MultiPoly MultiPoly::variable_q(int m, int i) { return variable(m, m + i - 1); }

void MultiPoly::check_varspace(const MultiPoly& other) const {
    if (m_ != other.m_)
        throw error("VarspaceMismatch",
                    "m = " + std::to_string(m_) + " vs m = " + std::to_string(other.m_));
}

void MultiPoly::add_term(const Exponents& e, const Rat& c) {
    if (static_cast<int>(e.size()) != 2 * m_)
        throw error("LengthMismatch", "exponent vector has length " + std::to_string(e.size()) +
                                          ", expected " + std::to_string(2 * m_));
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    check_varspace(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    check_varspace(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
    MultiPoly out = *this;
    out += rhs;
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const {
    MultiPoly out = *this;
    out -= rhs;
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
    check_varspace(rhs);
    MultiPoly out(m_);
    Exponents e(static_cast<std::size_t>(2 * m_));
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::operator*(const Rat& s) const {
    MultiPoly out(m_);
    if (s == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
    return out;
}

MultiPoly MultiPoly::operator-() const { return *this * Rat(-1); }

Rat MultiPoly::eval(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != 2 * m_)
        throw error("LengthMismatch", "evaluation point has length " + std::to_string(point.size()) +
                                          ", expected " + std::to_string(2 * m_));
    // cache point powers up to the highest exponent per variable
    std::vector<std::vector<Rat>> powers(point.size());
    for (std::size_t v = 0; v < point.size(); ++v) powers[v].push_back(1);
    Rat total = 0;
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (std::size_t v = 0; v < point.size(); ++v) {
            auto& pv = powers[v];
            while (static_cast<int>(pv.size()) <= e[v]) pv.push_back(pv.back() * point[v]);
            term *= pv[static_cast<std::size_t>(e[v])];
        }
        total += term;
    }
    return total;
}

MultiPoly MultiPoly::power(const MultiPoly& base, int e) {
    if (e < 0) throw error("BadArgument", "negative power");
    MultiPoly out = constant(base.varspace(), 1);
    for (int j = 0; j < e; ++j) out = out * base;
    return out;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& replacement) const {
    check_varspace(replacement);
    if (var < 0 || var >= 2 * m_) throw error("BadIndex", "variable index " + std::to_string(var));
    MultiPoly out(m_);
    std::vector<MultiPoly> repl_powers = {constant(m_, 1)};
    for (const auto& [e, c] : terms_) {
        const int d = e[static_cast<std::size_t>(var)];
        while (static_cast<int>(repl_powers.size()) <= d)
            repl_powers.push_back(repl_powers.back() * replacement);
        Exponents rest = e;
        rest[static_cast<std::size_t>(var)] = 0;
        MultiPoly term(m_);
        term.add_term(rest, c);
        out += term * repl_powers[static_cast<std::size_t>(d)];
    }
    return out;
}

MultiPoly MultiPoly::compose(int target_m, const std::vector<MultiPoly>& images) const {
    if (static_cast<int>(images.size()) != 2 * m_)
        throw error("LengthMismatch", "need one image per source variable");
    for (const auto& img : images)
        if (img.varspace() != target_m) throw error("VarspaceMismatch", "image not in the target varspace");
    std::vector<std::vector<MultiPoly>> powers(images.size(), {constant(target_m, 1)});
    MultiPoly out(target_m);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = constant(target_m, c);
        for (std::size_t v = 0; v < images.size(); ++v) {
            auto& pv = powers[v];
            while (static_cast<int>(pv.size()) <= e[v]) pv.push_back(pv.back() * images[v]);
            term = term * pv[static_cast<std::size_t>(e[v])];
        }
        out += term;
    }
    return out;
}

Rat MultiPoly::coefficient_sum() const {
    Rat total = 0;
    for (const auto& [e, c] : terms_) total += c;
    return total;
}

int MultiPoly::total_degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_)
        best = std::max(best, std::accumulate(e.begin(), e.end(), 0));
    return best;
}

bool MultiPoly::integer_coefficients() const {
    for (const auto& [e, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

namespace {

std::string render_monomial(const Exponents& e, int m) {
    std::string out;
    for (int v = 0; v < 2 * m; ++v) {
        const int exp = e[static_cast<std::size_t>(v)];
        if (exp == 0) continue;
        if (!out.empty()) out += '*';
        out += (v < m) ? "p" + std::to_string(v + 1) : "q" + std::to_string(v - m + 1);
        if (exp > 1) out += "^" + std::to_string(exp);
    }
    return out;
}

}  // namespace

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        const Rat magnitude = negative ? Rat(-c) : c;
        if (first) {
            if (negative) out += '-';
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        const std::string mono = render_monomial(e, m_);
        if (mono.empty()) {
            out += magnitude.str();
        } else {
            if (magnitude != 1) out += magnitude.str() + "*";
            out += mono;
        }
    }
    return out;
}

nlohmann::json MultiPoly::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : terms_)
        terms.push_back({{"coeff", c.str()}, {"exponents", e}});
    return {{"m", m_}, {"terms", std::move(terms)}};
}

MultiPoly MultiPoly::from_json(const nlohmann::json& j) {
    MultiPoly out(j.at("m").get<int>());
    for (const auto& term : j.at("terms")) {
        const Exponents e = term.at("exponents").get<Exponents>();
        out.add_term(e, Rat(term.at("coeff").get<std::string>()));
    }
    return out;
}

}  // namespace charconj
