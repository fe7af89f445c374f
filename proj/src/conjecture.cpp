#include "charconj/conjecture.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <optional>
#include <thread>

#include "charconj/errors.hpp"
#include "charconj/series.hpp"

namespace charconj {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Flag-pasteable partition text, "2,1".
std::string mu_text(const Partition& mu) {
    std::string out;
    for (std::size_t i = 0; i < mu.parts().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(mu.parts()[i]);
    }
    return out;
}

// Deterministic worker pool; fn(i) must only touch slot i of its output.
template <typename Fn>
void run_cases(std::size_t count, int threads, const Fn& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

void collect(VerificationReport& report, std::vector<std::optional<Mismatch>>& slots) {
    report.cases += static_cast<long long>(slots.size());
    for (auto& slot : slots)
        if (slot) report.mismatches.push_back(std::move(*slot));
}

// All m-rectangle shapes with entries in {1..dim}, q weakly decreasing, in a
// fixed lexicographic order.
std::vector<RectangleUnionShape> shape_grid(int m, int dim) {
    std::vector<std::vector<int>> qs;
    std::vector<int> q(static_cast<std::size_t>(m));
    std::function<void(int, int)> gen_q = [&](int pos, int maxv) {
        if (pos == m) {
            qs.push_back(q);
            return;
        }
        for (int v = 1; v <= maxv; ++v) {
            q[static_cast<std::size_t>(pos)] = v;
            gen_q(pos + 1, v);
        }
    };
    gen_q(0, dim);

    std::vector<RectangleUnionShape> out;
    std::vector<int> p(static_cast<std::size_t>(m), 1);
    while (true) {
        for (const auto& qv : qs) out.emplace_back(p, qv);
        int pos = m - 1;
        while (pos >= 0 && p[static_cast<std::size_t>(pos)] == dim) p[static_cast<std::size_t>(pos--)] = 1;
        if (pos < 0) break;
        ++p[static_cast<std::size_t>(pos)];
    }
    return out;
}

std::vector<Rat> shape_point(const RectangleUnionShape& s) {
    std::vector<Rat> point;
    point.reserve(2 * s.p.size());
    for (int v : s.p) point.emplace_back(v);
    for (int v : s.q) point.emplace_back(v);
    return point;
}

}  // namespace

MultiPoly g_mu(const Partition& mu, int m) {
    const int k = mu.size();
    if (k < 1 || m < 1) throw error("BadArgument", "g_mu needs |mu| >= 1 and m >= 1");
    const Permutation w_mu = canonical_permutation(mu);
    MultiPoly out(m);
    Exponents e(static_cast<std::size_t>(2 * m));
    for (const auto& alpha : enumerate_colored(k, m)) {
        const ColoredPermutation beta = colored_multiply(alpha, w_mu);
        const auto kappa_alpha = kappa_vector(alpha, m);
        const auto kappa_beta = kappa_vector(beta, m);
        for (int i = 0; i < m; ++i) {
            e[static_cast<std::size_t>(i)] = kappa_alpha[static_cast<std::size_t>(i)];
            e[static_cast<std::size_t>(m + i)] = kappa_beta[static_cast<std::size_t>(i)];
        }
        out.add_term(e, 1);
    }
    return out;
}

MultiPoly conjectured_F(const Partition& mu, int m) {
    MultiPoly g = g_mu(mu, m);
    for (int i = 1; i <= m; ++i)
        g = g.substitute(m + i - 1, -MultiPoly::variable_q(m, i));
    return (mu.size() % 2 == 0) ? g : -g;
}

Rat F_numeric(const RectangleUnionShape& s, const Partition& mu) {
    if (s.n() < mu.size())
        throw error("ShapeTooSmall", "shape has n = " + std::to_string(s.n()) + " cells but |mu| = " +
                                         std::to_string(mu.size()));
    return normalized_character(shape_to_partition(s), mu);
}

MultiPoly interpolate_F(const Partition& mu, int m) {
    const int k = mu.size();
    if (k < 1 || m < 1) throw error("BadArgument", "interpolation needs |mu| >= 1 and m >= 1");
    long long cells = 1;
    for (int d = 0; d < 2 * m; ++d) {
        cells *= k + 1;
        if (cells > 100000)
            throw error("GridTooLarge", "grid would need (k+1)^(2m) = " + std::to_string(k + 1) + "^" +
                                            std::to_string(2 * m) + " evaluations");
    }

    // nodes: p_i in {1..k+1}; q_i in {B_i..B_i+k}, B_m = k, B_i = B_{i+1}+k+1
    std::vector<std::vector<int>> nodes(static_cast<std::size_t>(2 * m));
    for (int d = 0; d < m; ++d)
        for (int r = 0; r <= k; ++r) nodes[static_cast<std::size_t>(d)].push_back(1 + r);
    std::vector<int> base(static_cast<std::size_t>(m));
    base[static_cast<std::size_t>(m - 1)] = k;
    for (int i = m - 2; i >= 0; --i)
        base[static_cast<std::size_t>(i)] = base[static_cast<std::size_t>(i + 1)] + k + 1;
    for (int i = 0; i < m; ++i)
        for (int r = 0; r <= k; ++r)
            nodes[static_cast<std::size_t>(m + i)].push_back(base[static_cast<std::size_t>(i)] + r);

    const int dims = 2 * m;
    const int width = k + 1;
    std::vector<Rat> values(static_cast<std::size_t>(cells));
    std::vector<int> digit(static_cast<std::size_t>(dims), 0);
    for (long long idx = 0; idx < cells; ++idx) {
        std::vector<int> p(static_cast<std::size_t>(m)), q(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            p[static_cast<std::size_t>(i)] =
                nodes[static_cast<std::size_t>(i)][static_cast<std::size_t>(digit[static_cast<std::size_t>(i)])];
            q[static_cast<std::size_t>(i)] = nodes[static_cast<std::size_t>(m + i)]
                                                  [static_cast<std::size_t>(digit[static_cast<std::size_t>(m + i)])];
        }
        values[static_cast<std::size_t>(idx)] = F_numeric(RectangleUnionShape(p, q), mu);
        int pos = dims - 1;
        while (pos >= 0 && digit[static_cast<std::size_t>(pos)] == width - 1)
            digit[static_cast<std::size_t>(pos--)] = 0;
        if (pos >= 0) ++digit[static_cast<std::size_t>(pos)];
    }

    // divided differences, one dimension at a time
    long long stride = 1;
    for (int d = 0; d < dims; ++d) {
        const auto& t = nodes[static_cast<std::size_t>(d)];
        for (long long idx = 0; idx < cells; ++idx) {
            if ((idx / stride) % width != 0) continue;  // fiber base
            for (int j = 1; j <= k; ++j)
                for (int r = k; r >= j; --r) {
                    const long long hi = idx + r * stride;
                    const long long lo = hi - stride;
                    values[static_cast<std::size_t>(hi)] =
                        (values[static_cast<std::size_t>(hi)] - values[static_cast<std::size_t>(lo)]) /
                        Rat(t[static_cast<std::size_t>(r)] - t[static_cast<std::size_t>(r - j)]);
                }
        }
        stride *= width;
    }

    // Newton basis polynomials per dimension
    std::vector<std::vector<MultiPoly>> basis(static_cast<std::size_t>(dims));
    for (int d = 0; d < dims; ++d) {
        MultiPoly acc = MultiPoly::constant(m, 1);
        basis[static_cast<std::size_t>(d)].push_back(acc);
        for (int j = 0; j < k; ++j) {
            acc = acc * (MultiPoly::variable(m, d) -
                         MultiPoly::constant(m, nodes[static_cast<std::size_t>(d)][static_cast<std::size_t>(j)]));
            basis[static_cast<std::size_t>(d)].push_back(acc);
        }
    }

    MultiPoly out(m);
    std::fill(digit.begin(), digit.end(), 0);
    for (long long idx = 0; idx < cells; ++idx) {
        const Rat& a = values[static_cast<std::size_t>(idx)];
        if (a != 0) {
            MultiPoly term = MultiPoly::constant(m, a);
            for (int d = 0; d < dims; ++d)
                term = term * basis[static_cast<std::size_t>(d)][static_cast<std::size_t>(digit[static_cast<std::size_t>(d)])];
            out += term;
        }
        int pos = dims - 1;
        while (pos >= 0 && digit[static_cast<std::size_t>(pos)] == width - 1)
            digit[static_cast<std::size_t>(pos--)] = 0;
        if (pos >= 0) ++digit[static_cast<std::size_t>(pos)];
    }
    if (!out.integer_coefficients())
        throw error("NonIntegerCoefficient", "interpolated polynomial has a non-integer coefficient");
    return out;
}

int effective_threads(int requested) {
    if (const char* env = std::getenv("CHARCONJ_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<int>(v);
    }
    return requested < 1 ? 1 : requested;
}

VerificationReport verify_theorem1(int k_max, int dim_max, int threads) {
    const auto start = Clock::now();
    VerificationReport report;
    report.identity = "theorem1";
    report.params = {{"kmax", k_max}, {"dim", dim_max}};

    struct Case {
        const Partition* mu;
        const MultiPoly* poly;
        int p, q;
    };
    std::vector<std::pair<Partition, MultiPoly>> polys;
    for (int k = 1; k <= k_max; ++k)
        for (auto& mu : partitions_of(k)) polys.emplace_back(mu, conjectured_F(mu, 1));

    std::vector<Case> cases;
    for (const auto& [mu, poly] : polys)
        for (int p = 1; p <= dim_max; ++p)
            for (int q = 1; q <= dim_max; ++q)
                if (p * q >= mu.size()) cases.push_back({&mu, &poly, p, q});

    std::vector<std::optional<Mismatch>> slots(cases.size());
    run_cases(cases.size(), threads, [&](std::size_t i) {
        const Case& c = cases[i];
        const Rat lhs = F_numeric(RectangleUnionShape({c.p}, {c.q}), *c.mu);
        const Rat rhs = c.poly->eval({Rat(c.p), Rat(c.q)});
        if (lhs != rhs)
            slots[i] = Mismatch{{{"mu", mu_text(*c.mu)}, {"p", c.p}, {"q", c.q}}, lhs.str(), rhs.str()};
    });
    collect(report, slots);
    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport verify_conjecture(int mu_sizes, int m, int dim_max, int threads) {
    if (m < 2) throw error("BadArgument", "conjecture campaign needs m >= 2; m = 1 is the proved theorem");
    const auto start = Clock::now();
    VerificationReport report;
    report.identity = "conjecture";
    report.params = {{"kmax", mu_sizes}, {"m", m}, {"dim", dim_max}};

    const auto shapes = shape_grid(m, dim_max);
    struct Case {
        const Partition* mu;
        const MultiPoly* poly;
        const RectangleUnionShape* shape;
    };
    std::vector<std::pair<Partition, MultiPoly>> polys;
    for (int k = 1; k <= mu_sizes; ++k)
        for (auto& mu : partitions_of(k)) polys.emplace_back(mu, conjectured_F(mu, m));

    std::vector<Case> cases;
    for (const auto& [mu, poly] : polys)
        for (const auto& shape : shapes)
            if (shape.n() >= mu.size()) cases.push_back({&mu, &poly, &shape});

    std::vector<std::optional<Mismatch>> slots(cases.size());
    run_cases(cases.size(), threads, [&](std::size_t i) {
        const Case& c = cases[i];
        const Rat lhs = F_numeric(*c.shape, *c.mu);
        const Rat rhs = c.poly->eval(shape_point(*c.shape));
        if (lhs != rhs)
            slots[i] = Mismatch{{{"mu", mu_text(*c.mu)}, {"shape", c.shape->to_string()}}, lhs.str(), rhs.str()};
    });
    collect(report, slots);
    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport verify_prop1_specialization(int k_max, int m_max) {
    const auto start = Clock::now();
    VerificationReport report;
    report.identity = "prop1";
    report.params = {{"kmax", k_max}, {"mmax", m_max}};

    for (int m = 1; m <= m_max; ++m) {
        for (int k = 1; k <= k_max; ++k) {
            const Int expected = falling_factorial(k + m - 1, k);
            long long grid = 1;
            for (int d = 0; d < 2 * m; ++d) grid *= k + 1;
            for (const auto& mu : partitions_of(k)) {
                const Rat sum = g_mu(mu, m).coefficient_sum();
                ++report.cases;
                if (sum != Rat(expected))
                    report.mismatches.push_back(
                        {{{"route", "gsum"}, {"mu", mu_text(mu)}, {"m", m}}, sum.str(), expected.str()});
                if (grid <= 300) {
                    // re-check through the interpolated polynomial where the grid is cheap
                    std::vector<Rat> point(static_cast<std::size_t>(2 * m));
                    for (int i = 0; i < m; ++i) {
                        point[static_cast<std::size_t>(i)] = 1;
                        point[static_cast<std::size_t>(m + i)] = -1;
                    }
                    Rat value = interpolate_F(mu, m).eval(point);
                    if (k % 2 != 0) value = -value;
                    ++report.cases;
                    if (value != Rat(expected))
                        report.mismatches.push_back(
                            {{{"route", "interp"}, {"mu", mu_text(mu)}, {"m", m}}, value.str(), expected.str()});
                }
            }
        }
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport verify_reduction(const Partition& mu, int m, int i) {
    if (i < 1 || i >= m) throw error("BadIndex", "merge index must satisfy 1 <= i < m");
    const auto start = Clock::now();
    VerificationReport report;
    report.identity = "reduction";
    report.params = {{"mu", mu_text(mu)}, {"m", m}, {"i", i}};

    const MultiPoly lhs = g_mu(mu, m).substitute(m + i, MultiPoly::variable_q(m, i));

    // images of the (m-1)-variable polynomial inside the m-variable space:
    // p'_i = p_i + p_{i+1}, q'_i = q_i, later variables shift up by one
    std::vector<MultiPoly> images;
    images.reserve(static_cast<std::size_t>(2 * (m - 1)));
    for (int j = 1; j <= m - 1; ++j) {
        if (j < i)
            images.push_back(MultiPoly::variable_p(m, j));
        else if (j == i)
            images.push_back(MultiPoly::variable_p(m, i) + MultiPoly::variable_p(m, i + 1));
        else
            images.push_back(MultiPoly::variable_p(m, j + 1));
    }
    for (int j = 1; j <= m - 1; ++j)
        images.push_back(MultiPoly::variable_q(m, j < i ? j : (j == i ? i : j + 1)));

    const MultiPoly rhs = g_mu(mu, m - 1).compose(m, images);

    ++report.cases;
    if (!(lhs == rhs))
        report.mismatches.push_back(
            {{{"mu", mu_text(mu)}, {"m", m}, {"i", i}}, lhs.to_string(), rhs.to_string()});
    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport verify_reduction_range(int k_max, int m_max) {
    const auto start = Clock::now();
    VerificationReport report;
    report.identity = "reduction";
    report.params = {{"kmax", k_max}, {"mmax", m_max}};
    for (int m = 2; m <= m_max; ++m)
        for (int k = 1; k <= k_max; ++k)
            for (const auto& mu : partitions_of(k))
                for (int i = 1; i < m; ++i) {
                    VerificationReport one = verify_reduction(mu, m, i);
                    report.cases += one.cases;
                    for (auto& mm : one.mismatches) report.mismatches.push_back(std::move(mm));
                }
    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport verify_formula9(int k_max, int m_max, int dim_max, int threads) {
    const auto start = Clock::now();
    VerificationReport report;
    report.identity = "formula9";
    report.params = {{"kmax", k_max}, {"mmax", m_max}, {"dim", dim_max}};

    for (int k = 1; k <= k_max; ++k) {
        const Partition mu({k});
        const MultiPoly lhs = formula9_Fk(k, 1);
        const MultiPoly rhs = conjectured_F(mu, 1);
        ++report.cases;
        if (!(lhs == rhs))
            report.mismatches.push_back({{{"route", "poly"}, {"k", k}, {"m", 1}}, lhs.to_string(), rhs.to_string()});
    }

    for (int m = 2; m <= m_max; ++m) {
        const auto shapes = shape_grid(m, dim_max);
        for (int k = 1; k <= k_max; ++k) {
            const Partition mu({k});
            const MultiPoly fk = formula9_Fk(k, m);
            struct Case {
                const RectangleUnionShape* shape;
            };
            std::vector<Case> cases;
            for (const auto& shape : shapes)
                if (shape.n() >= k) cases.push_back({&shape});
            std::vector<std::optional<Mismatch>> slots(cases.size());
            run_cases(cases.size(), threads, [&](std::size_t i) {
                const RectangleUnionShape& shape = *cases[i].shape;
                const Rat lhs = fk.eval(shape_point(shape));
                const Rat rhs = F_numeric(shape, mu);
                if (lhs != rhs)
                    slots[i] = Mismatch{{{"route", "eval"}, {"k", k}, {"m", m}, {"shape", shape.to_string()}},
                                        lhs.str(),
                                        rhs.str()};
            });
            collect(report, slots);
        }
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport verify_oracles(int n_orth, int n_f) {
    const auto start = Clock::now();
    VerificationReport report;
    report.identity = "oracles";
    report.params = {{"n_orth", n_orth}, {"n_f", n_f}};

    for (int n = 0; n <= n_orth; ++n) {
        VerificationReport orth = orthogonality_check(n);
        report.cases += orth.cases;
        for (auto& mm : orth.mismatches) {
            mm.inputs["check"] = "orthogonality";
            mm.inputs["n"] = n;
            report.mismatches.push_back(std::move(mm));
        }
    }

    for (int n = 0; n <= n_f; ++n) {
        std::vector<int> ones(static_cast<std::size_t>(n), 1);
        const Partition identity_class(ones);
        for (const auto& lambda : partitions_of(n)) {
            const Int hook = f_lambda(lambda);
            const Int brute = syt_count_bruteforce(lambda);
            ++report.cases;
            if (hook != brute)
                report.mismatches.push_back(
                    {{{"check", "f_vs_bruteforce"}, {"lambda", mu_text(lambda)}}, hook.str(), brute.str()});
            const Int strip = mn_character(lambda, identity_class);
            ++report.cases;
            if (strip != hook)
                report.mismatches.push_back(
                    {{{"check", "mn_vs_f"}, {"lambda", mu_text(lambda)}}, strip.str(), hook.str()});
        }
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

}  // namespace charconj
