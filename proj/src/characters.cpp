#include "charconj/characters.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "charconj/errors.hpp"

namespace charconj {

std::size_t CharacterEvaluator::VecHash::operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 1099511628211ull;
    }
    return h;
}

Int CharacterEvaluator::character(const Partition& lambda, const Partition& nu) {
    if (lambda.size() != nu.size())
        throw error("SizeMismatch", "|lambda| = " + std::to_string(lambda.size()) + " but |nu| = " +
                                        std::to_string(nu.size()));
    return strip(lambda.parts(), nu.parts(), 0);
}

// Border strips are walked on first-column hook lengths: removing a strip of
// length t means sending one entry b to b-t when b-t is both nonnegative and
// unoccupied; the strip's sign is (-1)^(entries passed over). Parts of nu are
// consumed largest first. The memo key records the shape and the still
// unconsumed parts greater than 1; the number of remaining 1-strips is forced
// by the cell count, so it can stay out of the key and cache hits are shared
// across queries with different fixed-point tails.
Int CharacterEvaluator::strip(std::vector<int> shape, const std::vector<int>& nu, std::size_t idx) {
    if (idx == nu.size()) return 1;  // shape is empty here; sizes always match

    std::vector<int> key = shape;
    key.push_back(-1);
    for (std::size_t j = idx; j < nu.size() && nu[j] > 1; ++j) key.push_back(nu[j]);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int t = nu[idx];
    const int rows = static_cast<int>(shape.size());
    std::vector<int> beta(shape.size());
    for (int i = 0; i < rows; ++i)
        beta[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + (rows - 1 - i);

    Int total = 0;
    for (int i = 0; i < rows; ++i) {
        const int target = beta[static_cast<std::size_t>(i)] - t;
        if (target < 0) continue;
        bool occupied = false;
        int height = 0;
        for (int j = 0; j < rows; ++j) {
            if (j == i) continue;
            const int b = beta[static_cast<std::size_t>(j)];
            if (b == target) {
                occupied = true;
                break;
            }
            if (b > target && b < beta[static_cast<std::size_t>(i)]) ++height;
        }
        if (occupied) continue;

        std::vector<int> nb = beta;
        nb[static_cast<std::size_t>(i)] = target;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<int> next;
        next.reserve(nb.size());
        for (int r = 0; r < rows; ++r) {
            const int part = nb[static_cast<std::size_t>(r)] - (rows - 1 - r);
            if (part > 0) next.push_back(part);
        }
        const Int sub = strip(std::move(next), nu, idx + 1);
        if (height % 2 == 0)
            total += sub;
        else
            total -= sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
}

Int mn_character(const Partition& lambda, const Partition& nu) {
    thread_local CharacterEvaluator evaluator;
    return evaluator.character(lambda, nu);
}

Int f_lambda(const Partition& lambda) {
    const auto& parts = lambda.parts();
    const auto conj = lambda.conjugate().parts();
    Int hooks = 1;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j)
            hooks *= parts[i] + conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - j - 1;
    return factorial(lambda.size()) / hooks;  // exact by the hook length theorem
}

Int syt_count_bruteforce(const Partition& lambda) {
    if (lambda.size() > 12)
        throw error("SizeTooLarge", "brute-force tableau count is guarded to n <= 12");
    const auto& parts = lambda.parts();
    std::vector<int> filled(parts.size(), 0);
    Int count = 0;
    std::function<void(int)> place = [&](int placed) {
        if (placed == lambda.size()) {
            ++count;
            return;
        }
        for (std::size_t r = 0; r < parts.size(); ++r) {
            if (filled[r] >= parts[r]) continue;
            if (r > 0 && filled[r - 1] <= filled[r]) continue;
            ++filled[r];
            place(placed + 1);
            --filled[r];
        }
    };
    place(0);
    return count;
}

Int z_mu(const Partition& nu) {
    Int out = 1;
    int run = 0;
    const auto& parts = nu.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        ++run;
        out *= parts[i];
        if (i + 1 == parts.size() || parts[i + 1] != parts[i]) {
            out *= factorial(run);
            run = 0;
        }
    }
    return out;
}

Rat normalized_character(const Partition& lambda, const Partition& mu) {
    const int n = lambda.size();
    const int k = mu.size();
    if (k > n)
        throw error("KExceedsN", "k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
    std::vector<int> nu_parts = mu.parts();
    nu_parts.insert(nu_parts.end(), static_cast<std::size_t>(n - k), 1);
    const Int chi = mn_character(lambda, Partition(std::move(nu_parts)));
    return Rat(falling_factorial(n, k) * chi) / Rat(f_lambda(lambda));
}

VerificationReport orthogonality_check(int n) {
    if (n > 8) throw error("SizeTooLarge", "orthogonality table is guarded to n <= 8");
    if (n < 0) throw error("BadArgument", "n must be nonnegative");

    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.identity = "orthogonality";
    report.params = {{"n", n}};

    const auto classes = partitions_of(n);
    CharacterEvaluator evaluator;
    std::vector<std::vector<Int>> table(classes.size(), std::vector<Int>(classes.size()));
    for (std::size_t l = 0; l < classes.size(); ++l)
        for (std::size_t c = 0; c < classes.size(); ++c)
            table[l][c] = evaluator.character(classes[l], classes[c]);

    for (std::size_t a = 0; a < classes.size(); ++a) {
        for (std::size_t b = 0; b < classes.size(); ++b) {
            Int sum = 0;
            for (std::size_t l = 0; l < classes.size(); ++l) sum += table[l][a] * table[l][b];
            const Int expected = (a == b) ? z_mu(classes[a]) : Int(0);
            ++report.cases;
            if (sum != expected)
                report.mismatches.push_back({{{"mu", classes[a].to_string()}, {"nu", classes[b].to_string()}},
                                             sum.str(),
                                             expected.str()});
        }
    }

    Int dim_square_sum = 0;
    for (const auto& lambda : classes) {
        const Int f = f_lambda(lambda);
        dim_square_sum += f * f;
    }
    ++report.cases;
    if (dim_square_sum != factorial(n))
        report.mismatches.push_back({{{"identity", "sum of squared dimensions"}, {"n", n}},
                                     dim_square_sum.str(),
                                     factorial(n).str()});

    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace charconj
