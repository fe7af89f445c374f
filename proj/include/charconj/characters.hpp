#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "charconj/partition.hpp"
#include "charconj/report.hpp"

namespace charconj {

// Exact irreducible character values of S_n by the Murnaghan-Nakayama rule:
// border strips of the largest remaining cycle length are removed first, with
// sign (-1)^(rows spanned - 1), memoized on (shape, remaining parts).
//
// An evaluator instance is not thread safe; use one per worker. The
// mn_character free function keeps a thread_local instance, so results are
// shared within a thread and workers never contend.
class CharacterEvaluator {
public:
    Int character(const Partition& lambda, const Partition& nu);
    std::size_t cache_size() const noexcept { return memo_.size(); }

private:
    struct VecHash {
        std::size_t operator()(const std::vector<int>& v) const noexcept;
    };

    Int strip(std::vector<int> shape, const std::vector<int>& nu, std::size_t idx);

    std::unordered_map<std::vector<int>, Int, VecHash> memo_;
};

// chi^lambda(nu); requires |lambda| = |nu|.
Int mn_character(const Partition& lambda, const Partition& nu);

// Number of standard Young tableaux of shape lambda, by the hook length product.
Int f_lambda(const Partition& lambda);

// Independent oracle for f_lambda: counts tableaux by backtracking over cell
// insertion orders. Guarded to |lambda| <= 12.
Int syt_count_bruteforce(const Partition& lambda);

// Centralizer order of the class nu: prod_i i^(m_i) * m_i!.
Int z_mu(const Partition& nu);

// (n)_k * chi^lambda(mu,1^(n-k)) / f^lambda as an exact rational. Integrality
// is observed downstream, never assumed here.
Rat normalized_character(const Partition& lambda, const Partition& mu);

// Column orthogonality of the full character table of S_n plus the
// sum-of-squared-dimensions identity. Guarded to n <= 8.
VerificationReport orthogonality_check(int n);

}  // namespace charconj
