#pragma once

#include "charconj/characters.hpp"
#include "charconj/colored.hpp"
#include "charconj/multipoly.hpp"
#include "charconj/report.hpp"
#include "charconj/shape.hpp"

namespace charconj {

// G_mu(p,q) = sum over colored pairs alpha w_mu = beta of p^kappa(alpha) q^kappa(beta).
// All (k+m-1)_k pairs contribute one monomial; coefficients are positive integers.
MultiPoly g_mu(const Partition& mu, int m);

// (-1)^k G_mu(p,-q), the conjectured polynomial form of the normalized character.
MultiPoly conjectured_F(const Partition& mu, int m);

// The normalized character of the shape's partition on (mu,1^(n-k)).
// Requires n >= k.
Rat F_numeric(const RectangleUnionShape& s, const Partition& mu);

// Reconstructs F_mu as a polynomial by tensor-grid Newton interpolation on
// integer nodes: degree <= k per variable, p_i in {1..k+1}, q_i stratified in
// {B_i..B_i+k} with B_m = k and B_i = B_{i+1}+k+1, which keeps q strictly
// decreasing and n >= k over the whole grid. Guarded on the grid size
// (k+1)^(2m); the result is asserted integer-coefficient.
MultiPoly interpolate_F(const Partition& mu, int m);

// CHARCONJ_THREADS overrides the requested worker count; both clamp to >= 1.
int effective_threads(int requested);

// Campaigns. Every case list is generated in a fixed deterministic order and
// reports merge by case index, so the outcome is independent of the worker
// count. A mismatch is recorded verbatim and never aborts the remaining cases.

// F_numeric vs the k!-pair enumeration on all rectangles p,q <= dim_max with
// pq >= k, for all mu of size <= k_max. Proved; any mismatch is a bug.
VerificationReport verify_theorem1(int k_max, int dim_max, int threads = 1);

// F_numeric vs the (k+m-1)_k-pair enumeration on all m-rectangle shapes with
// entries in {1..dim_max}, q weakly decreasing, n >= k. A mismatch would be a
// counterexample to the conjecture and is reported with full inputs.
VerificationReport verify_conjecture(int mu_sizes, int m, int dim_max, int threads = 1);

// Coefficient sum of g_mu equals (k+m-1)_k; additionally re-checked through
// interpolate_F on the grids small enough to afford it.
VerificationReport verify_prop1_specialization(int k_max, int m_max);

// The q_{i+1} = q_i merge identity for one (mu, m, i), exact polynomial equality.
VerificationReport verify_reduction(const Partition& mu, int m, int i);

// The merge identity for every mu of size <= k_max, m <= m_max, every i.
VerificationReport verify_reduction_range(int k_max, int m_max);

// Coefficient-extraction formula vs enumeration: exact polynomial equality at
// m = 1 for k <= k_max; pointwise agreement with F_numeric on the shape grid
// for m in 2..m_max.
VerificationReport verify_formula9(int k_max, int m_max, int dim_max, int threads = 1);

// Character-table oracles: orthogonality for n <= n_orth (capped at 8),
// f_lambda vs the tableau backtracking count and vs the strip recursion for
// n <= n_f, and sum of squared dimensions = n!.
VerificationReport verify_oracles(int n_orth, int n_f);

}  // namespace charconj
