#pragma once

#include <cstddef>
#include <vector>

#include "diagsum/matrix.hpp"

namespace diagsum {

/// Exact probability mass function of a diagonal-sum model on {0,...,m}.
/// coeffs[k] = P(W = k); coefficients are non-negative and sum to 1.
struct PmfPolynomial {
    std::vector<double> coeffs;

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    double mean() const;
    double variance() const;
};

struct ExactOptions {
    std::size_t cap = 20;          // hard cap on active rows for the 2^m loop
    std::size_t kappa_cap = 7;     // cap for the O(n^6) injection sweep
    bool parallel = true;          // OpenMP over fixed subset blocks
};

/// PMF of sum_{i in active\ones} X_{i,sigma(i)} for a uniform random
/// bijection sigma: active_rows -> active_cols.  Evaluated as the permanent
/// of the matrix of per-entry probability generating polynomials
/// (1-p) + p z (constant 1 for ones_rows) divided by m!, via Ryser's
/// inclusion-exclusion with Gray-code column updates.  Deterministic for any
/// thread count: subsets are split into fixed blocks reduced in index order.
PmfPolynomial pmf_exact(const BernoulliMatrix& m, const IndexSelection& sel,
                        const ExactOptions& opt = {});

/// Single-pass serial Ryser, kept as the reference implementation for the
/// blocked/parallel kernel (tests and the benchmark compare the two).
PmfPolynomial pmf_exact_serial(const BernoulliMatrix& m, const IndexSelection& sel,
                               const ExactOptions& opt = {});

/// PMF of the diagonal sum with 1 or 2 rows excluded from the sum while the
/// permutation stays on the full index set.
PmfPolynomial pmf_leave_out(const BernoulliMatrix& m, std::vector<std::size_t> exclude,
                            const ExactOptions& opt = {});

/// Largest point mass.
double concentration(const PmfPolynomial& pmf);

struct EtaPair {
    double eta1;  // max over single-row leave-outs
    double eta2;  // max over two-row leave-outs
    std::size_t argmax1;
    std::size_t argmax2_j, argmax2_k;
};

/// Maximal one-point concentrations of the leave-one-out and leave-two-out
/// diagonal sums.
EtaPair etas(const BernoulliMatrix& m, const ExactOptions& opt = {});

struct KappaResult {
    double value = 1.0;
    bool trivial_fallback = false;  // true when n exceeded the cap and the
                                    // trivial bound 1 was returned instead
};

/// Maximal one-point concentration over all injection sub-models obtained by
/// deleting one row/column pair (or two of each) and additionally silencing a
/// set B of 1 or 2 of the remaining rows.  The maximum ranges over all free
/// index tuples as well as B (the widest reading).  Requires n >= 5; above
/// opt.kappa_cap the trivial bound 1 is returned with a flag.
KappaResult kappa(const BernoulliMatrix& m, const ExactOptions& opt = {});

/// True iff the generating polynomial sum_k coeffs[k] z^k has only real
/// roots, i.e. the PMF is a convolution of Bernoulli laws.  Decided by the
/// classical real-root count: the Hankel form of the root power sums is
/// positive semidefinite exactly when all distinct roots are real.  The PSD
/// test tolerates the round-off that floating coefficients put on multiple
/// roots, which naive root isolation does not.
bool real_rooted(const PmfPolynomial& pmf);

/// Success probabilities of the Bernoulli factors of a real-rooted PMF,
/// recovered from Newton-polished roots of the generating polynomial.
/// Sorted increasing.  Throws DomainError if the PMF is not real-rooted.
std::vector<double> bernoulli_factors(const PmfPolynomial& pmf);

/// Convolution of independent Bernoulli(p_i) laws; shared by the recovery
/// check and the reference oracles.
PmfPolynomial bernoulli_convolution(const std::vector<double>& probs);

}  // namespace diagsum
