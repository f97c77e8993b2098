#ifndef CARTCODE_MONOMIAL_HPP
#define CARTCODE_MONOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cartcode {

/// Monomial X_1^{i_1} ... X_m^{i_m} as its exponent sequence.
using Monomial = std::vector<uint32_t>;

std::string monomial_to_string(const Monomial& m);

/*
 * (Weighted) degree lexicographic ordering. Ties in (weighted) degree break
 * by the rule that a precedes b when the rightmost non-zero entry of b - a
 * is positive; in two variables this puts X before Y. The plain deglex is
 * the all-weights-one case with the identical tie-break.
 */
class MonomialOrder {
  public:
    static MonomialOrder deglex();
    static MonomialOrder weighted_deglex(std::vector<uint32_t> weights);

    bool weighted() const { return weighted_; }
    const std::vector<uint32_t>& weights() const { return weights_; }

    // <0, 0, >0 for a < b, a == b, a > b. Throws on arity mismatch.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool leq(const Monomial& a, const Monomial& b) const { return compare(a, b) <= 0; }

    uint64_t weighted_degree(const Monomial& a) const;

  private:
    bool weighted_ = false;
    std::vector<uint32_t> weights_;
};

/*
 * The box Delta(s_1,...,s_m) of monomials with i_t < s_t, enumerated in
 * strictly increasing order as N_1 < ... < N_n under a monomial ordering.
 * Ranks are 0-based in code; printed output follows the 1-based convention.
 */
class DeltaSet {
  public:
    DeltaSet(std::vector<size_t> bounds, MonomialOrder order);

    const std::vector<size_t>& bounds() const { return bounds_; }
    size_t dim() const { return bounds_.size(); }
    size_t size() const { return monomials_.size(); }
    const MonomialOrder& order() const { return order_; }
    const Monomial& at(size_t rank) const { return monomials_[rank]; }
    const std::vector<Monomial>& monomials() const { return monomials_; }

    bool contains(const Monomial& m) const;
    size_t rank_of(const Monomial& m) const;  // throws if outside the box

  private:
    std::vector<size_t> bounds_;
    MonomialOrder order_;
    std::vector<Monomial> monomials_;
    std::vector<size_t> rank_;  // flat mixed-radix index -> rank
    size_t flat(const Monomial& m) const;
};

DeltaSet enumerate_delta(std::vector<size_t> bounds, MonomialOrder order);

// D(M) = #{N in the box : M divides N} = prod (s_t - i_t).
uint64_t multiples_in_box(const std::vector<size_t>& bounds, const Monomial& m);
// D_perp(M) = #{N in the box : N divides M} = prod (i_t + 1).
uint64_t divisors_in_box(const std::vector<size_t>& bounds, const Monomial& m);

// Set versions: count box monomials divisible by (dividing) some member of K.
// Inclusion-exclusion over K for #K <= 20, direct box scan beyond.
uint64_t multiples_count(const std::vector<size_t>& bounds, const std::vector<Monomial>& K);
uint64_t divisors_count(const std::vector<size_t>& bounds, const std::vector<Monomial>& K);

/*
 * min over v-element subsets K of `window` of multiples_count (primary) or
 * divisors_count (dual). Exhaustive search in lexicographic subset order with
 * monotone pruning: extending K never decreases the count, so a partial
 * subset at or above the incumbent is cut. The node budget guards runtime;
 * exceeding it throws BudgetExceeded rather than approximating.
 */
uint64_t min_multiples_over_subsets(const std::vector<size_t>& bounds,
                                    const std::vector<Monomial>& window, size_t v,
                                    uint64_t node_budget = 50'000'000);
uint64_t min_divisors_over_subsets(const std::vector<size_t>& bounds,
                                   const std::vector<Monomial>& window, size_t v,
                                   uint64_t node_budget = 50'000'000);

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cartcode

#endif
