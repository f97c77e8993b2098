#include "cartcode/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cartcode {

std::string monomial_to_string(const Monomial& m) {
    static const char* names = "XYZWVU";
    std::string s;
    for (size_t t = 0; t < m.size(); ++t) {
        if (m[t] == 0) continue;
        if (m.size() <= 6) s += names[t];
        else s += "X" + std::to_string(t + 1);
        if (m[t] > 1) s += "^" + std::to_string(m[t]);
    }
    return s.empty() ? "1" : s;
}

MonomialOrder MonomialOrder::deglex() { return MonomialOrder{}; }

MonomialOrder MonomialOrder::weighted_deglex(std::vector<uint32_t> weights) {
    for (uint32_t w : weights)
        if (w == 0) throw std::invalid_argument("order weights must be positive");
    MonomialOrder o;
    o.weighted_ = true;
    o.weights_ = std::move(weights);
    return o;
}

uint64_t MonomialOrder::weighted_degree(const Monomial& a) const {
    uint64_t d = 0;
    for (size_t t = 0; t < a.size(); ++t) d += static_cast<uint64_t>(a[t]) * (weighted_ ? weights_[t] : 1);
    return d;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) throw std::invalid_argument("monomial arity mismatch");
    if (weighted_ && weights_.size() != a.size())
        throw std::invalid_argument("order weight count does not match arity");
    uint64_t da = weighted_degree(a), db = weighted_degree(b);
    if (da != db) return da < db ? -1 : 1;
    // rightmost non-zero entry of (b - a) positive  <=>  a < b
    for (size_t t = a.size(); t-- > 0;) {
        if (a[t] != b[t]) return a[t] < b[t] ? -1 : 1;
    }
    return 0;
}

DeltaSet::DeltaSet(std::vector<size_t> bounds, MonomialOrder order)
    : bounds_(std::move(bounds)), order_(std::move(order)) {
    if (bounds_.empty()) throw std::invalid_argument("empty box bounds");
    size_t n = 1;
    for (size_t s : bounds_) {
        if (s < 1) throw std::invalid_argument("box bounds must be >= 1");
        n *= s;
    }
    monomials_.reserve(n);
    Monomial m(bounds_.size(), 0);
    for (size_t i = 0; i < n; ++i) {
        monomials_.push_back(m);
        for (size_t t = bounds_.size(); t-- > 0;) {
            if (++m[t] < bounds_[t]) break;
            m[t] = 0;
        }
    }
    std::sort(monomials_.begin(), monomials_.end(),
              [this](const Monomial& a, const Monomial& b) { return order_.less(a, b); });
    rank_.assign(n, 0);
    for (size_t r = 0; r < n; ++r) rank_[flat(monomials_[r])] = r;
}

size_t DeltaSet::flat(const Monomial& m) const {
    size_t idx = 0;
    for (size_t t = 0; t < bounds_.size(); ++t) idx = idx * bounds_[t] + m[t];
    return idx;
}

bool DeltaSet::contains(const Monomial& m) const {
    if (m.size() != bounds_.size()) return false;
    for (size_t t = 0; t < m.size(); ++t)
        if (m[t] >= bounds_[t]) return false;
    return true;
}

size_t DeltaSet::rank_of(const Monomial& m) const {
    if (!contains(m)) throw std::invalid_argument("monomial outside the box: " + monomial_to_string(m));
    return rank_[flat(m)];
}

DeltaSet enumerate_delta(std::vector<size_t> bounds, MonomialOrder order) {
    return DeltaSet(std::move(bounds), std::move(order));
}

namespace {

void check_in_box(const std::vector<size_t>& bounds, const Monomial& m) {
    if (m.size() != bounds.size()) throw std::invalid_argument("monomial arity mismatch");
    for (size_t t = 0; t < m.size(); ++t)
        if (m[t] >= bounds[t])
            throw std::invalid_argument("monomial outside the box: " + monomial_to_string(m));
}

}  // namespace

uint64_t multiples_in_box(const std::vector<size_t>& bounds, const Monomial& m) {
    check_in_box(bounds, m);
    uint64_t d = 1;
    for (size_t t = 0; t < m.size(); ++t) d *= bounds[t] - m[t];
    return d;
}

uint64_t divisors_in_box(const std::vector<size_t>& bounds, const Monomial& m) {
    check_in_box(bounds, m);
    uint64_t d = 1;
    for (size_t t = 0; t < m.size(); ++t) d *= m[t] + 1;
    return d;
}

namespace {

// Count of box monomials divisible by the lcm of T; the lcm may leave the
// box, in which case no box monomial qualifies.
uint64_t multiples_of_lcm(const std::vector<size_t>& bounds, const std::vector<const Monomial*>& T) {
    uint64_t d = 1;
    for (size_t t = 0; t < bounds.size(); ++t) {
        uint32_t e = 0;
        for (const Monomial* m : T) e = std::max(e, (*m)[t]);
        if (e >= bounds[t]) return 0;
        d *= bounds[t] - e;
    }
    return d;
}

uint64_t divisors_of_gcd(const std::vector<size_t>& bounds, const std::vector<const Monomial*>& T) {
    uint64_t d = 1;
    for (size_t t = 0; t < bounds.size(); ++t) {
        uint32_t e = UINT32_MAX;
        for (const Monomial* m : T) e = std::min(e, (*m)[t]);
        d *= e + 1;
    }
    return d;
}

template <typename TermFn>
uint64_t inclusion_exclusion(const std::vector<size_t>& bounds, const std::vector<Monomial>& K,
                             TermFn term) {
    int64_t total = 0;
    const size_t k = K.size();
    std::vector<const Monomial*> T;
    for (uint32_t mask = 1; mask < (1u << k); ++mask) {
        T.clear();
        for (size_t i = 0; i < k; ++i)
            if (mask & (1u << i)) T.push_back(&K[i]);
        int64_t v = static_cast<int64_t>(term(bounds, T));
        total += (T.size() % 2 == 1) ? v : -v;
    }
    return static_cast<uint64_t>(total);
}

template <typename Pred>
uint64_t box_scan(const std::vector<size_t>& bounds, Pred pred) {
    size_t n = 1;
    for (size_t s : bounds) n *= s;
    Monomial m(bounds.size(), 0);
    uint64_t count = 0;
    for (size_t i = 0; i < n; ++i) {
        if (pred(m)) ++count;
        for (size_t t = bounds.size(); t-- > 0;) {
            if (++m[t] < bounds[t]) break;
            m[t] = 0;
        }
    }
    return count;
}

bool divides(const Monomial& a, const Monomial& b) {  // a | b
    for (size_t t = 0; t < a.size(); ++t)
        if (a[t] > b[t]) return false;
    return true;
}

}  // namespace

uint64_t multiples_count(const std::vector<size_t>& bounds, const std::vector<Monomial>& K) {
    if (K.empty()) throw std::invalid_argument("empty monomial set");
    for (const auto& m : K) check_in_box(bounds, m);
    if (K.size() <= 20) return inclusion_exclusion(bounds, K, multiples_of_lcm);
    return box_scan(bounds, [&](const Monomial& n) {
        return std::any_of(K.begin(), K.end(), [&](const Monomial& m) { return divides(m, n); });
    });
}

uint64_t divisors_count(const std::vector<size_t>& bounds, const std::vector<Monomial>& K) {
    if (K.empty()) throw std::invalid_argument("empty monomial set");
    for (const auto& m : K) check_in_box(bounds, m);
    if (K.size() <= 20) return inclusion_exclusion(bounds, K, divisors_of_gcd);
    return box_scan(bounds, [&](const Monomial& n) {
        return std::any_of(K.begin(), K.end(), [&](const Monomial& m) { return divides(n, m); });
    });
}

namespace {

// Bitmask over the box (flat mixed-radix indexing) of the monomials counted
// for one window element; the subset search unions these.
std::vector<uint64_t> cover_mask(const std::vector<size_t>& bounds, const Monomial& m, bool primary) {
    size_t n = 1;
    for (size_t s : bounds) n *= s;
    std::vector<uint64_t> mask((n + 63) / 64, 0);
    Monomial x(bounds.size(), 0);
    for (size_t i = 0; i < n; ++i) {
        bool in = primary ? divides(m, x) : divides(x, m);
        if (in) mask[i / 64] |= uint64_t(1) << (i % 64);
        for (size_t t = bounds.size(); t-- > 0;) {
            if (++x[t] < bounds[t]) break;
            x[t] = 0;
        }
    }
    return mask;
}

struct SubsetSearch {
    const std::vector<std::vector<uint64_t>>& masks;
    size_t v;
    uint64_t best = UINT64_MAX;
    uint64_t nodes = 0, budget;
    std::vector<uint64_t> current;  // running union

    SubsetSearch(const std::vector<std::vector<uint64_t>>& masks, size_t v, uint64_t budget)
        : masks(masks), v(v), budget(budget), current(masks.empty() ? 0 : masks[0].size(), 0) {}

    static uint64_t popcount(const std::vector<uint64_t>& m) {
        uint64_t c = 0;
        for (uint64_t w : m) c += static_cast<uint64_t>(__builtin_popcountll(w));
        return c;
    }

    void dfs(size_t next, size_t chosen, uint64_t count) {
        if (++nodes > budget)
            throw BudgetExceeded("subset minimization budget exhausted; bound not computed");
        if (count >= best) return;  // union only grows
        if (chosen == v) {
            best = count;
            return;
        }
        size_t remaining = v - chosen;
        for (size_t i = next; i + remaining <= masks.size(); ++i) {
            std::vector<uint64_t> saved = current;
            uint64_t c = 0;
            for (size_t w = 0; w < current.size(); ++w) {
                current[w] |= masks[i][w];
                c += static_cast<uint64_t>(__builtin_popcountll(current[w]));
            }
            dfs(i + 1, chosen + 1, c);
            current = std::move(saved);
        }
    }
};

uint64_t min_over_subsets(const std::vector<size_t>& bounds, const std::vector<Monomial>& window,
                          size_t v, uint64_t budget, bool primary) {
    if (v == 0 || v > window.size())
        throw std::invalid_argument("subset size v out of range");
    for (const auto& m : window) check_in_box(bounds, m);
    std::vector<std::vector<uint64_t>> masks;
    masks.reserve(window.size());
    for (const auto& m : window) masks.push_back(cover_mask(bounds, m, primary));
    SubsetSearch search(masks, v, budget);
    search.dfs(0, 0, 0);
    return search.best;
}

}  // namespace

uint64_t min_multiples_over_subsets(const std::vector<size_t>& bounds,
                                    const std::vector<Monomial>& window, size_t v,
                                    uint64_t node_budget) {
    return min_over_subsets(bounds, window, v, node_budget, true);
}

uint64_t min_divisors_over_subsets(const std::vector<size_t>& bounds,
                                   const std::vector<Monomial>& window, size_t v,
                                   uint64_t node_budget) {
    return min_over_subsets(bounds, window, v, node_budget, false);
}

}  // namespace cartcode
