#ifndef CARTCODE_RING_HPP
#define CARTCODE_RING_HPP

#include <vector>

#include "cartcode/monomial.hpp"
#include "cartcode/pointset.hpp"

namespace cartcode {

/*
 * Element of R = F_q[X_1,...,X_m] / <F_1(X_1),...,F_m(X_m)>, kept fully
 * reduced: the support lies inside the box Delta(s_1,...,s_m). Coefficients
 * are stored densely over the box in mixed-radix layout (last axis fastest).
 */
class RingElement {
  public:
    explicit RingElement(PointSetPtr ps);

    static RingElement zero(PointSetPtr ps) { return RingElement(std::move(ps)); }
    static RingElement constant(PointSetPtr ps, Fel c);
    static RingElement monomial(PointSetPtr ps, const Monomial& m, Fel c = 1);

    const PointSet& points() const { return *ps_; }
    PointSetPtr points_ptr() const { return ps_; }

    Fel coeff(const Monomial& m) const;
    void set_coeff(const Monomial& m, Fel c);
    bool is_zero() const;

    // Support as (monomial, coefficient) pairs, unordered.
    std::vector<std::pair<Monomial, Fel>> terms() const;

    // Leading monomial under the given order; throws on the zero element.
    Monomial leading_monomial(const MonomialOrder& order) const;

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;  // fully reduced product

    bool operator==(const RingElement& o) const { return coeffs_ == o.coeffs_; }

    // Evaluation vector (F(alpha_1),...,F(alpha_n)) in point-enumeration order.
    std::vector<Fel> evaluate() const;

  private:
    PointSetPtr ps_;
    std::vector<Fel> coeffs_;  // size n
    size_t flat(const Monomial& m) const;
    friend RingElement ring_multiply(const RingElement&, const RingElement&);
};

RingElement ring_multiply(const RingElement& a, const RingElement& b);

// ev of a single box monomial, without building a RingElement.
std::vector<Fel> evaluate_monomial(const PointSet& ps, const Monomial& m);

}  // namespace cartcode

#endif
