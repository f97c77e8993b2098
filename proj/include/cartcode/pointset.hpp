#ifndef CARTCODE_POINTSET_HPP
#define CARTCODE_POINTSET_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "cartcode/field.hpp"

namespace cartcode {

/// How an axis set S_i is specified.
struct AxisSpec {
    enum class Kind { full_field, mult_group, roots_of_unity, explicit_list };
    Kind kind = Kind::full_field;
    uint32_t n = 0;                   // roots_of_unity: axis = roots of X^{n-1} - 1
    std::vector<Fel> elements;        // explicit_list
};

/*
 * Ordered Cartesian product S_1 x ... x S_m of subsets of F_q. Points are
 * enumerated row-major with the last axis varying fastest; this fixed
 * bijection is what generator-matrix columns follow.
 */
class PointSet {
  public:
    PointSet(FieldPtr field, const std::vector<AxisSpec>& axes);

    const Field& field() const { return *field_; }
    FieldPtr field_ptr() const { return field_; }
    size_t dim() const { return axes_.size(); }                    // m
    size_t axis_size(size_t t) const { return axes_[t].size(); }   // s_t
    const std::vector<Fel>& axis(size_t t) const { return axes_[t]; }
    std::vector<size_t> box_bounds() const;                        // (s_1,...,s_m)
    size_t num_points() const { return n_; }                       // n

    // Coordinates of the point with the given enumeration index.
    std::vector<Fel> point(size_t index) const;

    // Monic vanishing polynomial F_t(X_t) = prod_{a in S_t} (X_t - a),
    // ascending coefficients, size s_t + 1.
    const std::vector<Fel>& vanishing_poly(size_t t) const { return vanishing_[t]; }

    // axis_pow(t, j, k) = (j-th element of S_t)^k, for 0 <= k < s_t.
    Fel axis_pow(size_t t, size_t j, size_t k) const { return pow_[t][j * axes_[t].size() + k]; }

    // Dense coefficients of X_t^k mod F_t (length s_t), for 0 <= k <= 2(s_t-1).
    // Reduced products of two box monomials never need higher powers.
    const std::vector<Fel>& reduction_row(size_t t, size_t k) const { return red_[t][k]; }

  private:
    FieldPtr field_;
    std::vector<std::vector<Fel>> axes_;
    std::vector<std::vector<Fel>> vanishing_;
    std::vector<std::vector<Fel>> pow_;
    std::vector<std::vector<std::vector<Fel>>> red_;
    size_t n_ = 1;
};

using PointSetPtr = std::shared_ptr<const PointSet>;

PointSetPtr build_point_set(FieldPtr field, const std::vector<AxisSpec>& axes);

}  // namespace cartcode

#endif
