#include "cartcode/pointset.hpp"

#include <set>
#include <stdexcept>

namespace cartcode {

namespace {

std::vector<Fel> resolve_axis(const Field& F, const AxisSpec& spec) {
    switch (spec.kind) {
        case AxisSpec::Kind::full_field: {
            std::vector<Fel> s(F.q());
            for (Fel a = 0; a < F.q(); ++a) s[a] = a;
            return s;
        }
        case AxisSpec::Kind::mult_group: {
            std::vector<Fel> s(F.q() - 1);
            for (Fel a = 1; a < F.q(); ++a) s[a - 1] = a;
            return s;
        }
        case AxisSpec::Kind::roots_of_unity: {
            if (spec.n < 2) throw std::invalid_argument("roots_of_unity needs N >= 2");
            uint32_t ord = spec.n - 1;
            if ((F.q() - 1) % ord != 0)
                throw std::invalid_argument("N-1 = " + std::to_string(ord) + " does not divide q-1");
            std::vector<Fel> s;
            for (Fel a = 1; a < F.q(); ++a)
                if (F.pow(a, ord) == F.one()) s.push_back(a);
            return s;
        }
        case AxisSpec::Kind::explicit_list: {
            std::set<Fel> seen;
            for (Fel a : spec.elements) {
                F.check(a);
                if (!seen.insert(a).second)
                    throw std::invalid_argument("duplicate element in explicit axis set");
            }
            if (spec.elements.empty()) throw std::invalid_argument("empty axis set");
            return spec.elements;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

PointSet::PointSet(FieldPtr field, const std::vector<AxisSpec>& axes) : field_(std::move(field)) {
    if (axes.empty()) throw std::invalid_argument("point set needs at least one axis");
    const Field& F = *field_;
    for (const auto& spec : axes) {
        axes_.push_back(resolve_axis(F, spec));
        n_ *= axes_.back().size();
    }
    // Vanishing polynomials F_t = prod (X_t - a), expanded incrementally.
    for (const auto& s : axes_) {
        std::vector<Fel> f{F.one()};
        for (Fel a : s) {
            std::vector<Fel> g(f.size() + 1, F.zero());
            for (size_t i = 0; i < f.size(); ++i) {
                g[i + 1] = F.add(g[i + 1], f[i]);
                g[i] = F.sub(g[i], F.mul(f[i], a));
            }
            f = std::move(g);
        }
        vanishing_.push_back(std::move(f));
    }
    for (const auto& s : axes_) {
        std::vector<Fel> tab(s.size() * s.size());
        for (size_t j = 0; j < s.size(); ++j) {
            Fel v = F.one();
            for (size_t k = 0; k < s.size(); ++k) {
                tab[j * s.size() + k] = v;
                v = F.mul(v, s[j]);
            }
        }
        pow_.push_back(std::move(tab));
    }
}

std::vector<size_t> PointSet::box_bounds() const {
    std::vector<size_t> b(axes_.size());
    for (size_t t = 0; t < axes_.size(); ++t) b[t] = axes_[t].size();
    return b;
}

std::vector<Fel> PointSet::point(size_t index) const {
    if (index >= n_) throw std::out_of_range("point index");
    std::vector<Fel> pt(axes_.size());
    // last axis fastest
    for (size_t t = axes_.size(); t-- > 0;) {
        pt[t] = axes_[t][index % axes_[t].size()];
        index /= axes_[t].size();
    }
    return pt;
}

PointSetPtr build_point_set(FieldPtr field, const std::vector<AxisSpec>& axes) {
    return std::make_shared<const PointSet>(std::move(field), axes);
}

}  // namespace cartcode
