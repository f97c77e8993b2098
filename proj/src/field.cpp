#include "cartcode/field.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cartcode {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Built-in monic irreducible moduli (ascending coefficients, constant first).
// F_9 uses x^2 + 1 so that the generator alpha satisfies alpha^2 = 2.
const std::map<uint32_t, std::vector<uint32_t>> kBuiltinModuli = {
    {4, {1, 1, 1}},           // x^2 + x + 1 over F_2
    {8, {1, 1, 0, 1}},        // x^3 + x + 1 over F_2
    {9, {1, 0, 1}},           // x^2 + 1 over F_3
    {16, {1, 1, 0, 0, 1}},    // x^4 + x + 1 over F_2
    {25, {1, 1, 1}},          // x^2 + x + 1 over F_5
    {27, {1, 2, 0, 1}},       // x^3 + 2x + 1 over F_3
    {32, {1, 0, 1, 0, 0, 1}}, // x^5 + x^2 + 1 over F_2
};

using Poly = std::vector<uint32_t>;  // dense, ascending, coeffs mod p

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of a mod b over F_p, b non-zero with invertible leading coeff.
Poly poly_mod(Poly a, const Poly& b, uint32_t p) {
    auto inv_mod_p = [p](uint32_t x) {
        uint32_t r = 1, base = x % p, k = p - 2;  // Fermat
        while (k) {
            if (k & 1) r = r * base % p;
            base = base * base % p;
            k >>= 1;
        }
        return r;
    };
    trim(a);
    const uint32_t lead_inv = inv_mod_p(b.back());
    while (a.size() >= b.size()) {
        uint32_t c = a.back() * lead_inv % p;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            uint32_t sub = c * b[i] % p;
            a[shift + i] = (a[shift + i] + p - sub) % p;
        }
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(c), m, p);
}

// Exhaustive irreducibility check: trial division by every monic polynomial
// of degree 1..deg/2 over F_p. Fine for the supported field sizes.
bool is_irreducible(const Poly& f, uint32_t p) {
    size_t deg = f.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    for (size_t d = 1; 2 * d <= deg; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            uint64_t c = code;
            for (size_t i = 0; i < d; ++i) {
                g[i] = static_cast<uint32_t>(c % p);
                c /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

Field::Field(uint32_t p) : Field(p, 1, {}) {}

Field::Field(uint32_t p, uint32_t e, std::vector<uint32_t> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
    if (!is_prime(p_)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p_));
    if (e_ < 1) throw std::invalid_argument("extension degree must be positive");
    uint64_t q = 1;
    for (uint32_t i = 0; i < e_; ++i) {
        q *= p_;
        if (q > (1u << 16)) throw std::invalid_argument("field order exceeds 2^16");
    }
    q_ = static_cast<uint32_t>(q);
    if (e_ == 1) {
        modulus_.clear();
    } else {
        if (modulus_.empty()) {
            auto it = kBuiltinModuli.find(q_);
            if (it == kBuiltinModuli.end())
                throw std::invalid_argument("no built-in modulus for q = " + std::to_string(q_) +
                                            "; supply one explicitly");
            modulus_ = it->second;
        }
        if (modulus_.size() != e_ + 1)
            throw std::invalid_argument("modulus must have degree e");
        for (auto& c : modulus_) c %= p_;
        if (modulus_.back() != 1) throw std::invalid_argument("modulus must be monic");
        if (!is_irreducible(modulus_, p_))
            throw std::invalid_argument("modulus is reducible over F_p");
    }
    init();
}

void Field::init() {
    if (q_ > kTableLimit) return;
    mul_table_.assign(static_cast<size_t>(q_) * q_, 0);
    for (Fel a = 0; a < q_; ++a)
        for (Fel b = a; b < q_; ++b) {
            Fel r = mul_generic(a, b);
            mul_table_[static_cast<size_t>(a) * q_ + b] = r;
            mul_table_[static_cast<size_t>(b) * q_ + a] = r;
        }
    inv_table_.assign(q_, 0);
    for (Fel a = 1; a < q_; ++a) {
        for (Fel b = 1; b < q_; ++b)
            if (mul_table_[static_cast<size_t>(a) * q_ + b] == 1) {
                inv_table_[a] = b;
                break;
            }
        if (inv_table_[a] == 0) throw std::logic_error("element without inverse; modulus not irreducible?");
    }
}

void Field::check(Fel a) const {
    if (!valid(a)) throw std::invalid_argument("field element out of range");
}

std::vector<uint32_t> Field::coeffs(Fel a) const {
    check(a);
    std::vector<uint32_t> c(e_, 0);
    for (uint32_t i = 0; i < e_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

Fel Field::from_coeffs(const std::vector<uint32_t>& c) const {
    if (c.size() > e_) throw std::invalid_argument("coefficient vector too long");
    Fel a = 0;
    for (size_t i = c.size(); i-- > 0;) a = a * p_ + (c[i] % p_);
    return a;
}

Fel Field::add(Fel a, Fel b) const {
    check(a); check(b);
    if (e_ == 1) return (a + b) % p_;
    Fel r = 0, mult = 1;
    for (uint32_t i = 0; i < e_; ++i) {
        r += (a % p_ + b % p_) % p_ * mult;
        a /= p_; b /= p_; mult *= p_;
    }
    return r;
}

Fel Field::neg(Fel a) const {
    check(a);
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    Fel r = 0, mult = 1;
    for (uint32_t i = 0; i < e_; ++i) {
        uint32_t d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * mult;
        a /= p_; mult *= p_;
    }
    return r;
}

Fel Field::sub(Fel a, Fel b) const { return add(a, neg(b)); }

Fel Field::mul_generic(Fel a, Fel b) const {
    if (e_ == 1) return static_cast<uint64_t>(a) * b % p_;
    Poly fa = coeffs(a), fb = coeffs(b);
    trim(fa); trim(fb);
    Poly r = poly_mul_mod(fa, fb, modulus_, p_);
    r.resize(e_, 0);
    return from_coeffs(r);
}

Fel Field::mul(Fel a, Fel b) const {
    check(a); check(b);
    if (!mul_table_.empty()) return mul_table_[static_cast<size_t>(a) * q_ + b];
    return mul_generic(a, b);
}

Fel Field::inv(Fel a) const {
    check(a);
    if (a == 0) throw std::domain_error("division by zero in F_q");
    if (!inv_table_.empty()) return inv_table_[a];
    return pow(a, q_ - 2);
}

Fel Field::div(Fel a, Fel b) const { return mul(a, inv(b)); }

Fel Field::pow(Fel a, uint64_t k) const {
    check(a);
    Fel r = 1;
    while (k) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

std::string Field::to_string(Fel a) const { return std::to_string(a); }

FieldPtr make_field(uint32_t p, uint32_t e, std::vector<uint32_t> modulus) {
    return std::make_shared<const Field>(p, e, std::move(modulus));
}

FieldPtr make_field_q(uint32_t q) {
    for (uint32_t p = 2; p <= q; ++p) {
        if (!is_prime(p)) continue;
        uint32_t e = 0;
        uint64_t t = 1;
        while (t < q) { t *= p; ++e; }
        if (t == q) return make_field(p, e);
    }
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
}

}  // namespace cartcode
