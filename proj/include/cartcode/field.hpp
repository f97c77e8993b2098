#ifndef CARTCODE_FIELD_HPP
#define CARTCODE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace cartcode {

/// Element of a finite field, encoded as an integer in [0, q).
///
/// The encoding reads the canonical coefficient vector (c_0, ..., c_{e-1})
/// over F_p as the base-p integer c_0 + c_1 p + ... + c_{e-1} p^{e-1}.
using Fel = uint32_t;

/*
 * Exact arithmetic in F_q, q = p^e. Prime fields work for any prime p with
 * q <= 2^16. Extension fields carry an explicit monic irreducible modulus;
 * a built-in table supplies one for q in {4, 8, 9, 16, 25, 27, 32}.
 * Irreducibility is verified exhaustively at construction.
 *
 * For q <= 256 multiplication and inversion are table-driven; beyond that
 * the polynomial arithmetic runs directly on coefficient vectors.
 */
class Field {
  public:
    // Prime field F_p.
    explicit Field(uint32_t p);
    // Extension field F_{p^e}. `modulus` holds the coefficients of a monic
    // irreducible degree-e polynomial over F_p in ascending order (size e+1);
    // pass an empty vector to use the built-in table (q <= 32 only).
    Field(uint32_t p, uint32_t e, std::vector<uint32_t> modulus = {});

    uint32_t p() const { return p_; }
    uint32_t e() const { return e_; }
    uint32_t q() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    Fel zero() const { return 0; }
    Fel one() const { return 1; }

    Fel add(Fel a, Fel b) const;
    Fel sub(Fel a, Fel b) const;
    Fel neg(Fel a) const;
    Fel mul(Fel a, Fel b) const;
    Fel inv(Fel a) const;   // throws std::domain_error on zero
    Fel div(Fel a, Fel b) const;
    Fel pow(Fel a, uint64_t k) const;

    // Coefficient vector of length e over {0,...,p-1}.
    std::vector<uint32_t> coeffs(Fel a) const;
    Fel from_coeffs(const std::vector<uint32_t>& c) const;

    bool valid(Fel a) const { return a < q_; }
    void check(Fel a) const;

    std::string to_string(Fel a) const;

    bool operator==(const Field& o) const {
        return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
    }

  private:
    uint32_t p_, e_, q_;
    std::vector<uint32_t> modulus_;   // empty for e == 1
    std::vector<Fel> mul_table_;      // q*q entries when q <= kTableLimit
    std::vector<Fel> inv_table_;

    static constexpr uint32_t kTableLimit = 256;

    Fel mul_generic(Fel a, Fel b) const;
    void init();
};

using FieldPtr = std::shared_ptr<const Field>;

// Factory matching the JSON surface: validates p prime, supplies the
// built-in modulus when needed.
FieldPtr make_field(uint32_t p, uint32_t e = 1, std::vector<uint32_t> modulus = {});

// Convenience for prime powers q <= 32 with built-in moduli.
FieldPtr make_field_q(uint32_t q);

bool is_prime(uint32_t n);

}  // namespace cartcode

#endif
