#ifndef GRCERT_FIELD_TOWER_HPP
#define GRCERT_FIELD_TOWER_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace grcert {

/// Canonical integer encoding of a field element. An element of F_q with
/// coordinates (c_0,...,c_{h-1}) over F_p encodes as sum c_i p^i; an element
/// a + b*Y of F_{q^2} encodes as enc(a) + q*enc(b). Hence enc(x) < q exactly
/// when x lies in the base field.
using Fel = std::uint32_t;

/// The pair (F_q, F_{q^2}) with deterministically chosen moduli and
/// distinguished constants omega (primitive element of F_{q^2}),
/// alpha = omega^{q-1} (primitive (q+1)-st root of unity) and beta with
/// beta + beta^q = 1. Immutable after construction; all operations are pure,
/// so a tower can be shared freely across threads.
class FieldTower {
  public:
    std::uint32_t p() const { return p_; }
    std::uint32_t h() const { return h_; }
    std::uint32_t q() const { return q_; }
    std::uint64_t q2() const { return q2_; }

    /// Monic irreducible of degree h over F_p, coefficients low degree first.
    const std::vector<std::uint32_t>& base_modulus() const { return base_mod_; }
    /// Monic irreducible of degree 2 over F_q, coefficients low degree first.
    const std::array<Fel, 3>& ext_modulus() const { return ext_mod_; }

    Fel omega() const { return omega_; }
    Fel alpha() const { return alpha_; }
    Fel beta() const { return beta_; }
    /// Basis element of {1, e}; fixed to e = omega.
    Fel e() const { return omega_; }

    // Arithmetic in F_{q^2} (valid on any encoding < q^2; the base field is
    // the subset of encodings < q and is closed under all of these).
    Fel add(Fel x, Fel y) const;
    Fel sub(Fel x, Fel y) const;
    Fel neg(Fel x) const;
    Fel mul(Fel x, Fel y) const;
    Fel inv(Fel x) const;
    Fel pow(Fel x, long long e) const;

    /// x^q; an involution on F_{q^2}, the identity exactly on F_q.
    Fel frobenius_q(Fel x) const;

    bool in_base(Fel x) const { return x < q_; }

    /// Coordinates of x in the basis {1, e}: x = x1 + e*x2 with x1, x2 in F_q.
    std::pair<Fel, Fel> decompose(Fel x) const;
    Fel compose(Fel x1, Fel x2) const;

    /// x^{sqrt(q)} for x in the base field; requires h even.
    Fel hermitian_conj(Fel x) const;

    /// Order of x in the multiplicative group of F_{q^2}; x must be nonzero.
    std::uint64_t multiplicative_order(Fel x) const;

    /// Embedding of an integer (value mod p) as a constant field element.
    Fel from_int(long long m) const;

    /// True when two towers describe the same fields (same p and h; moduli
    /// and constants are then identical by the deterministic construction).
    bool same_as(const FieldTower& o) const { return p_ == o.p_ && h_ == o.h_; }

    FieldTower(const FieldTower&) = delete;
    FieldTower& operator=(const FieldTower&) = delete;

  private:
    FieldTower() = default;
    friend std::shared_ptr<const FieldTower> make_tower(std::uint32_t, std::uint32_t);

    void check_range(Fel x) const;
    Fel base_add(Fel a, Fel b) const;
    Fel base_neg(Fel a) const;
    Fel base_mul(Fel a, Fel b) const;
    Fel base_inv(Fel a) const;
    Fel base_pow(Fel a, std::uint64_t e) const;

    std::uint32_t p_ = 0, h_ = 0, q_ = 0;
    std::uint64_t q2_ = 0;
    std::vector<std::uint32_t> base_mod_;
    std::array<Fel, 3> ext_mod_{};
    Fel omega_ = 0, alpha_ = 0, beta_ = 0;

    // Y^2 = t1*Y + t0 and Y^q, for extension arithmetic and Frobenius.
    Fel t0_ = 0, t1_ = 0;
    Fel yq_a_ = 0, yq_b_ = 0; // Y^q = yq_a + yq_b*Y
    Fel w0_ = 0, w1_ = 0;     // omega = w0 + w1*Y
    Fel w1_inv_ = 0;

    // F_q multiplication via exp/log over a fixed generator; addition via a
    // table for small odd-characteristic fields, digit arithmetic otherwise.
    std::vector<Fel> fq_exp_; // size 2(q-1)
    std::vector<Fel> fq_log_; // size q, log_[0] unused
    std::vector<Fel> add_tab_;
    bool xor_add_ = false;
    std::uint32_t herm_exp_ = 0; // p^{h/2} when h even
};

/// Builds (and caches) the tower for q = p^h. Deterministic: the moduli are
/// the lexicographically smallest monic irreducibles (coefficients compared
/// low-degree-last), omega and beta are enc-smallest. Guard: p^{2h} <= 2^32.
std::shared_ptr<const FieldTower> make_tower(std::uint32_t p, std::uint32_t h);

/// Factors q as p^h; returns {0,0} when q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> factor_prime_power(std::uint64_t q);

bool is_prime(std::uint64_t n);

/// Prime factors of n, each listed once, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

} // namespace grcert

#endif
