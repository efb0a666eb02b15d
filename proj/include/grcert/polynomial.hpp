#ifndef GRCERT_POLYNOMIAL_HPP
#define GRCERT_POLYNOMIAL_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grcert/field_tower.hpp"

namespace grcert {

/// Univariate polynomial over tower elements, coefficients low degree first.
/// The zero polynomial has an empty coefficient list and no degree (the
/// "minus infinity" case is surfaced as an empty optional, never as -1).
class Poly {
  public:
    explicit Poly(std::shared_ptr<const FieldTower> tower) : tw_(std::move(tower)) {}
    Poly(std::shared_ptr<const FieldTower> tower, std::vector<Fel> coeffs);

    static Poly constant(std::shared_ptr<const FieldTower> tower, Fel c);
    /// X^n - eta, the (consta)cyclic modulus.
    static Poly x_pow_minus(std::shared_ptr<const FieldTower> tower, std::uint32_t n, Fel eta);

    const std::shared_ptr<const FieldTower>& tower() const { return tw_; }
    const std::vector<Fel>& coefficients() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    std::optional<std::uint32_t> degree() const;
    Fel coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Fel leading_coefficient() const;

    Poly add(const Poly& o) const;
    Poly sub(const Poly& o) const;
    Poly mul(const Poly& o) const;
    Poly scale(Fel c) const;
    Fel eval(Fel x) const;

    bool operator==(const Poly& o) const;

    std::string to_string() const; // space-separated encodings, low degree first

  private:
    std::shared_ptr<const FieldTower> tw_;
    std::vector<Fel> c_;

    void normalize();
    void check_compatible(const Poly& o) const;
};

/// Monic polynomial vanishing exactly on the given root multiset.
Poly product_of_linear_factors(std::shared_ptr<const FieldTower> tower, const std::vector<Fel>& roots);

/// Euclidean quotient and remainder; g must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);

/// True iff g divides f exactly.
bool divides(const Poly& g, const Poly& f);

/// True iff every coefficient is fixed by x -> x^q (lies in F_q).
bool coefficients_in_subfield(const Poly& p);

} // namespace grcert

#endif
