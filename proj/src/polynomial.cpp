#include "grcert/polynomial.hpp"

#include <sstream>

namespace grcert {

Poly::Poly(std::shared_ptr<const FieldTower> tower, std::vector<Fel> coeffs)
    : tw_(std::move(tower)), c_(std::move(coeffs)) {
    for (Fel c : c_)
        if (c >= tw_->q2()) throw std::invalid_argument("coefficient encoding out of range");
    normalize();
}

Poly Poly::constant(std::shared_ptr<const FieldTower> tower, Fel c) {
    return Poly(std::move(tower), std::vector<Fel>{c});
}

Poly Poly::x_pow_minus(std::shared_ptr<const FieldTower> tower, std::uint32_t n, Fel eta) {
    std::vector<Fel> c(n + 1, 0);
    c[0] = tower->neg(eta);
    c[n] = 1;
    return Poly(std::move(tower), std::move(c));
}

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_compatible(const Poly& o) const {
    if (!tw_->same_as(*o.tw_)) throw std::invalid_argument("polynomials from different towers");
}

std::optional<std::uint32_t> Poly::degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<std::uint32_t>(c_.size() - 1);
}

Fel Poly::leading_coefficient() const {
    if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return c_.back();
}

Poly Poly::add(const Poly& o) const {
    check_compatible(o);
    std::vector<Fel> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = tw_->add(coefficient(i), o.coefficient(i));
    return Poly(tw_, std::move(r));
}

Poly Poly::sub(const Poly& o) const {
    check_compatible(o);
    std::vector<Fel> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = tw_->sub(coefficient(i), o.coefficient(i));
    return Poly(tw_, std::move(r));
}

Poly Poly::mul(const Poly& o) const {
    check_compatible(o);
    if (is_zero() || o.is_zero()) return Poly(tw_);
    std::vector<Fel> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = tw_->add(r[i + j], tw_->mul(c_[i], o.c_[j]));
    }
    return Poly(tw_, std::move(r));
}

Poly Poly::scale(Fel c) const {
    std::vector<Fel> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = tw_->mul(c_[i], c);
    return Poly(tw_, std::move(r));
}

Fel Poly::eval(Fel x) const {
    Fel r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = tw_->add(tw_->mul(r, x), c_[i]);
    return r;
}

bool Poly::operator==(const Poly& o) const {
    return tw_->same_as(*o.tw_) && c_ == o.c_;
}

std::string Poly::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ' ';
        os << c_[i];
    }
    return os.str();
}

Poly product_of_linear_factors(std::shared_ptr<const FieldTower> tower, const std::vector<Fel>& roots) {
    Poly acc = Poly::constant(tower, 1);
    for (Fel r : roots) {
        Poly lin(tower, std::vector<Fel>{tower->neg(r), 1});
        acc = acc.mul(lin);
    }
    return acc;
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    const auto& tw = f.tower();
    if (!tw->same_as(*g.tower())) throw std::invalid_argument("polynomials from different towers");
    std::vector<Fel> rem = f.coefficients();
    const auto& gc = g.coefficients();
    const std::size_t dg = gc.size() - 1;
    if (rem.size() <= dg) return {Poly(tw), Poly(tw, std::move(rem))};
    std::vector<Fel> quot(rem.size() - dg, 0);
    const Fel lead_inv = tw->inv(gc.back());
    for (std::size_t i = rem.size(); i-- > dg;) {
        if (rem[i] == 0) continue;
        const Fel c = tw->mul(rem[i], lead_inv);
        quot[i - dg] = c;
        for (std::size_t j = 0; j <= dg; ++j)
            rem[i - dg + j] = tw->sub(rem[i - dg + j], tw->mul(c, gc[j]));
    }
    return {Poly(tw, std::move(quot)), Poly(tw, std::move(rem))};
}

bool divides(const Poly& g, const Poly& f) {
    return divmod(f, g).second.is_zero();
}

bool coefficients_in_subfield(const Poly& p) {
    const auto& tw = p.tower();
    for (Fel c : p.coefficients())
        if (!tw->in_base(c)) return false;
    return true;
}

} // namespace grcert
