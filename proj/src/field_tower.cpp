#include "grcert/field_tower.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace grcert {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::pair<std::uint32_t, std::uint32_t> factor_prime_power(std::uint64_t q) {
    if (q < 2) return {0, 0};
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return {static_cast<std::uint32_t>(q), 1}; // q itself prime
    std::uint32_t h = 0;
    while (q % p == 0) {
        q /= p;
        ++h;
    }
    if (q != 1) return {0, 0};
    return {static_cast<std::uint32_t>(p), h};
}

namespace {

// Dense F_p[X] arithmetic, used only while bootstrapping a tower.
using PPoly = std::vector<std::uint32_t>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    }
    // reduce by monic m
    const std::size_t dm = m.size() - 1;
    while (r.size() > dm) {
        std::uint32_t lead = r.back();
        std::size_t shift = r.size() - 1 - dm;
        if (lead) {
            for (std::size_t i = 0; i <= dm; ++i) {
                std::uint64_t s = r[shift + i] + static_cast<std::uint64_t>(lead) * (p - m[i] % p);
                r[shift + i] = s % p;
            }
        }
        r.pop_back();
    }
    ptrim(r);
    return r;
}

PPoly ppowmod_p(const PPoly& a, std::uint32_t p, const PPoly& m) {
    // a^p mod m by square and multiply
    PPoly r{1}, base = a;
    std::uint32_t e = p;
    while (e) {
        if (e & 1) r = pmulmod(r, base, m, p);
        base = pmulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

PPoly pmod(PPoly a, const PPoly& m, std::uint32_t p) {
    ptrim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        std::uint32_t lead = a.back();
        std::size_t shift = a.size() - 1 - dm;
        if (lead)
            for (std::size_t i = 0; i <= dm; ++i) {
                std::uint64_t s = a[shift + i] + static_cast<std::uint64_t>(lead) * (p - m[i] % p);
                a[shift + i] = s % p;
            }
        a.pop_back();
    }
    ptrim(a);
    return a;
}

PPoly pgcd(PPoly a, PPoly b, std::uint32_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // make b monic so pmod can treat it as a modulus
        std::uint32_t lb = b.back();
        if (lb != 1) {
            // multiply by inverse of lb mod p
            std::uint32_t inv = 1;
            for (std::uint32_t c = 1; c < p; ++c)
                if (c * static_cast<std::uint64_t>(lb) % p == 1) {
                    inv = c;
                    break;
                }
            for (auto& c : b) c = static_cast<std::uint64_t>(c) * inv % p;
        }
        PPoly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool p_irreducible(const PPoly& m, std::uint32_t p) {
    const std::size_t d = m.size() - 1;
    if (d == 1) return true;
    // m (monic, degree d) is irreducible iff it shares no factor with
    // X^{p^e} - X for any e <= d/2
    PPoly xp{0, 1}; // X
    for (std::size_t e = 1; e <= d / 2; ++e) {
        xp = ppowmod_p(xp, p, m); // now X^{p^e} mod m
        PPoly diff = xp;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        ptrim(diff);
        PPoly g = pgcd(m, diff, p);
        if (g.size() > 1) return false;
    }
    return true;
}

// Bootstrap arithmetic for F_q = F_p[X]/(base_mod), on encodings.
struct FqBoot {
    std::uint32_t p, h, q;
    const PPoly& mod;

    PPoly dec(Fel x) const {
        PPoly v;
        while (x) {
            v.push_back(x % p);
            x /= p;
        }
        return v;
    }
    Fel enc(const PPoly& v) const {
        Fel r = 0, pw = 1;
        for (std::size_t i = 0; i < v.size(); ++i) {
            r += v[i] * pw;
            pw *= p;
        }
        return r;
    }
    Fel mul(Fel a, Fel b) const { return enc(pmulmod(dec(a), dec(b), mod, p)); }
    Fel powm(Fel a, std::uint64_t e) const {
        Fel r = 1, base = a;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
};

std::uint64_t checked_pow(std::uint64_t b, std::uint32_t e, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        if (r > limit / b) return limit + 1;
        r *= b;
    }
    return r;
}

constexpr std::uint32_t ADD_TABLE_MAX_Q = 1024;

} // namespace

void FieldTower::check_range(Fel x) const {
    if (x >= q2_) throw std::invalid_argument("element encoding out of range for this tower");
}

Fel FieldTower::base_add(Fel a, Fel b) const {
    if (xor_add_) return a ^ b;
    if (!add_tab_.empty()) return add_tab_[static_cast<std::size_t>(a) * q_ + b];
    Fel r = 0, pw = 1;
    while (a || b) {
        std::uint32_t d = a % p_ + b % p_;
        if (d >= p_) d -= p_;
        r += d * pw;
        a /= p_;
        b /= p_;
        pw *= p_;
    }
    return r;
}

Fel FieldTower::base_neg(Fel a) const {
    if (p_ == 2) return a;
    Fel r = 0, pw = 1;
    while (a) {
        std::uint32_t d = a % p_;
        if (d) d = p_ - d;
        r += d * pw;
        a /= p_;
        pw *= p_;
    }
    return r;
}

Fel FieldTower::base_mul(Fel a, Fel b) const {
    if (a == 0 || b == 0) return 0;
    return fq_exp_[fq_log_[a] + fq_log_[b]];
}

Fel FieldTower::base_inv(Fel a) const {
    if (a == 0) throw std::domain_error("inversion of zero");
    return fq_exp_[(q_ - 1) - fq_log_[a]];
}

Fel FieldTower::base_pow(Fel a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    std::uint64_t le = static_cast<std::uint64_t>(fq_log_[a]) * (e % (q_ - 1)) % (q_ - 1);
    return fq_exp_[le];
}

Fel FieldTower::add(Fel x, Fel y) const {
    check_range(x);
    check_range(y);
    if (xor_add_) return x ^ y;
    if (x < q_ && y < q_) return base_add(x, y);
    Fel a = base_add(x % q_, y % q_);
    Fel b = base_add(x / q_, y / q_);
    return a + q_ * b;
}

Fel FieldTower::neg(Fel x) const {
    check_range(x);
    if (p_ == 2) return x;
    return base_neg(x % q_) + q_ * base_neg(x / q_);
}

Fel FieldTower::sub(Fel x, Fel y) const { return add(x, neg(y)); }

Fel FieldTower::mul(Fel x, Fel y) const {
    check_range(x);
    check_range(y);
    if (x < q_ && y < q_) return base_mul(x, y);
    const Fel a1 = x % q_, b1 = x / q_;
    const Fel a2 = y % q_, b2 = y / q_;
    const Fel ac = base_mul(a1, a2);
    const Fel bd = base_mul(b1, b2);
    const Fel lo = base_add(ac, base_mul(bd, t0_));
    const Fel hi = base_add(base_add(base_mul(a1, b2), base_mul(b1, a2)), base_mul(bd, t1_));
    return lo + q_ * hi;
}

Fel FieldTower::frobenius_q(Fel x) const {
    check_range(x);
    if (x < q_) return x;
    const Fel a = x % q_, b = x / q_;
    // x^q = a + b * Y^q
    return base_add(a, base_mul(b, yq_a_)) + q_ * base_mul(b, yq_b_);
}

Fel FieldTower::inv(Fel x) const {
    check_range(x);
    if (x == 0) throw std::domain_error("inversion of zero");
    if (x < q_) return base_inv(x);
    const Fel xq = frobenius_q(x);
    const Fel nrm = mul(x, xq); // the norm, always in F_q
    return mul(xq, base_inv(nrm));
}

Fel FieldTower::pow(Fel x, long long e) const {
    check_range(x);
    if (x == 0) {
        if (e == 0) return 1;
        if (e < 0) throw std::domain_error("inversion of zero");
        return 0;
    }
    Fel base = x;
    unsigned long long ue;
    if (e < 0) {
        base = inv(x);
        ue = static_cast<unsigned long long>(-(e + 1)) + 1;
    } else {
        ue = static_cast<unsigned long long>(e);
    }
    Fel r = 1;
    while (ue) {
        if (ue & 1) r = mul(r, base);
        base = mul(base, base);
        ue >>= 1;
    }
    return r;
}

std::pair<Fel, Fel> FieldTower::decompose(Fel x) const {
    check_range(x);
    const Fel a = x % q_, b = x / q_;
    const Fel x2 = base_mul(b, w1_inv_);
    const Fel x1 = base_add(a, base_neg(base_mul(w0_, x2)));
    return {x1, x2};
}

Fel FieldTower::compose(Fel x1, Fel x2) const {
    if (x1 >= q_ || x2 >= q_) throw std::invalid_argument("decompose coordinates must be base-field elements");
    return base_add(x1, base_mul(w0_, x2)) + q_ * base_mul(w1_, x2);
}

Fel FieldTower::hermitian_conj(Fel x) const {
    if (h_ % 2 != 0) throw std::domain_error("hermitian_conj requires even extension degree h");
    if (x >= q_) throw std::invalid_argument("hermitian_conj expects a base-field element");
    return base_pow(x, herm_exp_);
}

std::uint64_t FieldTower::multiplicative_order(Fel x) const {
    check_range(x);
    if (x == 0) throw std::domain_error("order of zero is undefined");
    std::uint64_t o = q2_ - 1;
    for (std::uint64_t l : prime_factors(q2_ - 1)) {
        while (o % l == 0 && pow(x, static_cast<long long>(o / l)) == 1) o /= l;
    }
    return o;
}

Fel FieldTower::from_int(long long m) const {
    long long r = m % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Fel>(r);
}

std::shared_ptr<const FieldTower> make_tower(std::uint32_t p, std::uint32_t h) {
    static std::mutex cache_mutex;
    static std::map<std::uint64_t, std::shared_ptr<const FieldTower>> cache;
    const std::uint64_t key = (static_cast<std::uint64_t>(p) << 32) | h;
    {
        std::lock_guard<std::mutex> lk(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (h < 1) throw std::invalid_argument("h must be positive");
    const std::uint64_t q64 = checked_pow(p, h, 1ull << 16);
    if (q64 > (1ull << 16)) throw std::invalid_argument("tower too large: p^{2h} must not exceed 2^32");

    auto tw = std::shared_ptr<FieldTower>(new FieldTower());
    tw->p_ = p;
    tw->h_ = h;
    tw->q_ = static_cast<std::uint32_t>(q64);
    tw->q2_ = q64 * q64;
    const std::uint32_t q = tw->q_;

    // base modulus: first monic irreducible of degree h, candidates ordered by
    // the packed value of (c_{h-1},...,c_0)
    PPoly base_mod;
    for (Fel n = 0; n < q; ++n) {
        PPoly cand(h + 1, 0);
        Fel x = n;
        for (std::uint32_t i = 0; i < h; ++i) {
            cand[i] = x % p;
            x /= p;
        }
        cand[h] = 1;
        if (p_irreducible(cand, p)) {
            base_mod = cand;
            break;
        }
    }
    if (base_mod.empty()) throw std::logic_error("no irreducible base modulus found");
    tw->base_mod_ = base_mod;

    FqBoot boot{p, h, q, base_mod};

    // exp/log tables over an enc-smallest generator of F_q^*
    const auto qfac = prime_factors(q - 1);
    Fel gen = 1;
    for (Fel c = 1; c < q; ++c) {
        bool ok = true;
        for (std::uint64_t l : qfac)
            if (boot.powm(c, (q - 1) / l) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            gen = c;
            break;
        }
    }
    tw->fq_exp_.assign(2 * (q - 1), 0);
    tw->fq_log_.assign(q, 0);
    Fel acc = 1;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
        tw->fq_exp_[i] = acc;
        tw->fq_exp_[i + (q - 1)] = acc;
        tw->fq_log_[acc] = i;
        acc = boot.mul(acc, gen);
    }
    if (acc != 1) throw std::logic_error("generator order mismatch");

    tw->xor_add_ = (p == 2);
    if (p != 2 && q <= ADD_TABLE_MAX_Q) {
        tw->add_tab_.assign(static_cast<std::size_t>(q) * q, 0);
        for (Fel a = 0; a < q; ++a)
            for (Fel b = 0; b < q; ++b) {
                Fel r = 0, pw = 1, aa = a, bb = b;
                while (aa || bb) {
                    std::uint32_t d = aa % p + bb % p;
                    if (d >= p) d -= p;
                    r += d * pw;
                    aa /= p;
                    bb /= p;
                    pw *= p;
                }
                tw->add_tab_[static_cast<std::size_t>(a) * q + b] = r;
            }
    }
    if (h % 2 == 0) tw->herm_exp_ = static_cast<std::uint32_t>(checked_pow(p, h / 2, 1ull << 16));

    // extension modulus Y^2 + m1*Y + m0: first root-free candidate ordered by
    // the packed value of (m1, m0)
    bool found = false;
    // in characteristic 2 squaring is onto, so Y^2 + m0 always has a root;
    // start the scan at the m1 = 1 stripe there
    const std::uint64_t first_cand = (p == 2) ? q : 0;
    for (std::uint64_t n = first_cand; n < static_cast<std::uint64_t>(q) * q && !found; ++n) {
        const Fel m1 = static_cast<Fel>(n / q), m0 = static_cast<Fel>(n % q);
        bool has_root = false;
        for (Fel c = 0; c < q; ++c) {
            Fel v = tw->base_add(tw->base_add(tw->base_mul(c, c), tw->base_mul(m1, c)), m0);
            if (v == 0) {
                has_root = true;
                break;
            }
        }
        if (!has_root) {
            tw->ext_mod_ = {m0, m1, 1};
            tw->t0_ = tw->base_neg(m0);
            tw->t1_ = tw->base_neg(m1);
            found = true;
        }
    }
    if (!found) throw std::logic_error("no irreducible extension modulus found");

    // Y^q, needed by frobenius_q; computed before frobenius is usable
    {
        Fel r = 1;
        const Fel y = q; // encoding of Y
        std::uint64_t e = q;
        Fel base = y;
        while (e) {
            if (e & 1) r = tw->mul(r, base);
            base = tw->mul(base, base);
            e >>= 1;
        }
        tw->yq_a_ = r % q;
        tw->yq_b_ = r / q;
    }

    // omega: enc-smallest generator of the multiplicative group of F_{q^2}
    const auto q2fac = prime_factors(tw->q2_ - 1);
    Fel omega = 0;
    for (std::uint64_t c = 2; c < tw->q2_; ++c) {
        bool ok = true;
        for (std::uint64_t l : q2fac)
            if (tw->pow(static_cast<Fel>(c), static_cast<long long>((tw->q2_ - 1) / l)) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            omega = static_cast<Fel>(c);
            break;
        }
    }
    if (omega == 0) throw std::logic_error("no primitive element found");
    tw->omega_ = omega;
    if (omega < q) throw std::logic_error("primitive element unexpectedly in base field");
    tw->w0_ = omega % q;
    tw->w1_ = omega / q;
    tw->w1_inv_ = tw->base_inv(tw->w1_);
    tw->alpha_ = tw->pow(omega, static_cast<long long>(q) - 1);

    // beta: enc-smallest solution of beta + beta^q = 1
    bool beta_found = false;
    for (std::uint64_t c = 0; c < tw->q2_; ++c) {
        if (tw->add(static_cast<Fel>(c), tw->frobenius_q(static_cast<Fel>(c))) == 1) {
            tw->beta_ = static_cast<Fel>(c);
            beta_found = true;
            break;
        }
    }
    if (!beta_found) throw std::logic_error("no trace-one element found");

    std::shared_ptr<const FieldTower> out = tw;
    std::lock_guard<std::mutex> lk(cache_mutex);
    auto [it, inserted] = cache.emplace(key, out);
    return it->second;
}

} // namespace grcert
