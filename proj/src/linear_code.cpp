#include "grcert/linear_code.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace grcert {

namespace {

// In-place reduced row echelon form over the base field; returns pivot
// columns. Rows is a flattened rows*n matrix.
std::vector<std::uint32_t> rref(const FieldTower& tw, std::vector<Fel>& m, std::size_t rows,
                                std::uint32_t n) {
    std::vector<std::uint32_t> pivots;
    std::size_t r = 0;
    for (std::uint32_t col = 0; col < n && r < rows; ++col) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i * n + col] != 0) {
                sel = i;
                break;
            }
        if (sel == rows) continue;
        if (sel != r)
            for (std::uint32_t j = 0; j < n; ++j) std::swap(m[sel * n + j], m[r * n + j]);
        const Fel pinv = tw.inv(m[r * n + col]);
        for (std::uint32_t j = 0; j < n; ++j) m[r * n + j] = tw.mul(m[r * n + j], pinv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Fel f = m[i * n + col];
            if (f == 0) continue;
            for (std::uint32_t j = 0; j < n; ++j)
                m[i * n + j] = tw.sub(m[i * n + j], tw.mul(f, m[r * n + j]));
        }
        pivots.push_back(col);
        ++r;
    }
    m.resize(r * n);
    return pivots;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > std::numeric_limits<std::uint64_t>::max() / b)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

// Weight of the projective representative indexed by (j, t): message has
// first nonzero coordinate j with value 1 and suffix digits taken from t in
// base q.
std::uint32_t rep_weight(const FieldTower& tw, const LinearCode& c, std::uint32_t j,
                         std::uint64_t t, std::vector<Fel>& word) {
    const std::uint32_t n = c.n(), k = c.k(), q = tw.q();
    auto rj = c.row(j);
    word.assign(rj.begin(), rj.end());
    std::uint64_t rest = t;
    for (std::uint32_t i = j + 1; i < k; ++i) {
        const Fel d = static_cast<Fel>(rest % q);
        rest /= q;
        if (d == 0) continue;
        auto ri = c.row(i);
        for (std::uint32_t s = 0; s < n; ++s) word[s] = tw.add(word[s], tw.mul(d, ri[s]));
    }
    std::uint32_t w = 0;
    for (std::uint32_t s = 0; s < n; ++s) w += (word[s] != 0);
    return w;
}

} // namespace

std::uint64_t projective_message_count(std::uint32_t q, std::uint32_t k) {
    std::uint64_t total = 0, block = 1;
    for (std::uint32_t j = 0; j < k; ++j) {
        if (total > std::numeric_limits<std::uint64_t>::max() - block)
            return std::numeric_limits<std::uint64_t>::max();
        total += block;
        block = sat_mul(block, q);
    }
    return total;
}

LinearCode LinearCode::from_rows(std::shared_ptr<const FieldTower> tower, std::uint32_t n,
                                 const std::vector<std::vector<Fel>>& rows) {
    if (n == 0) throw std::invalid_argument("code length must be positive");
    std::vector<Fel> m;
    m.reserve(rows.size() * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw std::invalid_argument("row length mismatch");
        for (Fel x : row) {
            if (!tower->in_base(x)) throw std::invalid_argument("code entries must lie in the base field");
            m.push_back(x);
        }
    }
    LinearCode c;
    c.tw_ = std::move(tower);
    c.n_ = n;
    c.pivots_ = rref(*c.tw_, m, rows.size(), n);
    c.k_ = static_cast<std::uint32_t>(c.pivots_.size());
    c.mat_ = std::move(m);
    return c;
}

bool LinearCode::equals(const LinearCode& other) const {
    if (!tw_->same_as(*other.tw_) || n_ != other.n_)
        throw std::invalid_argument("codes live in different ambient spaces");
    return k_ == other.k_ && mat_ == other.mat_;
}

bool LinearCode::contains(std::span<const Fel> word) const {
    if (word.size() != n_) throw std::invalid_argument("word length mismatch");
    std::vector<Fel> v(word.begin(), word.end());
    for (std::uint32_t i = 0; i < k_; ++i) {
        const Fel f = v[pivots_[i]];
        if (f == 0) continue;
        auto ri = row(i);
        for (std::uint32_t s = 0; s < n_; ++s) v[s] = tw_->sub(v[s], tw_->mul(f, ri[s]));
    }
    return std::all_of(v.begin(), v.end(), [](Fel x) { return x == 0; });
}

std::vector<std::vector<Fel>> nullspace(const std::shared_ptr<const FieldTower>& tower,
                                        const std::vector<std::vector<Fel>>& rows, std::uint32_t n) {
    std::vector<Fel> m;
    m.reserve(rows.size() * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw std::invalid_argument("row length mismatch");
        m.insert(m.end(), row.begin(), row.end());
    }
    auto work = m;
    const auto pivots = rref(*tower, work, rows.size(), n);
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Fel>> basis;
    for (std::uint32_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        std::vector<Fel> y(n, 0);
        y[j] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) y[pivots[i]] = tower->neg(work[i * n + j]);
        basis.push_back(std::move(y));
    }
    return basis;
}

LinearCode LinearCode::dual() const {
    std::vector<std::vector<Fel>> rows;
    rows.reserve(k_);
    for (std::uint32_t i = 0; i < k_; ++i) {
        auto r = row(i);
        rows.emplace_back(r.begin(), r.end());
    }
    return from_rows(tw_, n_, nullspace(tw_, rows, n_));
}

LinearCode LinearCode::diag_scale(const Multipliers& theta) const {
    if (theta.size() != n_) throw std::invalid_argument("multiplier length mismatch");
    for (Fel t : theta)
        if (t == 0 || !tw_->in_base(t)) throw std::invalid_argument("multipliers must be nonzero base-field elements");
    std::vector<std::vector<Fel>> rows(k_, std::vector<Fel>(n_));
    for (std::uint32_t i = 0; i < k_; ++i)
        for (std::uint32_t s = 0; s < n_; ++s) rows[i][s] = tw_->mul(at(i, s), theta[s]);
    return from_rows(tw_, n_, rows);
}

LinearCode LinearCode::schur_square() const {
    std::vector<std::vector<Fel>> rows;
    for (std::uint32_t i = 0; i < k_; ++i)
        for (std::uint32_t j = i; j < k_; ++j) {
            std::vector<Fel> prod(n_);
            for (std::uint32_t s = 0; s < n_; ++s) prod[s] = tw_->mul(at(i, s), at(j, s));
            rows.push_back(std::move(prod));
        }
    return from_rows(tw_, n_, rows);
}

bool LinearCode::is_constacyclic(Fel eta) const {
    if (eta == 0) throw std::invalid_argument("eta must be nonzero");
    if (!tw_->in_base(eta)) throw std::invalid_argument("eta must lie in the base field");
    std::vector<Fel> shifted(n_);
    for (std::uint32_t i = 0; i < k_; ++i) {
        auto r = row(i);
        shifted[0] = tw_->mul(eta, r[n_ - 1]);
        for (std::uint32_t s = 1; s < n_; ++s) shifted[s] = r[s - 1];
        if (!contains(shifted)) return false;
    }
    return true;
}

bool LinearCode::is_mds() const {
    if (k_ == 0 || k_ > n_) throw std::invalid_argument("is_mds requires 1 <= k <= n");
    std::vector<std::uint32_t> cols(k_);
    for (std::uint32_t i = 0; i < k_; ++i) cols[i] = i;
    std::vector<Fel> sub(std::size_t(k_) * k_);
    for (;;) {
        for (std::uint32_t i = 0; i < k_; ++i)
            for (std::uint32_t j = 0; j < k_; ++j) sub[std::size_t(i) * k_ + j] = at(i, cols[j]);
        auto work = sub;
        if (rref(*tw_, work, k_, k_).size() != k_) return false;
        // next k-combination of columns
        std::uint32_t i = k_;
        while (i > 0) {
            --i;
            if (cols[i] != n_ - k_ + i) break;
            if (i == 0) return true;
        }
        ++cols[i];
        for (std::uint32_t j = i + 1; j < k_; ++j) cols[j] = cols[j - 1] + 1;
    }
}

std::uint32_t min_distance_serial(const LinearCode& c, std::uint64_t cap) {
    if (c.k() == 0) throw std::invalid_argument("minimum distance of the zero code is undefined");
    const auto& tw = *c.tower();
    const std::uint32_t q = tw.q(), k = c.k();
    const std::uint64_t total = projective_message_count(q, k);
    if (total > cap) throw cap_exceeded(total);
    std::uint32_t best = c.n();
    std::vector<Fel> word(c.n());
    std::uint64_t block = 1;
    for (std::uint32_t j = k; j-- > 0;) {
        // first nonzero message coordinate at j; q^{k-1-j} suffixes
        for (std::uint64_t t = 0; t < block; ++t)
            best = std::min(best, rep_weight(tw, c, j, t, word));
        block = sat_mul(block, q);
    }
    return best;
}

std::uint32_t min_distance(const LinearCode& c, std::uint64_t cap) {
    if (c.k() == 0) throw std::invalid_argument("minimum distance of the zero code is undefined");
    const auto& tw = *c.tower();
    const std::uint32_t q = tw.q(), k = c.k();
    const std::uint64_t total = projective_message_count(q, k);
    if (total > cap) throw cap_exceeded(total);
    std::uint32_t best = c.n();
    std::uint64_t block = 1;
    for (std::uint32_t j = k; j-- > 0;) {
        const std::int64_t cnt = static_cast<std::int64_t>(block);
#ifdef _OPENMP
#pragma omp parallel reduction(min : best)
        {
            std::vector<Fel> word(c.n());
#pragma omp for schedule(static) nowait
            for (std::int64_t t = 0; t < cnt; ++t)
                best = std::min(best, rep_weight(tw, c, j, static_cast<std::uint64_t>(t), word));
        }
#else
        std::vector<Fel> word(c.n());
        for (std::int64_t t = 0; t < cnt; ++t)
            best = std::min(best, rep_weight(tw, c, j, static_cast<std::uint64_t>(t), word));
#endif
        block = sat_mul(block, q);
    }
    return best;
}

std::vector<std::uint64_t> weight_distribution_serial(const LinearCode& c, std::uint64_t cap) {
    const auto& tw = *c.tower();
    const std::uint32_t q = tw.q(), k = c.k();
    const std::uint64_t total = projective_message_count(q, k);
    if (total > cap) throw cap_exceeded(total);
    std::vector<std::uint64_t> counts(c.n() + 1, 0);
    counts[0] = 1;
    std::vector<Fel> word(c.n());
    std::uint64_t block = 1;
    for (std::uint32_t j = k; j-- > 0;) {
        for (std::uint64_t t = 0; t < block; ++t) counts[rep_weight(tw, c, j, t, word)] += q - 1;
        block = sat_mul(block, q);
    }
    return counts;
}

std::vector<std::uint64_t> weight_distribution(const LinearCode& c, std::uint64_t cap) {
    const auto& tw = *c.tower();
    const std::uint32_t q = tw.q(), k = c.k();
    const std::uint64_t total = projective_message_count(q, k);
    if (total > cap) throw cap_exceeded(total);
    std::vector<std::uint64_t> counts(c.n() + 1, 0);
    counts[0] = 1;
    std::uint64_t block = 1;
    for (std::uint32_t j = k; j-- > 0;) {
        const std::int64_t cnt = static_cast<std::int64_t>(block);
#ifdef _OPENMP
#pragma omp parallel
        {
            std::vector<std::uint64_t> local(c.n() + 1, 0);
            std::vector<Fel> word(c.n());
#pragma omp for schedule(static) nowait
            for (std::int64_t t = 0; t < cnt; ++t)
                local[rep_weight(tw, c, j, static_cast<std::uint64_t>(t), word)] += q - 1;
#pragma omp critical
            for (std::size_t w = 0; w <= c.n(); ++w) counts[w] += local[w];
        }
#else
        std::vector<Fel> word(c.n());
        for (std::int64_t t = 0; t < cnt; ++t)
            counts[rep_weight(tw, c, j, static_cast<std::uint64_t>(t), word)] += q - 1;
#endif
        block = sat_mul(block, q);
    }
    return counts;
}

LinearCode hermitian_puncture_code(const LinearCode& c) {
    const auto& big = c.tower();
    if (big->h() % 2 != 0) throw std::domain_error("puncture code requires a square field order");
    const auto small = make_tower(big->p(), big->h() / 2);
    const std::uint32_t q = small->q(), Q = big->q();

    // enc-smallest root of the small base modulus inside F_Q gives the
    // subfield embedding
    Fel rho = Q;
    const auto& bm = small->base_modulus();
    for (Fel cand = 0; cand < Q; ++cand) {
        Fel v = 0;
        for (std::size_t i = bm.size(); i-- > 0;) v = big->add(big->mul(v, cand), bm[i]);
        if (v == 0) {
            rho = cand;
            break;
        }
    }
    if (rho == Q) throw std::logic_error("subfield embedding root not found");
    std::vector<Fel> phi(q);
    for (Fel x = 0; x < q; ++x) {
        Fel v = 0, rest = x, rp = 1;
        std::uint32_t pp = small->p();
        while (rest) {
            const Fel digit = rest % pp;
            if (digit) v = big->add(v, big->mul(digit, rp));
            rest /= pp;
            rp = big->mul(rp, rho);
        }
        phi[x] = v;
    }

    // enc-smallest element outside the subfield completes the basis {1, mu}
    Fel mu = 0;
    for (Fel cand = 0; cand < Q; ++cand)
        if (big->hermitian_conj(cand) != cand) {
            mu = cand;
            break;
        }
    std::vector<std::uint32_t> split(Q, 0);
    for (Fel c1 = 0; c1 < q; ++c1)
        for (Fel c2 = 0; c2 < q; ++c2) {
            const Fel img = big->add(phi[c1], big->mul(mu, phi[c2]));
            split[img] = (static_cast<std::uint32_t>(c2) << 16) | c1;
        }

    std::vector<std::vector<Fel>> constraints;
    constraints.reserve(std::size_t(2) * c.k() * c.k());
    for (std::uint32_t ui = 0; ui < c.k(); ++ui)
        for (std::uint32_t vi = 0; vi < c.k(); ++vi) {
            std::vector<Fel> r1(c.n()), r2(c.n());
            for (std::uint32_t s = 0; s < c.n(); ++s) {
                const Fel a = big->mul(c.at(ui, s), big->hermitian_conj(c.at(vi, s)));
                r1[s] = split[a] & 0xffffu;
                r2[s] = split[a] >> 16;
            }
            constraints.push_back(std::move(r1));
            constraints.push_back(std::move(r2));
        }
    return LinearCode::from_rows(small, c.n(), nullspace(small, constraints, c.n()));
}

void save_matrix(std::ostream& os, const LinearCode& c) {
    os << c.tower()->p() << ' ' << c.tower()->h() << ' ' << c.n() << ' ' << c.k() << '\n';
    for (std::uint32_t i = 0; i < c.k(); ++i) {
        for (std::uint32_t j = 0; j < c.n(); ++j) {
            if (j) os << ' ';
            os << c.at(i, j);
        }
        os << '\n';
    }
}

LinearCode load_matrix(std::istream& is) {
    std::uint32_t p = 0, h = 0, n = 0, k = 0;
    if (!(is >> p >> h >> n >> k)) throw std::invalid_argument("malformed matrix header");
    auto tower = make_tower(p, h);
    std::vector<std::vector<Fel>> rows(k, std::vector<Fel>(n));
    for (auto& row : rows)
        for (auto& x : row)
            if (!(is >> x)) throw std::invalid_argument("malformed matrix body");
    return LinearCode::from_rows(tower, n, rows);
}

} // namespace grcert
