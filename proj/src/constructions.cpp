#include "grcert/constructions.hpp"

#include <numeric>

namespace grcert {

ProjectivePoint normalize(const FieldTower& tw, const ProjectivePoint& pt) {
    if (pt.x1 == 0 && pt.x2 == 0) throw std::invalid_argument("(0,0) is not a projective point");
    if (pt.x2 == 0) return {1, 0};
    return {tw.mul(pt.x1, tw.inv(pt.x2)), 1};
}

bool same_point(const FieldTower& tw, const ProjectivePoint& a, const ProjectivePoint& b) {
    const auto na = normalize(tw, a), nb = normalize(tw, b);
    return na.x1 == nb.x1 && na.x2 == nb.x2;
}

std::vector<ProjectivePoint> canonical_points(const std::shared_ptr<const FieldTower>& tower) {
    std::vector<ProjectivePoint> pts;
    pts.reserve(tower->q() + 1);
    for (Fel c = 0; c < tower->q(); ++c) pts.push_back({c, 1});
    pts.push_back({1, 0});
    return pts;
}

std::vector<ProjectivePoint> roots_of_unity_points(const std::shared_ptr<const FieldTower>& tower) {
    std::vector<ProjectivePoint> pts;
    pts.reserve(tower->q() + 1);
    for (std::uint32_t s = 0; s <= tower->q(); ++s) {
        const auto [x1, x2] = tower->decompose(tower->pow(tower->omega(), s));
        pts.push_back({x1, x2});
    }
    return pts;
}

std::vector<std::vector<Fel>> rs_base_matrix(const std::shared_ptr<const FieldTower>& tower,
                                             std::uint32_t k,
                                             const std::vector<ProjectivePoint>& points) {
    const auto& tw = *tower;
    const std::uint32_t n = static_cast<std::uint32_t>(points.size());
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= number of points");
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            if (same_point(tw, points[i], points[j]))
                throw std::invalid_argument("evaluation points must be pairwise distinct");
    std::vector<std::vector<Fel>> m(k, std::vector<Fel>(n));
    for (std::uint32_t j = 0; j < k; ++j)
        for (std::uint32_t s = 0; s < n; ++s)
            m[j][s] = tw.mul(tw.pow(points[s].x1, j), tw.pow(points[s].x2, k - 1 - j));
    return m;
}

LinearCode rs_code(const std::shared_ptr<const FieldTower>& tower, std::uint32_t k,
                   const std::vector<ProjectivePoint>& points) {
    return LinearCode::from_rows(tower, static_cast<std::uint32_t>(points.size()),
                                 rs_base_matrix(tower, k, points));
}

std::string to_string(GrCaseTag tag) {
    switch (tag) {
        case GrCaseTag::g1_odd_odd: return "G1_ODD_ODD";
        case GrCaseTag::g1_even_even: return "G1_EVEN_EVEN";
        case GrCaseTag::g2_kodd_qeven: return "G2_KODD_QEVEN";
        case GrCaseTag::g3_keven_qodd: return "G3_KEVEN_QODD";
    }
    return "?";
}

LinearCode cyclic_code_from_generator(const Poly& g, std::uint32_t n, Fel eta) {
    const auto& tower = g.tower();
    if (g.is_zero()) throw std::invalid_argument("generator polynomial must be nonzero");
    if (!coefficients_in_subfield(g))
        throw std::invalid_argument("generator polynomial has coefficients outside F_q");
    const std::uint32_t deg = *g.degree();
    if (deg > n) throw std::invalid_argument("generator degree exceeds code length");
    if (!divides(g, Poly::x_pow_minus(tower, n, eta)))
        throw std::invalid_argument("generator polynomial does not divide X^n - eta");
    const std::uint32_t k = n - deg;
    const auto& c = g.coefficients();
    std::vector<std::vector<Fel>> rows(k, std::vector<Fel>(n, 0));
    for (std::uint32_t a = 0; a < k; ++a)
        for (std::uint32_t j = 0; j <= deg; ++j) rows[a][a + j] = c[j];
    return LinearCode::from_rows(tower, n, rows);
}

std::pair<Poly, GrCase> gr_generator_poly(const std::shared_ptr<const FieldTower>& tower,
                                          std::uint32_t k) {
    const auto& tw = *tower;
    const std::uint32_t q = tw.q();
    if (k < 1 || k > q) throw std::invalid_argument("need 1 <= k <= q");
    const bool k_odd = k % 2, q_odd = q % 2;

    GrCase grcase;
    grcase.q = q;
    grcase.k = k;
    std::vector<Fel> roots;
    const Fel alpha = tw.alpha();
    if (k_odd == q_odd) {
        grcase.tag = q_odd ? GrCaseTag::g1_odd_odd : GrCaseTag::g1_even_even;
        grcase.r = (q - k) / 2;
        grcase.eta = 1;
        for (long long i = -static_cast<long long>(grcase.r); i <= grcase.r; ++i)
            roots.push_back(tw.pow(alpha, i));
    } else if (k_odd) { // q even
        if (k > q - 1) throw std::invalid_argument("k out of range for this parity case");
        grcase.tag = GrCaseTag::g2_kodd_qeven;
        grcase.r = (q - k - 1) / 2;
        grcase.eta = 1;
        for (long long i = q / 2 - grcase.r; i <= q / 2 + grcase.r + 1; ++i)
            roots.push_back(tw.pow(alpha, i));
    } else { // k even, q odd
        if (k > q - 1) throw std::invalid_argument("k out of range for this parity case");
        grcase.tag = GrCaseTag::g3_keven_qodd;
        grcase.r = (q - k + 1) / 2;
        grcase.eta = tw.pow(tw.omega(), q + 1);
        for (long long i = -static_cast<long long>(grcase.r) + 1; i <= grcase.r; ++i)
            roots.push_back(tw.mul(tw.omega(), tw.pow(alpha, i)));
    }

    Poly g = product_of_linear_factors(tower, roots);
    if (!g.degree() || *g.degree() != q + 1 - k) throw std::logic_error("generator degree mismatch");
    if (!coefficients_in_subfield(g))
        throw std::logic_error("generator polynomial fell outside F_q[X]");
    if (!divides(g, Poly::x_pow_minus(tower, q + 1, grcase.eta)))
        throw std::logic_error("generator polynomial does not divide X^{q+1} - eta");
    return {std::move(g), grcase};
}

std::pair<LinearCode, GrCase> gr_code(const std::shared_ptr<const FieldTower>& tower,
                                      std::uint32_t k) {
    auto [g, grcase] = gr_generator_poly(tower, k);
    return {cyclic_code_from_generator(g, tower->q() + 1, grcase.eta), grcase};
}

namespace {

// Rows of the two evaluation codes, with h running over the monomials
// {X^i, e*X^i}. The plain trace kills a one-dimensional space of constants,
// the twisted map kills nothing; both land on row rank exactly k.
LinearCode eval_code(const std::shared_ptr<const FieldTower>& tower, std::uint32_t k,
                     std::uint32_t max_i, bool twisted) {
    const auto& tw = *tower;
    const std::uint32_t q = tw.q(), n = q + 1;
    std::vector<std::vector<Fel>> rows;
    std::vector<Fel> omega_s(n), omega_sq(n), alpha_s(n);
    for (std::uint32_t s = 0; s < n; ++s) {
        omega_s[s] = tw.pow(tw.omega(), s);
        omega_sq[s] = tw.frobenius_q(omega_s[s]);
        alpha_s[s] = tw.pow(tw.alpha(), s);
    }
    for (std::uint32_t i = 0; i <= max_i; ++i) {
        for (const Fel m : {Fel(1), tw.e()}) {
            std::vector<Fel> row(n);
            for (std::uint32_t s = 0; s < n; ++s) {
                const Fel z = tw.mul(m, tw.pow(alpha_s[s], i));
                const Fel zq = tw.frobenius_q(z);
                const Fel v = twisted
                                  ? tw.add(tw.mul(omega_sq[s], z), tw.mul(omega_s[s], zq))
                                  : tw.add(z, zq);
                if (!tw.in_base(v)) throw std::logic_error("trace evaluation left the base field");
                row[s] = v;
            }
            rows.push_back(std::move(row));
        }
    }
    auto code = LinearCode::from_rows(tower, n, rows);
    if (code.k() != k) throw std::logic_error("evaluation code has unexpected dimension");
    return code;
}

} // namespace

LinearCode trace_code(const std::shared_ptr<const FieldTower>& tower, std::uint32_t k) {
    if (k % 2 == 0) throw std::invalid_argument("trace_code requires odd k");
    if (k < 1 || k > tower->q()) throw std::invalid_argument("need 1 <= k <= q");
    return eval_code(tower, k, (k - 1) / 2, false);
}

LinearCode twisted_trace_code(const std::shared_ptr<const FieldTower>& tower, std::uint32_t k) {
    if (k % 2 != 0) throw std::invalid_argument("twisted_trace_code requires even k");
    if (k < 2 || k > tower->q()) throw std::invalid_argument("need 2 <= k <= q");
    return eval_code(tower, k, k / 2 - 1, true);
}

std::uint32_t shift_eval_degree_bound(const GrCase& grcase) {
    return grcase.k_even() ? grcase.k / 2 - 1 : (grcase.k - 1) / 2;
}

Poly shift_eval_poly(const GrCase& grcase, const Poly& g, std::uint32_t a) {
    if (a >= grcase.k) throw std::invalid_argument("shift index out of range");
    const auto& tower = g.tower();
    const auto& tw = *tower;
    const std::uint32_t q = grcase.q;
    const Fel alpha = tw.alpha(), beta = tw.beta(), omega = tw.omega();
    const auto& c = g.coefficients();
    const std::uint32_t dg = *g.degree();

    // sum over j of c_j * alpha^{i(j+a)}, the i-th evaluation sum of g
    auto eval_sum = [&](std::uint64_t i) {
        Fel s = 0;
        for (std::uint32_t j = 0; j <= dg; ++j)
            s = tw.add(s, tw.mul(c[j], tw.pow(alpha, static_cast<long long>(i * (j + a)))));
        return s;
    };
    Fel csum = 0;
    for (std::uint32_t j = 0; j <= dg; ++j) csum = tw.add(csum, c[j]);

    std::vector<Fel> hc;
    switch (grcase.tag) {
        case GrCaseTag::g1_odd_odd: {
            const std::uint32_t m = (q + 1) / 2;
            hc.assign(m + 1, 0);
            hc[m] = tw.mul(beta, csum);
            for (std::uint32_t i = 1; i <= (q - 1) / 2; ++i) hc[m - i] = eval_sum(i);
            Fel c0 = 0;
            for (std::uint32_t j = 0; j <= dg; ++j) {
                const Fel sgn = ((j + a) % 2) ? tw.neg(1) : 1;
                c0 = tw.add(c0, tw.mul(tw.mul(c[j], sgn), beta));
            }
            hc[0] = tw.add(hc[0], c0);
            break;
        }
        case GrCaseTag::g1_even_even: {
            const std::uint32_t m = q / 2;
            hc.assign(m + 1, 0);
            hc[m] = tw.mul(beta, csum);
            for (std::uint32_t i = 1; i <= q / 2; ++i) hc[m - i] = tw.add(hc[m - i], eval_sum(i));
            break;
        }
        case GrCaseTag::g2_kodd_qeven: {
            const std::uint32_t m = q / 2;
            hc.assign(m + 1, 0);
            for (std::uint32_t i = 1; i <= q / 2; ++i) hc[m + 1 - i] = eval_sum(i + q / 2);
            hc[0] = tw.add(hc[0], tw.mul(beta, csum));
            break;
        }
        case GrCaseTag::g3_keven_qodd: {
            const std::uint32_t m = (q + 1) / 2;
            hc.assign(m, 0);
            for (std::uint32_t i = 1; i <= m; ++i) {
                Fel s = 0;
                for (std::uint32_t j = 0; j <= dg; ++j) {
                    const Fel wja = tw.pow(omega, static_cast<long long>(j) + a);
                    const Fel term = tw.mul(tw.mul(wja, c[j]),
                                            tw.pow(alpha, static_cast<long long>(i) * (j + a)));
                    s = tw.add(s, term);
                }
                hc[m - i] = s;
            }
            break;
        }
    }
    return Poly(tower, std::move(hc));
}

Multipliers case_multipliers(const GrCase& grcase, const std::shared_ptr<const FieldTower>& tower) {
    const auto& tw = *tower;
    const std::uint32_t q = grcase.q, n = q + 1;
    Fel base = 1;
    switch (grcase.tag) {
        case GrCaseTag::g1_odd_odd:
            base = tw.neg(1);
            break;
        case GrCaseTag::g1_even_even:
            // the unique square root of omega^{q+1} in F_q
            base = tw.pow(tw.omega(), static_cast<long long>(q) * (q + 1) / 2);
            break;
        case GrCaseTag::g2_kodd_qeven:
            base = 1;
            break;
        case GrCaseTag::g3_keven_qodd:
            base = tw.neg(tw.pow(tw.omega(), q + 1));
            break;
    }
    if (!tw.in_base(base)) throw std::logic_error("case multiplier left the base field");
    Multipliers theta(n);
    Fel acc = 1;
    for (std::uint32_t s = 0; s < n; ++s) {
        theta[s] = acc;
        acc = tw.mul(acc, base);
    }
    return theta;
}

LinearCode segre_code(std::uint32_t hh, std::uint32_t e) {
    if (hh < 1 || e < 1) throw std::invalid_argument("need hh >= 1 and e >= 1");
    if (std::gcd(e, hh) != 1) throw std::invalid_argument("need gcd(e, hh) = 1");
    auto tower = make_tower(2, hh);
    const auto& tw = *tower;
    const std::uint32_t q = tw.q(), n = q + 1;
    const std::uint64_t ex = 1ull << e;
    std::vector<std::vector<Fel>> rows(4, std::vector<Fel>(n, 0));
    for (Fel t = 0; t < q; ++t) {
        rows[0][t] = 1;
        rows[1][t] = t;
        rows[2][t] = tw.pow(t, static_cast<long long>(ex));
        rows[3][t] = tw.pow(t, static_cast<long long>(ex + 1));
    }
    rows[3][q] = 1;
    return LinearCode::from_rows(tower, n, rows);
}

LinearCode glynn_code() {
    auto tower = make_tower(3, 2);
    const auto& tw = *tower;
    const Fel minus_one = tw.neg(1);
    Fel eta = 0;
    for (Fel c = 0; c < tw.q(); ++c)
        if (tw.pow(c, 4) == minus_one) {
            eta = c;
            break;
        }
    if (eta == 0) throw std::logic_error("no fourth root of -1 in F_9");
    const std::uint32_t q = tw.q(), n = q + 1;
    std::vector<std::vector<Fel>> rows(5, std::vector<Fel>(n, 0));
    for (Fel t = 0; t < q; ++t) {
        rows[0][t] = 1;
        rows[1][t] = t;
        rows[2][t] = tw.add(tw.mul(t, t), tw.mul(eta, tw.pow(t, 6)));
        rows[3][t] = tw.pow(t, 3);
        rows[4][t] = tw.pow(t, 4);
    }
    rows[4][q] = 1;
    return LinearCode::from_rows(tower, n, rows);
}

} // namespace grcert
