#ifndef GRCERT_CONSTRUCTIONS_HPP
#define GRCERT_CONSTRUCTIONS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "grcert/linear_code.hpp"
#include "grcert/polynomial.hpp"

namespace grcert {

/// Point of the projective line over F_q, coordinates (x1, x2) not both zero.
struct ProjectivePoint {
    Fel x1 = 0;
    Fel x2 = 0;
};

/// Canonical representative: (x1/x2, 1) when x2 != 0, else (1, 0).
ProjectivePoint normalize(const FieldTower& tw, const ProjectivePoint& pt);
bool same_point(const FieldTower& tw, const ProjectivePoint& a, const ProjectivePoint& b);

/// The elements of F_q in encoding order followed by the point at infinity.
std::vector<ProjectivePoint> canonical_points(const std::shared_ptr<const FieldTower>& tower);

/// Point for coordinate s is decompose(omega^s), so that
/// (x1 + e*x2)^{q-1} = alpha^s. Length q+1, pairwise distinct.
std::vector<ProjectivePoint> roots_of_unity_points(const std::shared_ptr<const FieldTower>& tower);

/// k x n evaluation matrix of the degree-(k-1) homogeneous monomials:
/// row j, column s is x1(s)^j * x2(s)^{k-1-j}. Its row space is the
/// Reed-Solomon code on the given points; column scalings yield every
/// generalised Reed-Solomon code.
std::vector<std::vector<Fel>> rs_base_matrix(const std::shared_ptr<const FieldTower>& tower,
                                             std::uint32_t k,
                                             const std::vector<ProjectivePoint>& points);

/// Row space of rs_base_matrix as a canonical code.
LinearCode rs_code(const std::shared_ptr<const FieldTower>& tower, std::uint32_t k,
                   const std::vector<ProjectivePoint>& points);

/// Which of the four parity cases a Grassl-Rotteler pair (q, k) falls in.
enum class GrCaseTag { g1_odd_odd, g1_even_even, g2_kodd_qeven, g3_keven_qodd };
std::string to_string(GrCaseTag tag);

struct GrCase {
    GrCaseTag tag;
    std::uint32_t q = 0;
    std::uint32_t k = 0;
    std::uint32_t r = 0;
    Fel eta = 1; // 1 for the cyclic cases, omega^{q+1} for g3
    bool k_even() const { return k % 2 == 0; }
};

/// Code of length n spanned by the shifts of the generator polynomial's
/// coefficient vector. Requires g | X^n - eta with coefficients in F_q.
LinearCode cyclic_code_from_generator(const Poly& g, std::uint32_t n, Fel eta);

/// The case-dispatched Grassl-Rotteler generator polynomial of degree q+1-k,
/// with its parity-case descriptor. Coefficients verified to lie in F_q and
/// to divide X^{q+1} - eta.
std::pair<Poly, GrCase> gr_generator_poly(const std::shared_ptr<const FieldTower>& tower,
                                          std::uint32_t k);

/// The [q+1, k, q+2-k] Grassl-Rotteler cyclic or constacyclic code.
std::pair<LinearCode, GrCase> gr_code(const std::shared_ptr<const FieldTower>& tower,
                                      std::uint32_t k);

/// k odd: the code of coordinatewise traces h(alpha^s) + h(alpha^s)^q over
/// deg h <= (k-1)/2. Dimension exactly k.
LinearCode trace_code(const std::shared_ptr<const FieldTower>& tower, std::uint32_t k);

/// k even: the twisted variant omega^{sq} h(alpha^s) + omega^s h(alpha^s)^q
/// over deg h <= k/2 - 1. Dimension exactly k.
LinearCode twisted_trace_code(const std::shared_ptr<const FieldTower>& tower, std::uint32_t k);

/// The polynomial h_a whose (twisted) trace evaluations reproduce, up to the
/// case multipliers, the a-th shift row of the generator polynomial g.
Poly shift_eval_poly(const GrCase& grcase, const Poly& g, std::uint32_t a);

/// Per-coordinate scalings theta_s turning the Grassl-Rotteler code into the
/// matching trace evaluation code: (-1)^s, nu^s with nu^2 = omega^{q+1},
/// all-ones, and (-omega^{q+1})^s for the four cases respectively.
Multipliers case_multipliers(const GrCase& grcase, const std::shared_ptr<const FieldTower>& tower);

/// Degree bound for shift_eval_poly in the given case: (k-1)/2 when k is odd,
/// k/2 - 1 when k is even.
std::uint32_t shift_eval_degree_bound(const GrCase& grcase);

/// Segre's [q+1, 4, q-2] MDS code over F_q, q = 2^hh with gcd(e, hh) = 1:
/// columns (1, t, t^{2^e}, t^{2^e+1}) plus (0,0,0,1).
LinearCode segre_code(std::uint32_t hh, std::uint32_t e);

/// Glynn's [10, 5, 6] MDS code over F_9: columns (1, t, t^2 + eta t^6, t^3,
/// t^4) plus (0,0,0,0,1), with eta the enc-smallest solution of eta^4 = -1.
LinearCode glynn_code();

} // namespace grcert

#endif
