#ifndef GRCERT_EQUIVALENCE_HPP
#define GRCERT_EQUIVALENCE_HPP

#include <optional>
#include <string>

#include "grcert/constructions.hpp"

namespace grcert {

inline constexpr std::uint64_t default_nullspace_cap = 1'000'000;

/// Outcome of a diagonal-equivalence search. When `exhaustive` is true and
/// theta is empty, no equivalence exists; otherwise an empty theta only means
/// none was found within the candidate cap.
struct DiagSearch {
    std::optional<Multipliers> theta;
    std::uint32_t nullspace_dim = 0;
    bool exhaustive = true;
};

/// Searches for theta with C = diag_scale(B, theta). Solves the bilinear
/// orthogonality system for the inverse scalings, then scans its nullspace
/// for an everywhere-nonzero vector; any candidate is validated by explicit
/// reconstruction before it is returned.
DiagSearch diagonal_equivalence(const LinearCode& c, const LinearCode& b,
                                std::uint64_t cap = default_nullspace_cap);

/// Certificate that a code equals a column-scaled Reed-Solomon evaluation
/// code on the given points.
struct GrsWitness {
    std::vector<ProjectivePoint> points;
    Multipliers theta;
};

struct WitnessSearch {
    std::optional<GrsWitness> witness;
    std::uint32_t nullspace_dim = 0;
    bool exhaustive = true;
};

WitnessSearch grs_witness(const LinearCode& c, const std::vector<ProjectivePoint>& points,
                          std::uint64_t cap = default_nullspace_cap);

/// Re-checks a witness from scratch: diag_scale of the evaluation code by
/// theta must equal c.
bool revalidate_witness(const LinearCode& c, const GrsWitness& w);

/// Exhaustive search over coordinate orders for full-length codes
/// (n = q+1). The first three coordinates can be pinned to a fixed frame, so
/// (q-2)! orders remain; refuses towers where that is infeasible.
std::optional<GrsWitness> grs_witness_permutation_search(const LinearCode& c,
                                                         std::uint64_t cap = default_nullspace_cap);

/// Everything the verifier establishes for one (q, k) pair.
struct VerificationReport {
    std::uint32_t q = 0;
    std::uint32_t k = 0;
    GrCase grcase;
    std::uint32_t n = 0;
    std::uint32_t d = 0; // n - k + 1, certified by the minor check when mds
    bool mds = false;
    std::vector<Fel> g;          // generator polynomial, low degree first
    bool g_ok = false;           // subfield + divisibility + constacyclic shift
    Multipliers theta;           // predicted per-coordinate scalings
    bool lemma_equal = false;    // diag_scale(<g>, theta) equals the trace code
    bool h_a_ok = false;         // every shift polynomial evaluates exactly
    std::uint32_t nullspace_dim = 0;
    std::optional<GrsWitness> witness;
    bool ok() const { return g_ok && mds && lemma_equal && h_a_ok && witness.has_value(); }
};

/// Builds the Grassl-Rotteler code for (tower, k) and checks, by explicit
/// computation, everything needed to certify it as a generalised
/// Reed-Solomon code.
VerificationReport verify_gr_code(const std::shared_ptr<const FieldTower>& tower, std::uint32_t k,
                                  std::uint64_t nullspace_cap = default_nullspace_cap);

std::string report_json(const VerificationReport& r);
std::string report_text(const VerificationReport& r);

/// Predicted minimum distance of the Hermitian puncture code of the
/// Grassl-Rotteler code of dimension k over F_{q^2}.
std::uint32_t puncture_distance_formula(std::uint32_t q, std::uint32_t k);

struct PunctureCheck {
    std::uint32_t q = 0, k = 0;
    std::uint32_t puncture_n = 0, puncture_k = 0;
    std::uint32_t formula_d = 0;
    std::uint32_t computed_d = 0; // 0 when untested
    bool match = false;
    bool untested = false; // distance enumeration exceeded its cap
};

/// Builds the GR code over F_{q^2}, punctures it down to F_q and brute-forces
/// the minimum distance for comparison with the formula.
PunctureCheck puncture_distance_check(std::uint32_t q, std::uint32_t k,
                                      std::uint64_t dist_cap = default_distance_cap);

std::string puncture_check_json(const PunctureCheck& r);
std::string puncture_check_text(const PunctureCheck& r);

} // namespace grcert

#endif
