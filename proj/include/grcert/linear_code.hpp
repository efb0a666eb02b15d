#ifndef GRCERT_LINEAR_CODE_HPP
#define GRCERT_LINEAR_CODE_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "grcert/field_tower.hpp"

namespace grcert {

/// Thrown when an enumeration would exceed its configured cap. Callers report
/// the case as untested; the result is never silently approximated.
struct cap_exceeded : std::runtime_error {
    std::uint64_t required;
    explicit cap_exceeded(std::uint64_t req)
        : std::runtime_error("enumeration cap exceeded"), required(req) {}
};

/// Length-n vector of nonzero base-field elements (a diagonal coordinate
/// scaling).
using Multipliers = std::vector<Fel>;

/// A linear code over F_q held as its reduced-row-echelon generator matrix,
/// so equal codes have identical matrices. Entries are base-field encodings.
class LinearCode {
  public:
    /// Canonical code spanned by the given rows; zero rows are dropped.
    static LinearCode from_rows(std::shared_ptr<const FieldTower> tower, std::uint32_t n,
                                const std::vector<std::vector<Fel>>& rows);

    const std::shared_ptr<const FieldTower>& tower() const { return tw_; }
    std::uint32_t n() const { return n_; }
    std::uint32_t k() const { return k_; }
    const std::vector<std::uint32_t>& pivots() const { return pivots_; }
    std::span<const Fel> row(std::uint32_t i) const { return {mat_.data() + std::size_t(i) * n_, n_}; }
    Fel at(std::uint32_t i, std::uint32_t j) const { return mat_[std::size_t(i) * n_ + j]; }
    const std::vector<Fel>& matrix() const { return mat_; }

    bool equals(const LinearCode& other) const;
    bool contains(std::span<const Fel> word) const;

    /// Euclidean orthogonal complement; dual of the dual returns the code.
    LinearCode dual() const;

    /// Coordinate-wise scaling by theta (all entries nonzero).
    LinearCode diag_scale(const Multipliers& theta) const;

    /// Span of coordinatewise products of basis-row pairs.
    LinearCode schur_square() const;

    /// True iff the eta-twisted coordinate shift maps the code into itself
    /// (eta = 1 is the plain cyclic predicate).
    bool is_constacyclic(Fel eta) const;

    /// Singleton-bound check via k-column minors: true iff every k columns of
    /// the generator matrix are linearly independent (equivalently,
    /// d = n - k + 1). Never enumerates codewords.
    bool is_mds() const;

  private:
    LinearCode() = default;
    std::shared_ptr<const FieldTower> tw_;
    std::uint32_t n_ = 0, k_ = 0;
    std::vector<Fel> mat_;
    std::vector<std::uint32_t> pivots_;
};

inline constexpr std::uint64_t default_distance_cap = 100'000'000;

/// Number of codewords examined by projective enumeration, (q^k - 1)/(q - 1),
/// saturated to 2^64-1 on overflow.
std::uint64_t projective_message_count(std::uint32_t q, std::uint32_t k);

/// Exact minimum weight by enumerating one codeword per scalar class.
/// Parallelised when built with OpenMP; the result does not depend on the
/// thread count. Throws cap_exceeded when the enumeration would be larger
/// than cap.
std::uint32_t min_distance(const LinearCode& c, std::uint64_t cap = default_distance_cap);

/// Single-threaded reference implementation of min_distance, kept for
/// cross-checking and benchmarking the parallel kernel.
std::uint32_t min_distance_serial(const LinearCode& c, std::uint64_t cap = default_distance_cap);

/// Codeword counts per weight, index 0..n. Entry 0 is 1; entries sum to q^k.
std::vector<std::uint64_t> weight_distribution(const LinearCode& c,
                                               std::uint64_t cap = default_distance_cap);
std::vector<std::uint64_t> weight_distribution_serial(const LinearCode& c,
                                                      std::uint64_t cap = default_distance_cap);

/// For a code C over F_Q with Q = q^2: the F_q-code
/// { x : sum_i x_i u_i v_i^q = 0 for all u, v in C }, returned over the
/// tower of F_q. Requires the extension degree of C's tower to be even.
LinearCode hermitian_puncture_code(const LinearCode& c);

/// Basis of { y : M y^T = 0 } over the tower's base field.
std::vector<std::vector<Fel>> nullspace(const std::shared_ptr<const FieldTower>& tower,
                                        const std::vector<std::vector<Fel>>& rows, std::uint32_t n);

/// Generator matrix file: one header line "p h n k", then k rows of n
/// canonical encodings.
void save_matrix(std::ostream& os, const LinearCode& c);
LinearCode load_matrix(std::istream& is);

} // namespace grcert

#endif
