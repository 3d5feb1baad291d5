#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quotforge/linalg.hpp"

namespace quotforge {

/// A candidate point (B1, B2, v_1, ..., v_r): two d x d operators and r
/// marked vectors over one field. Construction does not enforce the
/// membership conditions; validate() checks them.
struct QuotDatum {
    FieldSpec field;
    std::size_t d = 0;
    std::size_t r = 0;
    Matrix b1;
    Matrix b2;
    std::vector<Vec> vectors;
};

QuotDatum make_datum(Matrix b1, Matrix b2, std::vector<Vec> vectors);

enum class DatumViolation {
    shape_mismatch,
    field_mismatch,
    no_marked_vectors,
    non_commuting,
    b1_not_nilpotent,
    b2_not_nilpotent,
};

std::string violation_name(DatumViolation v);

struct ValidationIssue {
    DatumViolation kind;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string summary() const;
};

/// Checks membership of the datum in the pair variety times V^r: shapes and
/// fields consistent, r >= 1, the operators commute, and both are nilpotent.
ValidationReport validate(const QuotDatum& datum);

/// Throws std::invalid_argument with the report text unless validate passes.
void require_valid(const QuotDatum& datum);

/// Index of a spanning monomial: B1^a B2^b applied to v_j (j is 1-based).
struct WitnessMonomial {
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t j = 1;
    bool operator==(const WitnessMonomial&) const = default;
};

struct StabilityCertificate {
    bool stable = false;
    Subspace generated;
    std::vector<WitnessMonomial> witness_monomials;
};

/// Smallest subspace invariant under both operators and containing all
/// marked vectors, with the monomials whose images index a basis of it.
/// Closure runs breadth-first by total degree a+b and stops at the first
/// round with no growth; within a degree candidates are taken with the
/// power of B1 descending, then by vector index, so the witness list is
/// deterministic (graded-lexicographic).
StabilityCertificate generated_subspace(const QuotDatum& datum);

/// True iff the generated subspace is all of V.
bool is_stable(const QuotDatum& datum);

/// True iff (B1, B2, v_1) alone is stable, i.e. the first vector is cyclic.
bool in_w_slice(const QuotDatum& datum);

/// Dimension of {X : X B_i = B_i X, X v_j = 0 for all j}; zero for every
/// stable datum.
std::size_t stabilizer_lie_dimension(const QuotDatum& datum);

/// Simultaneous base change: (g B1 g^-1, g B2 g^-1, g v_1, ..., g v_r).
QuotDatum conjugated(const QuotDatum& datum, const Matrix& g);

/// Solves g B_i^(a) = B_i^(b) g, g v_j^(a) = v_j^(b) for g. Both inputs must
/// be valid and stable (the uniqueness and invertibility arguments need
/// stability); returns the unique invertible witness, or nullopt when the
/// data lie on distinct orbits.
std::optional<Matrix> orbit_witness(const QuotDatum& a, const QuotDatum& b);

}  // namespace quotforge
