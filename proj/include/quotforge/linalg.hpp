#pragma once

#include <optional>
#include <vector>

#include "quotforge/matrix.hpp"

namespace quotforge {

/// Reduced row-echelon form; returns the pivot column of each nonzero row.
/// Zero rows are dropped. Pivoting picks the first nonzero entry in column
/// order (exact arithmetic needs no magnitude heuristics).
std::vector<std::size_t> rref_in_place(std::vector<Vec>& rows, const FieldSpec& f);

std::size_t rank(const Matrix& m);

/// A subspace of F^n held as its canonical RREF row basis, so two subspaces
/// are equal iff their stored bases are identical.
class Subspace {
  public:
    static Subspace zero(const FieldSpec& f, std::size_t ambient);
    static Subspace full(const FieldSpec& f, std::size_t ambient);
    static Subspace span_of(const FieldSpec& f, std::size_t ambient, const std::vector<Vec>& vectors);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const FieldSpec& field() const { return field_; }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    /// Canonical coset representative: v minus its projection onto the pivot
    /// coordinates. reduce(v) == 0 iff v lies in the subspace; reduce is
    /// linear and idempotent.
    Vec reduce(const Vec& v) const;

    Subspace sum(const Subspace& other) const;

    bool operator==(const Subspace& o) const {
        return field_ == o.field_ && ambient_ == o.ambient_ && basis_ == o.basis_;
    }

  private:
    friend class RowReducer;
    Subspace(const FieldSpec& f, std::size_t ambient) : field_(f), ambient_(ambient) {}

    FieldSpec field_;
    std::size_t ambient_;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

/// Incremental RREF accumulator. The row set is kept in canonical RREF after
/// every insertion.
class RowReducer {
  public:
    RowReducer(const FieldSpec& f, std::size_t ambient);
    explicit RowReducer(const Subspace& s);

    /// Inserts a vector; returns true iff the span grew.
    bool insert(const Vec& v);

    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient() const { return ambient_; }
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }
    Subspace to_subspace() const;

  private:
    FieldSpec field_;
    std::size_t ambient_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

/// Right null space; dim = cols - rank.
Subspace kernel_basis(const Matrix& m);

/// Column space (the image of the matrix as an operator).
Subspace column_space(const Matrix& m);

/// True iff m^d = 0 for d = size of the square matrix m.
bool is_nilpotent(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

/// Coordinates of v in the given (not necessarily reduced) basis list, if v
/// lies in its span.
std::optional<Vec> express_in_basis(const std::vector<Vec>& basis, const Vec& v, const FieldSpec& f);

/// The matrix of the operator `m` in the ordered basis `basis` (columns of
/// the new matrix are coordinates of the images of basis vectors).
Matrix matrix_in_basis(const Matrix& m, const std::vector<Vec>& basis);

/// A system of linear equalities on n unknowns over one field.
class LinearSystem {
  public:
    LinearSystem(const FieldSpec& f, std::size_t unknowns);

    void add_equation(Vec coefficients, Scalar rhs);

    const FieldSpec& field() const { return field_; }
    std::size_t unknowns() const { return unknowns_; }
    std::size_t equations() const { return coefficients_.size(); }
    const std::vector<Vec>& coefficients() const { return coefficients_; }
    const Vec& rhs() const { return rhs_; }

  private:
    FieldSpec field_;
    std::size_t unknowns_;
    std::vector<Vec> coefficients_;
    Vec rhs_;
};

struct AffineSolution {
    Vec particular;        // free unknowns set to zero
    Subspace homogeneous;  // null space of the coefficient matrix
};

/// Solves the affine system; nullopt means inconsistent.
std::optional<AffineSolution> solve_affine(const LinearSystem& system);

/// Equations X*a == b*X on a square unknown X, row-major unknown indexing.
void add_intertwine_equations(LinearSystem& system, const Matrix& a, const Matrix& b);

/// Equations X*v == w on the same unknown X.
void add_apply_equations(LinearSystem& system, const Vec& v, const Vec& w);

/// Reshapes a flat row-major coordinate vector into a d x d matrix.
Matrix matrix_from_flat(const FieldSpec& f, std::size_t d, const Vec& flat);

}  // namespace quotforge
