#include "quotforge/linalg.hpp"

#include <algorithm>

namespace quotforge {

std::vector<std::size_t> rref_in_place(std::vector<Vec>& rows, const FieldSpec& f) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t n = rows[0].size();
    std::size_t cur = 0;
    for (std::size_t col = 0; col < n && cur < rows.size(); ++col) {
        std::size_t sel = cur;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[cur], rows[sel]);
        const Scalar inv = rows[cur][col].inverse();
        for (std::size_t j = col; j < n; ++j) rows[cur][j] = inv * rows[cur][j];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == cur || rows[i][col].is_zero()) continue;
            const Scalar factor = rows[i][col];
            for (std::size_t j = col; j < n; ++j) {
                rows[i][j] = rows[i][j] - factor * rows[cur][j];
            }
        }
        pivots.push_back(col);
        ++cur;
    }
    rows.resize(cur, zero_vec(f, n));
    return pivots;
}

std::size_t rank(const Matrix& m) {
    std::vector<Vec> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rref_in_place(rows, m.field()).size();
}

Subspace Subspace::zero(const FieldSpec& f, std::size_t ambient) {
    return Subspace(f, ambient);
}

Subspace Subspace::full(const FieldSpec& f, std::size_t ambient) {
    Subspace s(f, ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        s.basis_.push_back(unit_vec(f, ambient, i));
        s.pivots_.push_back(i);
    }
    return s;
}

Subspace Subspace::span_of(const FieldSpec& f, std::size_t ambient, const std::vector<Vec>& vectors) {
    std::vector<Vec> rows;
    rows.reserve(vectors.size());
    for (const Vec& v : vectors) {
        if (v.size() != ambient) throw ShapeError("spanning vector length differs from ambient dimension");
        rows.push_back(v);
    }
    Subspace s(f, ambient);
    s.pivots_ = rref_in_place(rows, f);
    s.basis_ = std::move(rows);
    return s;
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != ambient_) throw ShapeError("vector length differs from ambient dimension");
    Vec out = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Scalar& c = out[pivots_[i]];
        if (c.is_zero()) continue;
        const Scalar factor = c;
        for (std::size_t j = 0; j < ambient_; ++j) {
            out[j] = out[j] - factor * basis_[i][j];
        }
    }
    return out;
}

bool Subspace::contains(const Vec& v) const {
    return is_zero_vec(reduce(v));
}

bool Subspace::contains(const Subspace& other) const {
    for (const Vec& v : other.basis_) {
        if (!contains(v)) return false;
    }
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (field_ != other.field_) throw FieldMismatchError("mixed subspace fields");
    if (ambient_ != other.ambient_) throw ShapeError("mixed ambient dimensions");
    std::vector<Vec> rows = basis_;
    rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
    return span_of(field_, ambient_, rows);
}

RowReducer::RowReducer(const FieldSpec& f, std::size_t ambient) : field_(f), ambient_(ambient) {}

RowReducer::RowReducer(const Subspace& s) : field_(s.field()), ambient_(s.ambient()) {
    rows_ = s.basis();
    pivots_ = s.pivots();
}

Vec RowReducer::reduce(const Vec& v) const {
    if (v.size() != ambient_) throw ShapeError("vector length differs from ambient dimension");
    Vec out = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar c = out[pivots_[i]];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < ambient_; ++j) {
            out[j] = out[j] - c * rows_[i][j];
        }
    }
    return out;
}

bool RowReducer::insert(const Vec& v) {
    Vec red = reduce(v);
    std::size_t lead = 0;
    while (lead < ambient_ && red[lead].is_zero()) ++lead;
    if (lead == ambient_) return false;
    const Scalar inv = red[lead].inverse();
    for (std::size_t j = lead; j < ambient_; ++j) red[j] = inv * red[j];
    // clear the new pivot column in existing rows, then insert in pivot order
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar c = rows_[i][lead];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < ambient_; ++j) {
            rows_[i][j] = rows_[i][j] - c * red[j];
        }
    }
    const auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
    rows_.insert(rows_.begin() + pos, std::move(red));
    pivots_.insert(pivots_.begin() + pos, lead);
    return true;
}

Subspace RowReducer::to_subspace() const {
    Subspace s(field_, ambient_);
    s.basis_ = rows_;
    s.pivots_ = pivots_;
    return s;
}

Subspace kernel_basis(const Matrix& m) {
    const FieldSpec f = m.field();
    const std::size_t n = m.cols();
    std::vector<Vec> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    const std::vector<std::size_t> pivots = rref_in_place(rows, f);

    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<Vec> gens;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        Vec v = zero_vec(f, n);
        v[c] = Scalar::one(f);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            v[pivots[i]] = -rows[i][c];
        }
        gens.push_back(std::move(v));
    }
    return Subspace::span_of(f, n, gens);
}

Subspace column_space(const Matrix& m) {
    std::vector<Vec> cols;
    cols.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
    return Subspace::span_of(m.field(), m.rows(), cols);
}

bool is_nilpotent(const Matrix& m) {
    if (!m.is_square()) throw ShapeError("nilpotency of a non-square matrix");
    const std::size_t d = m.rows();
    if (d == 0) return true;
    // repeated squaring up to an exponent >= d; nilpotency is equivalent to m^d = 0
    Matrix w = m;
    std::size_t e = 1;
    while (true) {
        if (w.is_zero()) return true;
        if (e >= d) return false;
        w = w * w;
        e *= 2;
    }
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) throw ShapeError("inverse of a non-square matrix");
    const FieldSpec f = m.field();
    const std::size_t n = m.rows();
    std::vector<Vec> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec r = m.row(i);
        Vec id = unit_vec(f, n, i);
        r.insert(r.end(), id.begin(), id.end());
        rows.push_back(std::move(r));
    }
    const std::vector<std::size_t> pivots = rref_in_place(rows, f);
    // singular inputs push pivots into the augmented columns
    if (pivots.size() != n || (n > 0 && pivots.back() >= n)) return std::nullopt;
    Matrix inv(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) inv.set(i, j, rows[i][n + j]);
    }
    return inv;
}

std::optional<Vec> express_in_basis(const std::vector<Vec>& basis, const Vec& v, const FieldSpec& f) {
    // solve for coordinates: stack basis vectors as columns, augment with v
    const std::size_t n = v.size();
    const std::size_t k = basis.size();
    std::vector<Vec> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec row;
        row.reserve(k + 1);
        for (std::size_t j = 0; j < k; ++j) {
            if (basis[j].size() != n) throw ShapeError("basis vector length differs from target");
            row.push_back(basis[j][i]);
        }
        row.push_back(v[i]);
        rows.push_back(std::move(row));
    }
    const std::vector<std::size_t> pivots = rref_in_place(rows, f);
    for (std::size_t p : pivots) {
        if (p == k) return std::nullopt;  // v outside the span
    }
    Vec coords = zero_vec(f, k);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        coords[pivots[i]] = rows[i][k];
    }
    return coords;
}

Matrix matrix_in_basis(const Matrix& m, const std::vector<Vec>& basis) {
    const FieldSpec f = m.field();
    const std::size_t k = basis.size();
    Matrix out(f, k, k);
    for (std::size_t j = 0; j < k; ++j) {
        const auto coords = express_in_basis(basis, m.apply(basis[j]), f);
        if (!coords) throw std::invalid_argument("operator does not preserve the span of the basis");
        for (std::size_t i = 0; i < k; ++i) out.set(i, j, (*coords)[i]);
    }
    return out;
}

LinearSystem::LinearSystem(const FieldSpec& f, std::size_t unknowns)
    : field_(f), unknowns_(unknowns) {}

void LinearSystem::add_equation(Vec coefficients, Scalar rhs) {
    if (coefficients.size() != unknowns_) throw ShapeError("coefficient count differs from unknown count");
    for (const Scalar& c : coefficients) {
        if (c.field() != field_) throw FieldMismatchError("mixed fields in equation");
    }
    if (rhs.field() != field_) throw FieldMismatchError("mixed fields in equation");
    coefficients_.push_back(std::move(coefficients));
    rhs_.push_back(std::move(rhs));
}

std::optional<AffineSolution> solve_affine(const LinearSystem& system) {
    const FieldSpec f = system.field();
    const std::size_t n = system.unknowns();
    std::vector<Vec> rows;
    rows.reserve(system.equations());
    for (std::size_t i = 0; i < system.equations(); ++i) {
        Vec row = system.coefficients()[i];
        row.push_back(system.rhs()[i]);
        rows.push_back(std::move(row));
    }
    const std::vector<std::size_t> pivots = rref_in_place(rows, f);
    for (std::size_t p : pivots) {
        if (p == n) return std::nullopt;  // pivot in the augmented column
    }

    Vec particular = zero_vec(f, n);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        particular[pivots[i]] = rows[i][n];
    }

    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<Vec> gens;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        Vec v = zero_vec(f, n);
        v[c] = Scalar::one(f);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            v[pivots[i]] = -rows[i][c];
        }
        gens.push_back(std::move(v));
    }
    return AffineSolution{std::move(particular), Subspace::span_of(f, n, gens)};
}

void add_intertwine_equations(LinearSystem& system, const Matrix& a, const Matrix& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
        throw ShapeError("intertwine equations need equal square matrices");
    }
    const FieldSpec f = system.field();
    const std::size_t d = a.rows();
    if (system.unknowns() != d * d) throw ShapeError("unknown count is not d*d");
    // (X*a - b*X)[i][j] = sum_k X[i][k] a[k][j] - b[i][k] X[k][j]
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            Vec coeffs = zero_vec(f, d * d);
            for (std::size_t k = 0; k < d; ++k) {
                coeffs[i * d + k] = coeffs[i * d + k] + a(k, j);
                coeffs[k * d + j] = coeffs[k * d + j] - b(i, k);
            }
            system.add_equation(std::move(coeffs), Scalar::zero(f));
        }
    }
}

void add_apply_equations(LinearSystem& system, const Vec& v, const Vec& w) {
    const FieldSpec f = system.field();
    const std::size_t d = v.size();
    if (w.size() != d) throw ShapeError("vector length mismatch");
    if (system.unknowns() != d * d) throw ShapeError("unknown count is not d*d");
    for (std::size_t i = 0; i < d; ++i) {
        Vec coeffs = zero_vec(f, d * d);
        for (std::size_t k = 0; k < d; ++k) coeffs[i * d + k] = v[k];
        system.add_equation(std::move(coeffs), w[i]);
    }
}

Matrix matrix_from_flat(const FieldSpec& f, std::size_t d, const Vec& flat) {
    if (flat.size() != d * d) throw ShapeError("flat vector is not d*d long");
    Matrix m(f, d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) m.set(i, j, flat[i * d + j]);
    }
    return m;
}

}  // namespace quotforge
