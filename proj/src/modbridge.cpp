#include "quotforge/modbridge.hpp"

namespace quotforge {

TruncatedFreeModule::TruncatedFreeModule(const FieldSpec& f, std::size_t r, std::size_t d)
    : field_(f), r_(r), d_(d) {
    if (r == 0) throw std::invalid_argument("module rank must be positive");
    if (d == 0) throw std::invalid_argument("truncation order must be positive");
    for (std::size_t deg = 0; deg < d; ++deg) {
        for (std::size_t a = deg + 1; a-- > 0;) {
            const std::size_t b = deg - a;
            for (std::size_t j = 1; j <= r; ++j) {
                monomials_.push_back({a, b, j});
            }
        }
    }
    const std::size_t n = monomials_.size();
    shift_x_.assign(n, n);
    shift_y_.assign(n, n);
    for (std::size_t idx = 0; idx < n; ++idx) {
        const Monomial& m = monomials_[idx];
        if (m.a + m.b + 1 < d) {
            shift_x_[idx] = index_of({m.a + 1, m.b, m.j});
            shift_y_[idx] = index_of({m.a, m.b + 1, m.j});
        }
    }
}

std::size_t TruncatedFreeModule::index_of(const Monomial& m) const {
    if (m.j == 0 || m.j > r_ || m.a + m.b >= d_) {
        throw std::invalid_argument("monomial outside the truncated module");
    }
    const std::size_t deg = m.a + m.b;
    // monomials of lower degree, then higher x-powers within the degree
    const std::size_t before_degree = r_ * (deg * (deg + 1) / 2);
    const std::size_t within = (deg - m.a) * r_ + (m.j - 1);
    return before_degree + within;
}

Vec TruncatedFreeModule::generator(std::size_t j) const {
    Vec e = zero_element();
    e[index_of({0, 0, j})] = Scalar::one(field_);
    return e;
}

Vec TruncatedFreeModule::mul_x(const Vec& element) const {
    if (element.size() != dim()) throw ShapeError("element length differs from module dimension");
    Vec out = zero_element();
    for (std::size_t idx = 0; idx < dim(); ++idx) {
        if (shift_x_[idx] < dim() && !element[idx].is_zero()) {
            out[shift_x_[idx]] = out[shift_x_[idx]] + element[idx];
        }
    }
    return out;
}

Vec TruncatedFreeModule::mul_y(const Vec& element) const {
    if (element.size() != dim()) throw ShapeError("element length differs from module dimension");
    Vec out = zero_element();
    for (std::size_t idx = 0; idx < dim(); ++idx) {
        if (shift_y_[idx] < dim() && !element[idx].is_zero()) {
            out[shift_y_[idx]] = out[shift_y_[idx]] + element[idx];
        }
    }
    return out;
}

SubmodulePresentation submodule_closure(const std::vector<Vec>& generators,
                                        const TruncatedFreeModule& ambient) {
    RowReducer reducer(ambient.field(), ambient.dim());
    std::vector<Vec> frontier;
    for (const Vec& g : generators) {
        if (g.size() != ambient.dim()) throw ShapeError("generator length differs from module dimension");
        if (reducer.insert(g)) frontier.push_back(g);
    }
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const Vec& v : frontier) {
            Vec x = ambient.mul_x(v);
            if (reducer.insert(x)) next.push_back(std::move(x));
            Vec y = ambient.mul_y(v);
            if (reducer.insert(y)) next.push_back(std::move(y));
        }
        frontier = std::move(next);
    }
    const Subspace closure = reducer.to_subspace();
    const std::size_t colength = ambient.dim() - closure.dim();
    return SubmodulePresentation{ambient, generators, closure, colength};
}

QuotDatum quotient_datum(const SubmodulePresentation& presentation) {
    const TruncatedFreeModule& ambient = presentation.ambient;
    const FieldSpec f = ambient.field();
    const std::size_t d = ambient.truncation_order();
    if (presentation.colength != d) {
        throw std::invalid_argument("closure colength " + std::to_string(presentation.colength) +
                                    " differs from the intended length " + std::to_string(d));
    }

    // action stability is part of the contract
    for (const Vec& row : presentation.closure.basis()) {
        if (!presentation.closure.contains(ambient.mul_x(row)) ||
            !presentation.closure.contains(ambient.mul_y(row))) {
            throw std::invalid_argument("closure is not stable under the module actions");
        }
    }

    // quotient basis: non-pivot monomials of the closure's RREF
    std::vector<bool> is_pivot(ambient.dim(), false);
    for (std::size_t p : presentation.closure.pivots()) is_pivot[p] = true;
    std::vector<std::size_t> quotient_monomials;
    for (std::size_t idx = 0; idx < ambient.dim(); ++idx) {
        if (!is_pivot[idx]) quotient_monomials.push_back(idx);
    }

    // coordinates of a class: reduce mod the closure, read off non-pivots
    auto project = [&](const Vec& element) {
        const Vec reduced = presentation.closure.reduce(element);
        Vec out = zero_vec(f, d);
        for (std::size_t i = 0; i < d; ++i) out[i] = reduced[quotient_monomials[i]];
        return out;
    };

    Matrix b1(f, d, d);
    Matrix b2(f, d, d);
    for (std::size_t c = 0; c < d; ++c) {
        Vec basis_element = ambient.zero_element();
        basis_element[quotient_monomials[c]] = Scalar::one(f);
        const Vec x_img = project(ambient.mul_x(basis_element));
        const Vec y_img = project(ambient.mul_y(basis_element));
        for (std::size_t i = 0; i < d; ++i) {
            b1.set(i, c, x_img[i]);
            b2.set(i, c, y_img[i]);
        }
    }
    std::vector<Vec> vectors;
    vectors.reserve(ambient.rank());
    for (std::size_t j = 1; j <= ambient.rank(); ++j) {
        vectors.push_back(project(ambient.generator(j)));
    }

    QuotDatum datum = make_datum(std::move(b1), std::move(b2), std::move(vectors));
    require_valid(datum);
    if (!is_stable(datum)) throw std::logic_error("module quotient produced an unstable datum");
    return datum;
}

SubmodulePresentation presentation_of_datum(const QuotDatum& datum) {
    require_valid(datum);
    if (!is_stable(datum)) {
        throw std::invalid_argument("presentation needs a stable datum (evaluation must be onto)");
    }
    const FieldSpec f = datum.field;
    const std::size_t d = datum.d;
    const TruncatedFreeModule ambient(f, datum.r, d);

    // evaluation matrix: column per monomial, x^a y^b e_j -> B1^a B2^b v_j
    std::vector<Matrix> pow1;
    std::vector<Matrix> pow2;
    pow1.push_back(Matrix::identity(f, d));
    pow2.push_back(Matrix::identity(f, d));
    for (std::size_t e = 1; e < d; ++e) {
        pow1.push_back(pow1.back() * datum.b1);
        pow2.push_back(pow2.back() * datum.b2);
    }
    Matrix evaluation(f, d, ambient.dim());
    for (std::size_t idx = 0; idx < ambient.dim(); ++idx) {
        const auto& m = ambient.monomial_at(idx);
        const Vec image = pow1[m.a].apply(pow2[m.b].apply(datum.vectors[m.j - 1]));
        for (std::size_t i = 0; i < d; ++i) evaluation.set(i, idx, image[i]);
    }

    const Subspace kernel = kernel_basis(evaluation);
    SubmodulePresentation presentation{ambient, kernel.basis(), kernel, ambient.dim() - kernel.dim()};
    if (presentation.colength != d) {
        throw std::logic_error("evaluation kernel has wrong colength");
    }
    return presentation;
}

bool support_check(const Matrix& b1, const Matrix& b2) {
    if (!b1.is_square() || !b2.is_square() || b1.rows() != b2.rows()) {
        throw ShapeError("operators must be square of equal size");
    }
    if (b1.field() != b2.field()) throw FieldMismatchError("operators over different fields");
    if (b1 * b2 != b2 * b1) throw std::invalid_argument("operators do not commute");
    return is_nilpotent(b1) && is_nilpotent(b2);
}

}  // namespace quotforge
