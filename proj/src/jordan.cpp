#include "quotforge/jordan.hpp"

namespace quotforge {

void require_commuting_nilpotent(const Matrix& b1, const Matrix& b2) {
    if (!b1.is_square() || !b2.is_square() || b1.rows() != b2.rows()) {
        throw ShapeError("operators must be square of equal size");
    }
    if (b1.field() != b2.field()) throw FieldMismatchError("operators over different fields");
    if (b1 * b2 != b2 * b1) throw std::invalid_argument("operators do not commute");
    if (!is_nilpotent(b1)) throw std::invalid_argument("first operator is not nilpotent");
    if (!is_nilpotent(b2)) throw std::invalid_argument("second operator is not nilpotent");
}

std::vector<Subspace> kernel_filtration(const Matrix& b1) {
    if (!b1.is_square()) throw ShapeError("filtration of a non-square matrix");
    if (!is_nilpotent(b1)) throw std::invalid_argument("filtration of a non-nilpotent operator");
    const FieldSpec f = b1.field();
    const std::size_t d = b1.rows();
    std::vector<Subspace> filtration;
    filtration.reserve(d + 1);
    Matrix power = Matrix::identity(f, d);
    // V_i = Ker(B1^{d-i}); build from the top power down
    std::vector<Matrix> powers;
    powers.reserve(d + 1);
    powers.push_back(power);
    for (std::size_t i = 1; i <= d; ++i) {
        power = power * b1;
        powers.push_back(power);
    }
    for (std::size_t i = 0; i <= d; ++i) {
        filtration.push_back(kernel_basis(powers[d - i]));
    }
    return filtration;
}

std::vector<std::size_t> jordan_type(const Matrix& b1) {
    if (!b1.is_square()) throw ShapeError("jordan type of a non-square matrix");
    if (!is_nilpotent(b1)) throw std::invalid_argument("jordan type of a non-nilpotent operator");
    const std::size_t d = b1.rows();
    std::vector<std::size_t> ranks;  // rank of B1^s for s = 0..d
    ranks.reserve(d + 1);
    Matrix power = Matrix::identity(b1.field(), d);
    ranks.push_back(d);
    for (std::size_t s = 1; s <= d; ++s) {
        power = power * b1;
        ranks.push_back(rank(power));
    }
    std::vector<std::size_t> type;
    for (std::size_t s = 1; s <= d; ++s) {
        const std::size_t blocks_at_least_s = ranks[s - 1] - ranks[s];
        for (std::size_t i = type.size(); i < blocks_at_least_s; ++i) type.push_back(0);
        for (std::size_t i = 0; i < blocks_at_least_s; ++i) type[i] += 1;
    }
    return type;  // built non-increasing
}

namespace {

// Basis of the quotient adapted to the kernel flag of a nilpotent map,
// emitted with nilpotency order descending so the map sends each vector
// into the span of strictly later ones.
std::vector<Vec> descending_flag_basis(const Matrix& nbar) {
    const FieldSpec f = nbar.field();
    const std::size_t m = nbar.rows();
    std::vector<Vec> chosen;
    if (m == 0) return chosen;

    std::vector<Subspace> kernels;  // kernels[j] = Ker(nbar^{j+1})
    Matrix power = nbar;
    while (true) {
        kernels.push_back(kernel_basis(power));
        if (kernels.back().dim() == m) break;
        if (kernels.size() > m) throw std::logic_error("induced operator is not nilpotent");
        power = power * nbar;
    }
    const std::size_t t = kernels.size();

    for (std::size_t j = t; j >= 1; --j) {
        RowReducer seen(f, m);
        if (j >= 2) {
            for (const Vec& row : kernels[j - 2].basis()) seen.insert(row);
        }
        for (const Vec& v : chosen) seen.insert(v);
        for (const Vec& row : kernels[j - 1].basis()) {
            if (seen.insert(row)) chosen.push_back(row);
        }
    }
    return chosen;
}

}  // namespace

JordanFrame compatible_jordan_frame(const Matrix& b1, const Matrix& b2) {
    require_commuting_nilpotent(b1, b2);
    const FieldSpec f = b1.field();
    const std::size_t d = b1.rows();

    const std::vector<Subspace> filtration = kernel_filtration(b1);

    JordanFrame frame{f, d, 0, {}, {}, {}};

    for (std::size_t stage = 1; stage <= d; ++stage) {
        const Subspace& numerator = filtration[stage - 1];

        RowReducer denominator(f, d);
        if (stage >= 2) {
            for (const Vec& row : filtration[stage - 2].basis()) {
                denominator.insert(b1.apply(row));
            }
        }
        for (const Vec& row : filtration[stage].basis()) denominator.insert(row);
        if (denominator.dim() == numerator.dim()) continue;

        // canonical representatives of the quotient numerator / denominator
        std::vector<Vec> reps;
        RowReducer combined(denominator.to_subspace());
        for (const Vec& row : numerator.basis()) {
            if (combined.insert(row)) reps.push_back(denominator.reduce(row));
        }
        const std::size_t m = reps.size();

        // induced action of the second operator on the quotient
        std::vector<Vec> coordinate_basis = denominator.to_subspace().basis();
        const std::size_t den_dim = coordinate_basis.size();
        coordinate_basis.insert(coordinate_basis.end(), reps.begin(), reps.end());
        Matrix nbar(f, m, m);
        for (std::size_t c = 0; c < m; ++c) {
            const Vec image = b2.apply(reps[c]);
            const auto coords = express_in_basis(coordinate_basis, image, f);
            if (!coords) throw std::logic_error("second operator does not preserve the filtration");
            for (std::size_t i = 0; i < m; ++i) nbar.set(i, c, (*coords)[den_dim + i]);
        }

        const std::vector<Vec> order = descending_flag_basis(nbar);
        const std::size_t mu = d - stage + 1;
        for (const Vec& coords : order) {
            Vec lead = zero_vec(f, d);
            for (std::size_t i = 0; i < m; ++i) {
                lead = vec_add(lead, vec_scale(coords[i], reps[i]));
            }
            lead = denominator.reduce(lead);
            std::vector<Vec> chain;
            chain.reserve(mu);
            chain.push_back(lead);
            for (std::size_t j = 1; j < mu; ++j) chain.push_back(b1.apply(chain.back()));
            frame.blocks.push_back(std::move(chain));
            frame.mu.push_back(mu);
            frame.provenance.push_back(stage);
        }
    }

    frame.k = frame.blocks.size();

    // sanity: the collected vectors must form a basis of V
    std::vector<Vec> all;
    for (const auto& block : frame.blocks) all.insert(all.end(), block.begin(), block.end());
    if (all.size() != d || Subspace::span_of(f, d, all).dim() != d) {
        throw std::logic_error("frame construction did not produce a basis");
    }
    return frame;
}

std::vector<Vec> JordanFrame::interleaved_basis() const {
    std::vector<Vec> out;
    out.reserve(d);
    const std::size_t depth = mu.empty() ? 0 : mu.front();
    for (std::size_t j = 0; j < depth; ++j) {
        for (std::size_t i = 0; i < k; ++i) {
            if (j < mu[i]) out.push_back(blocks[i][j]);
        }
    }
    return out;
}

std::vector<Vec> JordanFrame::leading_vectors() const {
    std::vector<Vec> out;
    out.reserve(k);
    for (const auto& block : blocks) out.push_back(block.front());
    return out;
}

Matrix JordanFrame::companion_matrix() const {
    // images of the interleaved basis under the block shift, solved back to
    // standard coordinates
    const std::vector<Vec> basis = interleaved_basis();
    std::vector<Vec> images;
    images.reserve(basis.size());
    const std::size_t depth = mu.empty() ? 0 : mu.front();
    for (std::size_t j = 0; j < depth; ++j) {
        for (std::size_t i = 0; i < k; ++i) {
            if (j >= mu[i]) continue;
            if (i + 1 < k && j < mu[i + 1]) {
                images.push_back(blocks[i + 1][j]);
            } else {
                images.push_back(zero_vec(field, d));
            }
        }
    }
    const Matrix c = Matrix::from_columns(field, basis);
    const Matrix e = Matrix::from_columns(field, images);
    const auto ci = inverse(c);
    if (!ci) throw std::logic_error("frame basis is singular");
    return e * *ci;
}

namespace {

bool strictly_lower_triangular(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i; j < m.cols(); ++j) {
            if (!m(i, j).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace

FrameCheck verify_frame(const JordanFrame& frame, const Matrix& b1, const Matrix& b2) {
    FrameCheck check;
    const FieldSpec f = frame.field;
    const std::size_t d = frame.d;

    auto complain = [&](std::string msg) { check.violations.push_back(std::move(msg)); };

    if (!b1.is_square() || b1.rows() != d || !b2.is_square() || b2.rows() != d) {
        throw ShapeError("frame size differs from operator size");
    }
    if (frame.k != frame.blocks.size() || frame.k != frame.mu.size()) {
        complain("inconsistent block bookkeeping");
        return check;
    }
    std::size_t total = 0;
    for (std::size_t i = 0; i < frame.k; ++i) {
        if (frame.blocks[i].size() != frame.mu[i]) {
            complain("block " + std::to_string(i + 1) + " length differs from its mu");
            return check;
        }
        if (i + 1 < frame.k && frame.mu[i] < frame.mu[i + 1]) {
            complain("block sizes are not non-increasing");
            return check;
        }
        total += frame.mu[i];
    }
    if (total != d) {
        complain("block sizes do not sum to d");
        return check;
    }

    std::vector<Vec> all;
    for (const auto& block : frame.blocks) all.insert(all.end(), block.begin(), block.end());
    check.basis_ok = Subspace::span_of(f, d, all).dim() == d;
    if (!check.basis_ok) complain("frame vectors do not form a basis");

    check.shift_ok = true;
    for (std::size_t i = 0; i < frame.k; ++i) {
        const auto& block = frame.blocks[i];
        for (std::size_t j = 0; j + 1 < block.size(); ++j) {
            if (b1.apply(block[j]) != block[j + 1]) {
                check.shift_ok = false;
                complain("B1 does not shift block " + std::to_string(i + 1) + " at position " + std::to_string(j + 1));
            }
        }
        if (!is_zero_vec(b1.apply(block.back()))) {
            check.shift_ok = false;
            complain("B1 does not kill the end of block " + std::to_string(i + 1));
        }
    }

    check.leading_ok = true;
    const Subspace image = column_space(b1);
    for (std::size_t i = 0; i < frame.k; ++i) {
        std::vector<Vec> allowed = image.basis();
        for (std::size_t k2 = i + 1; k2 < frame.k; ++k2) allowed.push_back(frame.blocks[k2].front());
        const Subspace span = Subspace::span_of(f, d, allowed);
        if (!span.contains(b2.apply(frame.blocks[i].front()))) {
            check.leading_ok = false;
            complain("B2 image of leading vector " + std::to_string(i + 1) + " escapes later leads + B1 V");
        }
    }

    if (check.basis_ok) {
        const std::vector<Vec> basis = frame.interleaved_basis();
        const Matrix b2_in = matrix_in_basis(b2, basis);
        const Matrix companion_in = matrix_in_basis(frame.companion_matrix(), basis);
        check.triangular_ok = strictly_lower_triangular(b2_in) && strictly_lower_triangular(companion_in);
        if (!check.triangular_ok) complain("operators are not strictly lower triangular in the interleaved order");
    }
    return check;
}

}  // namespace quotforge
