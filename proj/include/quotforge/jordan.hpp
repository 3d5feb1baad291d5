#pragma once

#include <string>
#include <vector>

#include "quotforge/linalg.hpp"

namespace quotforge {

/// A Jordan basis e_{i,j} (1 <= i <= k, 1 <= j <= mu_i) for the first
/// operator whose leading vectors are additionally compatible with the
/// second operator:
///   (a) B1 e_{i,j} = e_{i,j+1} for j < mu_i and B1 e_{i,mu_i} = 0;
///   (b) B2 e_{i,1} lies in span{e_{k,1} : k > i} + B1 V.
/// Block sizes mu are non-increasing. provenance[i] records the filtration
/// stage the i-th leading vector was lifted from.
struct JordanFrame {
    FieldSpec field;
    std::size_t d = 0;
    std::size_t k = 0;
    std::vector<std::size_t> mu;
    std::vector<std::vector<Vec>> blocks;  // blocks[i][j-1] = e_{i+1,j}
    std::vector<std::size_t> provenance;

    /// Basis in the interleaved order e_{1,1}, ..., e_{k,1}, e_{1,2}, ...
    /// (the order in which the pencil of the second operator and the
    /// companion is strictly lower triangular).
    std::vector<Vec> interleaved_basis() const;

    /// The block-shift companion operator: e_{i,j} -> e_{i+1,j} when the
    /// target exists, 0 otherwise. Expressed in standard coordinates.
    Matrix companion_matrix() const;

    std::vector<Vec> leading_vectors() const;
};

/// The decreasing kernel filtration V_0 = V, V_i = Ker(B1^{d-i}), ...,
/// V_d = 0 of a nilpotent operator; B1 V_i is contained in V_{i+1}.
std::vector<Subspace> kernel_filtration(const Matrix& b1);

/// Builds a frame satisfying (a) and (b) for a commuting nilpotent pair.
/// Leading vectors are chosen per filtration stage from the quotients
/// V_{m-1} / (B1 V_{m-2} + V_m), ordered inside each stage so that the
/// induced second operator is strictly triangular (kernel-flag order,
/// nilpotency order descending), then lifted to their canonical reduced
/// representatives.
JordanFrame compatible_jordan_frame(const Matrix& b1, const Matrix& b2);

struct FrameCheck {
    bool basis_ok = false;
    bool shift_ok = false;       // property (a)
    bool leading_ok = false;     // property (b)
    bool triangular_ok = false;  // both operators strictly lower triangular
                                 // in the interleaved order
    std::vector<std::string> violations;
    bool ok() const { return basis_ok && shift_ok && leading_ok && triangular_ok; }
};

/// Independent check of a frame against the pair: basis-ness, properties
/// (a) and (b), and strict lower-triangularity of the second operator and
/// of the companion in the interleaved order.
FrameCheck verify_frame(const JordanFrame& frame, const Matrix& b1, const Matrix& b2);

/// Jordan type of a nilpotent operator from rank differences:
/// #{i : mu_i >= s} = rank B1^{s-1} - rank B1^s. Non-increasing partition.
std::vector<std::size_t> jordan_type(const Matrix& b1);

/// Shared precondition helper: square, same shape, commuting, nilpotent.
void require_commuting_nilpotent(const Matrix& b1, const Matrix& b2);

}  // namespace quotforge
