#pragma once

#include <vector>

#include "quotforge/adhm.hpp"
#include "quotforge/jordan.hpp"

namespace quotforge {

/// The companion operator and cyclic vector built from a compatible frame:
/// b2prime commutes with B1, every combination alpha*B2 + beta*b2prime is
/// nilpotent, and (B1, b2prime, w) admits w as a cyclic vector.
struct CompanionPair {
    Matrix b2prime;
    Vec w;
    JordanFrame frame;
};

/// Builds the frame, the block-shift companion and w = e_{1,1}; all three
/// conclusions are verified before returning (a failure is a library bug).
CompanionPair companion_pair(const Matrix& b1, const Matrix& b2);

/// The straight line from a datum to its companion point:
/// Phi(t) = (B1, t B2' + (1-t) B2, t w + (1-t) v_1, v_2, ..., v_r).
struct DeformationPath {
    QuotDatum origin;
    CompanionPair companion;
};

DeformationPath make_path(const QuotDatum& datum);

/// Evaluates Phi(t); the result is a valid datum for every t (the pencil is
/// strictly triangular in the frame order, so nilpotency and commutation
/// hold identically).
QuotDatum path_point(const DeformationPath& path, const Scalar& t);

enum class SampleClass { w_slice, stable_only, outside };

struct ConnectSample {
    Scalar t;
    SampleClass cls;
};

struct ConnectCertificate {
    std::vector<ConnectSample> samples;
    Scalar witness_t;
    std::size_t failures = 0;      // samples not in the W-slice
    std::size_t degree_bound = 0;  // d^2 + d
};

/// Walks the deformation line over the deterministic integer schedule
/// t = 0, 1, ..., d^2+d+2, classifies every sample, and returns the first
/// W-slice witness (t = 1 always qualifies, so success is guaranteed).
/// Restricted to rational data: over a small prime field the good set of
/// the affine line can miss every point.
ConnectCertificate connect_to_w(const QuotDatum& datum);

struct CompanionCheckReport {
    bool commutes = false;            // companion commutes with B1
    bool pencil_triangular = false;   // structural proof for all alpha, beta
    std::size_t samples_checked = 0;  // randomized pencil nilpotency draws
    std::size_t sample_failures = 0;
    bool cyclic = false;  // (B1, B2', w) stable
    std::vector<std::size_t> mu;
    bool ok() const { return commutes && pencil_triangular && sample_failures == 0 && cyclic; }
};

/// Checks the three companion conclusions: commutation exactly, pencil
/// nilpotency both structurally (strict triangularity in the frame order)
/// and on random (alpha, beta) draws, and cyclicity exactly.
CompanionCheckReport verify_companion_pencil(const Matrix& b1, const Matrix& b2, std::size_t samples = 32);

}  // namespace quotforge
