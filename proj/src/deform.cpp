#include "quotforge/deform.hpp"

#include <optional>
#include <random>

namespace quotforge {

CompanionPair companion_pair(const Matrix& b1, const Matrix& b2) {
    JordanFrame frame = compatible_jordan_frame(b1, b2);
    Matrix b2prime = frame.companion_matrix();
    Vec w = frame.blocks.front().front();

    if (b1 * b2prime != b2prime * b1) {
        throw std::logic_error("companion does not commute with B1");
    }
    if (!is_nilpotent(b2prime)) {
        throw std::logic_error("companion is not nilpotent");
    }
    const FrameCheck check = verify_frame(frame, b1, b2);
    if (!check.ok()) {
        throw std::logic_error("companion frame failed verification");
    }
    QuotDatum cyclic = make_datum(b1, b2prime, {w});
    if (!is_stable(cyclic)) {
        throw std::logic_error("companion vector is not cyclic");
    }
    return CompanionPair{std::move(b2prime), std::move(w), std::move(frame)};
}

DeformationPath make_path(const QuotDatum& datum) {
    require_valid(datum);
    return DeformationPath{datum, companion_pair(datum.b1, datum.b2)};
}

QuotDatum path_point(const DeformationPath& path, const Scalar& t) {
    const QuotDatum& origin = path.origin;
    if (t.field() != origin.field) throw FieldMismatchError("parameter off the path's field");
    const Scalar one_minus_t = Scalar::one(origin.field) - t;

    QuotDatum out = origin;
    out.b2 = path.companion.b2prime.scaled(t) + origin.b2.scaled(one_minus_t);
    out.vectors[0] = vec_add(vec_scale(t, path.companion.w), vec_scale(one_minus_t, origin.vectors[0]));
    if (!validate(out).ok()) {
        throw std::logic_error("deformation left the pair variety");
    }
    return out;
}

ConnectCertificate connect_to_w(const QuotDatum& datum) {
    require_valid(datum);
    if (!datum.field.is_rational()) {
        throw std::invalid_argument("connect walk is restricted to rational data");
    }
    if (!is_stable(datum)) {
        throw std::invalid_argument("connect walk needs a stable datum");
    }
    const DeformationPath path = make_path(datum);
    const std::size_t bound = datum.d * datum.d + datum.d;

    std::vector<ConnectSample> samples;
    std::optional<Scalar> witness;
    std::size_t failures = 0;

    for (std::size_t i = 0; i <= bound + 2; ++i) {
        const Scalar t = Scalar::of_int(datum.field, static_cast<long>(i));
        const QuotDatum point = path_point(path, t);
        SampleClass cls = SampleClass::outside;
        if (in_w_slice(point)) {
            cls = SampleClass::w_slice;
        } else if (is_stable(point)) {
            cls = SampleClass::stable_only;
        }
        if (cls != SampleClass::w_slice) {
            ++failures;
        } else if (!witness) {
            witness = t;
        }
        samples.push_back({t, cls});
    }
    if (!witness) {
        throw std::logic_error("no W-slice sample found (t = 1 should always qualify)");
    }
    if (failures > bound) {
        throw std::logic_error("more degenerate samples than the degree bound allows");
    }
    return ConnectCertificate{std::move(samples), *witness, failures, bound};
}

namespace {

Scalar small_draw(const FieldSpec& f, std::mt19937_64& rng) {
    if (f.is_rational()) {
        // small integers, avoiding distribution classes for reproducibility
        const long n = static_cast<long>(rng() % 19) - 9;
        return Scalar::of_int(f, n);
    }
    return Scalar::residue(f, rng() % f.modulus());
}

}  // namespace

CompanionCheckReport verify_companion_pencil(const Matrix& b1, const Matrix& b2, std::size_t samples) {
    require_commuting_nilpotent(b1, b2);

    JordanFrame frame = compatible_jordan_frame(b1, b2);
    const Matrix b2prime = frame.companion_matrix();
    const Vec w = frame.blocks.front().front();

    CompanionCheckReport report;
    report.mu = frame.mu;
    report.commutes = (b1 * b2prime == b2prime * b1) && is_nilpotent(b2prime);
    report.pencil_triangular = verify_frame(frame, b1, b2).triangular_ok;
    report.cyclic = is_stable(make_datum(b1, b2prime, {w}));

    std::mt19937_64 rng(0x5eed5eedULL);
    report.samples_checked = samples;
    for (std::size_t i = 0; i < samples; ++i) {
        const Scalar alpha = small_draw(b1.field(), rng);
        const Scalar beta = small_draw(b1.field(), rng);
        const Matrix pencil = b2.scaled(alpha) + b2prime.scaled(beta);
        if (!is_nilpotent(pencil)) ++report.sample_failures;
    }
    return report;
}

}  // namespace quotforge
