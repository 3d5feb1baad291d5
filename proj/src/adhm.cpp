#include "quotforge/adhm.hpp"

#include <algorithm>
#include <map>

namespace quotforge {

QuotDatum make_datum(Matrix b1, Matrix b2, std::vector<Vec> vectors) {
    QuotDatum datum{b1.field(), b1.rows(), vectors.size(), std::move(b1), std::move(b2), std::move(vectors)};
    return datum;
}

std::string violation_name(DatumViolation v) {
    switch (v) {
        case DatumViolation::shape_mismatch: return "shape_mismatch";
        case DatumViolation::field_mismatch: return "field_mismatch";
        case DatumViolation::no_marked_vectors: return "no_marked_vectors";
        case DatumViolation::non_commuting: return "non_commuting";
        case DatumViolation::b1_not_nilpotent: return "b1_not_nilpotent";
        case DatumViolation::b2_not_nilpotent: return "b2_not_nilpotent";
    }
    return "unknown";
}

std::string ValidationReport::summary() const {
    if (ok()) return "valid";
    std::string out;
    for (const ValidationIssue& issue : issues) {
        if (!out.empty()) out += "; ";
        out += violation_name(issue.kind) + ": " + issue.detail;
    }
    return out;
}

ValidationReport validate(const QuotDatum& datum) {
    ValidationReport report;
    auto fail = [&](DatumViolation kind, std::string detail) {
        report.issues.push_back({kind, std::move(detail)});
    };

    if (datum.d == 0) fail(DatumViolation::shape_mismatch, "d must be positive");
    if (datum.b1.rows() != datum.d || datum.b1.cols() != datum.d) {
        fail(DatumViolation::shape_mismatch, "B1 is not d x d");
    }
    if (datum.b2.rows() != datum.d || datum.b2.cols() != datum.d) {
        fail(DatumViolation::shape_mismatch, "B2 is not d x d");
    }
    if (datum.r == 0 || datum.vectors.empty()) {
        fail(DatumViolation::no_marked_vectors, "at least one marked vector is required");
    }
    if (datum.r != datum.vectors.size()) {
        fail(DatumViolation::shape_mismatch, "r differs from the number of vectors");
    }
    for (std::size_t j = 0; j < datum.vectors.size(); ++j) {
        if (datum.vectors[j].size() != datum.d) {
            fail(DatumViolation::shape_mismatch, "vector " + std::to_string(j + 1) + " has wrong length");
        }
        for (const Scalar& x : datum.vectors[j]) {
            if (x.field() != datum.field) {
                fail(DatumViolation::field_mismatch, "vector " + std::to_string(j + 1) + " entries off-field");
                break;
            }
        }
    }
    if (datum.b1.field() != datum.field || datum.b2.field() != datum.field) {
        fail(DatumViolation::field_mismatch, "operator field differs from datum field");
    }
    if (!report.ok()) return report;  // arithmetic checks need consistent shapes

    if (datum.b1 * datum.b2 != datum.b2 * datum.b1) {
        fail(DatumViolation::non_commuting, "B1 B2 != B2 B1");
    }
    if (!is_nilpotent(datum.b1)) fail(DatumViolation::b1_not_nilpotent, "B1^d != 0");
    if (!is_nilpotent(datum.b2)) fail(DatumViolation::b2_not_nilpotent, "B2^d != 0");
    return report;
}

void require_valid(const QuotDatum& datum) {
    const ValidationReport report = validate(datum);
    if (!report.ok()) throw std::invalid_argument("invalid datum: " + report.summary());
}

namespace {

struct Candidate {
    WitnessMonomial monomial;
    Vec image;
};

// candidates within one degree, ordered by descending power of B1 then by j
bool candidate_before(const Candidate& x, const Candidate& y) {
    if (x.monomial.a != y.monomial.a) return x.monomial.a > y.monomial.a;
    return x.monomial.j < y.monomial.j;
}

}  // namespace

StabilityCertificate generated_subspace(const QuotDatum& datum) {
    require_valid(datum);
    const FieldSpec f = datum.field;
    const std::size_t d = datum.d;

    RowReducer reducer(f, d);
    std::vector<WitnessMonomial> witnesses;
    std::vector<Candidate> admitted;  // admitted at the current degree

    for (std::size_t j = 0; j < datum.r; ++j) {
        Candidate c{{0, 0, j + 1}, datum.vectors[j]};
        if (reducer.insert(c.image)) {
            witnesses.push_back(c.monomial);
            admitted.push_back(std::move(c));
        }
    }

    std::size_t degree = 0;
    while (!admitted.empty() && reducer.dim() < d && degree + 1 < d) {
        ++degree;
        // expand last round's admitted monomials by both operators, dedupe
        std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Vec> frontier;
        for (const Candidate& c : admitted) {
            frontier.try_emplace({c.monomial.a + 1, c.monomial.b, c.monomial.j}, datum.b1.apply(c.image));
            frontier.try_emplace({c.monomial.a, c.monomial.b + 1, c.monomial.j}, datum.b2.apply(c.image));
        }
        std::vector<Candidate> candidates;
        candidates.reserve(frontier.size());
        for (auto& [key, image] : frontier) {
            candidates.push_back({{std::get<0>(key), std::get<1>(key), std::get<2>(key)}, std::move(image)});
        }
        std::sort(candidates.begin(), candidates.end(), candidate_before);

        std::vector<Candidate> next;
        for (Candidate& c : candidates) {
            if (reducer.insert(c.image)) {
                witnesses.push_back(c.monomial);
                next.push_back(std::move(c));
            }
        }
        if (next.empty()) break;  // closure reached
        admitted = std::move(next);
    }

    StabilityCertificate cert{reducer.dim() == d, reducer.to_subspace(), std::move(witnesses)};
    return cert;
}

bool is_stable(const QuotDatum& datum) {
    return generated_subspace(datum).stable;
}

bool in_w_slice(const QuotDatum& datum) {
    require_valid(datum);
    QuotDatum first = datum;
    first.vectors = {datum.vectors[0]};
    first.r = 1;
    return is_stable(first);
}

std::size_t stabilizer_lie_dimension(const QuotDatum& datum) {
    require_valid(datum);
    const FieldSpec f = datum.field;
    const std::size_t d = datum.d;
    LinearSystem system(f, d * d);
    add_intertwine_equations(system, datum.b1, datum.b1);
    add_intertwine_equations(system, datum.b2, datum.b2);
    const Vec zero = zero_vec(f, d);
    for (const Vec& v : datum.vectors) add_apply_equations(system, v, zero);
    const auto solution = solve_affine(system);
    if (!solution) throw std::logic_error("homogeneous system reported inconsistent");
    return solution->homogeneous.dim();
}

QuotDatum conjugated(const QuotDatum& datum, const Matrix& g) {
    const auto gi = inverse(g);
    if (!gi) throw std::invalid_argument("conjugating matrix is singular");
    QuotDatum out = datum;
    out.b1 = g * datum.b1 * *gi;
    out.b2 = g * datum.b2 * *gi;
    for (std::size_t j = 0; j < datum.vectors.size(); ++j) {
        out.vectors[j] = g.apply(datum.vectors[j]);
    }
    return out;
}

std::optional<Matrix> orbit_witness(const QuotDatum& a, const QuotDatum& b) {
    require_valid(a);
    require_valid(b);
    if (a.field != b.field) throw FieldMismatchError("orbit test across fields");
    if (a.d != b.d || a.r != b.r) throw ShapeError("orbit test across shapes");
    if (!is_stable(a) || !is_stable(b)) {
        throw std::invalid_argument("orbit_witness needs stable data");
    }
    const FieldSpec f = a.field;
    const std::size_t d = a.d;

    LinearSystem system(f, d * d);
    add_intertwine_equations(system, a.b1, b.b1);
    add_intertwine_equations(system, a.b2, b.b2);
    for (std::size_t j = 0; j < a.r; ++j) {
        add_apply_equations(system, a.vectors[j], b.vectors[j]);
    }
    const auto solution = solve_affine(system);
    if (!solution) return std::nullopt;
    // stability forces a trivial homogeneous part and an invertible witness
    if (solution->homogeneous.dim() != 0) {
        throw std::logic_error("intertwiner between stable data is not unique");
    }
    Matrix g = matrix_from_flat(f, d, solution->particular);
    if (!inverse(g)) throw std::logic_error("intertwiner between stable data is singular");
    return g;
}

}  // namespace quotforge
