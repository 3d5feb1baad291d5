#include "quotforge/json_io.hpp"

namespace quotforge {

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw JsonFormatError("malformed input: " + what);
}

const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

std::size_t count_member(const json& j, const char* key) {
    const json& v = member(j, key);
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0) {
        bad(std::string("\"") + key + "\" must be a positive integer");
    }
    return v.get<std::size_t>();
}

}  // namespace

json field_to_json(const FieldSpec& f) {
    if (f.is_rational()) return json{{"kind", "rational"}};
    return json{{"kind", "prime"}, {"p", f.modulus()}};
}

FieldSpec field_from_json(const json& j) {
    const json& kind = member(j, "kind");
    if (kind == "rational") return FieldSpec::rationals();
    if (kind == "prime") {
        const json& p = member(j, "p");
        if (!p.is_number_unsigned()) bad("\"p\" must be a positive integer");
        try {
            return FieldSpec::prime_field(p.get<std::uint32_t>());
        } catch (const std::invalid_argument& e) {
            bad(e.what());
        }
    }
    bad("field kind must be \"rational\" or \"prime\"");
}

json scalar_to_json(const Scalar& s) {
    if (s.field().is_rational()) return s.str();
    return s.residue_value();
}

Scalar scalar_from_json(const json& j, const FieldSpec& f) {
    try {
        if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
        if (j.is_number_integer()) {
            return f.is_rational() ? Scalar::of_int(f, j.get<long>())
                                   : Scalar::of_int(f, static_cast<long>(j.get<std::int64_t>()));
        }
    } catch (const std::invalid_argument& e) {
        bad(e.what());
    }
    bad("scalar must be a string or an integer");
}

json vec_to_json(const Vec& v) {
    json out = json::array();
    for (const Scalar& x : v) out.push_back(scalar_to_json(x));
    return out;
}

Vec vec_from_json(const json& j, const FieldSpec& f) {
    if (!j.is_array()) bad("vector must be an array");
    Vec out;
    out.reserve(j.size());
    for (const json& x : j) out.push_back(scalar_from_json(x, f));
    return out;
}

json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vec_to_json(m.row(i)));
    return out;
}

Matrix matrix_from_json(const json& j, const FieldSpec& f) {
    if (!j.is_array() || j.empty()) bad("matrix must be a non-empty array of rows");
    std::vector<Vec> rows;
    rows.reserve(j.size());
    for (const json& row : j) rows.push_back(vec_from_json(row, f));
    for (const Vec& row : rows) {
        if (row.size() != rows.front().size()) bad("matrix rows have unequal lengths");
    }
    try {
        return Matrix::from_rows(f, rows);
    } catch (const std::invalid_argument& e) {
        bad(e.what());
    }
}

json datum_to_json(const QuotDatum& datum) {
    json vectors = json::array();
    for (const Vec& v : datum.vectors) vectors.push_back(vec_to_json(v));
    return json{
        {"field", field_to_json(datum.field)}, {"d", datum.d},        {"r", datum.r},
        {"B1", matrix_to_json(datum.b1)},      {"B2", matrix_to_json(datum.b2)},
        {"vectors", std::move(vectors)},
    };
}

QuotDatum datum_from_json(const json& j) {
    const FieldSpec f = field_from_json(member(j, "field"));
    const std::size_t d = count_member(j, "d");
    const std::size_t r = count_member(j, "r");
    Matrix b1 = matrix_from_json(member(j, "B1"), f);
    Matrix b2 = matrix_from_json(member(j, "B2"), f);
    const json& vecs = member(j, "vectors");
    if (!vecs.is_array()) bad("\"vectors\" must be an array");
    std::vector<Vec> vectors;
    vectors.reserve(vecs.size());
    for (const json& v : vecs) vectors.push_back(vec_from_json(v, f));
    return QuotDatum{f, d, r, std::move(b1), std::move(b2), std::move(vectors)};
}

json validation_to_json(const ValidationReport& report) {
    json issues = json::array();
    for (const ValidationIssue& issue : report.issues) {
        issues.push_back(json{{"kind", violation_name(issue.kind)}, {"detail", issue.detail}});
    }
    return json{{"valid", report.ok()}, {"violations", std::move(issues)}};
}

json stability_to_json(const StabilityCertificate& cert, bool w_slice) {
    json witness = json::array();
    for (const WitnessMonomial& m : cert.witness_monomials) {
        witness.push_back(json::array({m.a, m.b, m.j}));
    }
    return json{
        {"stable", cert.stable},
        {"w_slice", w_slice},
        {"generated_dimension", cert.generated.dim()},
        {"witness_monomials", std::move(witness)},
    };
}

json frame_to_json(const JordanFrame& frame) {
    json basis = json::array();
    for (const Vec& column : frame.interleaved_basis()) basis.push_back(vec_to_json(column));
    return json{{"mu", frame.mu}, {"basis", std::move(basis)}};
}

json companion_checks_to_json(const CompanionCheckReport& report) {
    return json{
        {"commutes", report.commutes},
        {"pencil_triangular", report.pencil_triangular},
        {"pencil_samples", json{{"checked", report.samples_checked}, {"failures", report.sample_failures}}},
        {"cyclic", report.cyclic},
        {"mu", report.mu},
        {"ok", report.ok()},
    };
}

json certificate_to_json(const ConnectCertificate& cert) {
    json samples = json::array();
    for (const ConnectSample& s : cert.samples) {
        const char* cls = s.cls == SampleClass::w_slice ? "W" : s.cls == SampleClass::stable_only ? "Ur" : "out";
        samples.push_back(json{{"t", s.t.str()}, {"class", cls}});
    }
    return json{
        {"witness_t", cert.witness_t.str()},
        {"samples", std::move(samples)},
        {"failures", cert.failures},
        {"bound", cert.degree_bound},
    };
}

json presentation_to_json(const SubmodulePresentation& presentation) {
    json generators = json::array();
    for (const Vec& g : presentation.generators) {
        json coeffs = json::object();
        for (std::size_t idx = 0; idx < g.size(); ++idx) {
            if (g[idx].is_zero()) continue;
            const auto& m = presentation.ambient.monomial_at(idx);
            const std::string key =
                std::to_string(m.a) + "," + std::to_string(m.b) + "," + std::to_string(m.j);
            coeffs[key] = scalar_to_json(g[idx]);
        }
        generators.push_back(json{{"monomial_coeffs", std::move(coeffs)}});
    }
    return json{
        {"field", field_to_json(presentation.ambient.field())},
        {"r", presentation.ambient.rank()},
        {"d", presentation.ambient.truncation_order()},
        {"generators", std::move(generators)},
    };
}

SubmodulePresentation presentation_from_json(const json& j) {
    const FieldSpec f = field_from_json(member(j, "field"));
    const std::size_t r = count_member(j, "r");
    const std::size_t d = count_member(j, "d");
    const TruncatedFreeModule ambient(f, r, d);

    const json& gens = member(j, "generators");
    if (!gens.is_array()) bad("\"generators\" must be an array");
    std::vector<Vec> generators;
    generators.reserve(gens.size());
    for (const json& g : gens) {
        const json& coeffs = member(g, "monomial_coeffs");
        if (!coeffs.is_object()) bad("\"monomial_coeffs\" must be an object");
        Vec element = ambient.zero_element();
        for (const auto& [key, value] : coeffs.items()) {
            std::size_t a = 0, b = 0, jj = 0;
            if (std::sscanf(key.c_str(), "%zu,%zu,%zu", &a, &b, &jj) != 3) {
                bad("monomial key must be \"a,b,j\": " + key);
            }
            std::size_t idx = 0;
            try {
                idx = ambient.index_of({a, b, jj});
            } catch (const std::invalid_argument& e) {
                bad(e.what());
            }
            element[idx] = scalar_from_json(value, f);
        }
        generators.push_back(std::move(element));
    }
    return submodule_closure(generators, ambient);
}

json census_to_json(const CensusReport& report) {
    return json{
        {"q", report.q},
        {"d", report.d},
        {"r", report.r},
        {"count_pairs", report.count_pairs.get_str()},
        {"count_stable", report.count_stable.get_str()},
        {"count_w_slice", report.count_w_slice.get_str()},
        {"gl_order", report.gl_order_value.get_str()},
        {"quot_points", report.quot_points.get_str()},
        {"w_points", report.w_points.get_str()},
        {"divisibility_ok", report.divisibility_ok},
        {"w_complement_fraction", report.w_complement_fraction.get_str()},
        {"factorized", report.factorized},
        {"jobs", report.jobs},
    };
}

}  // namespace quotforge
