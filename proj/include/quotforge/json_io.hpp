#pragma once

#include <json.hpp>

#include "quotforge/adhm.hpp"
#include "quotforge/census.hpp"
#include "quotforge/deform.hpp"
#include "quotforge/jordan.hpp"
#include "quotforge/modbridge.hpp"

namespace quotforge {

/// Thrown on malformed or semantically unparseable JSON input.
struct JsonFormatError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using json = nlohmann::json;

json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const json& j);

json scalar_to_json(const Scalar& s);  // "n/d" string for rationals, integer for GF(p)
Scalar scalar_from_json(const json& j, const FieldSpec& f);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const FieldSpec& f);

json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j, const FieldSpec& f);

json datum_to_json(const QuotDatum& datum);
QuotDatum datum_from_json(const json& j);

json validation_to_json(const ValidationReport& report);
json stability_to_json(const StabilityCertificate& cert, bool w_slice);

/// Frame payload: block sizes and the basis as columns in the interleaved
/// order e_{1,1}, ..., e_{k,1}, e_{1,2}, ...
json frame_to_json(const JordanFrame& frame);

json companion_checks_to_json(const CompanionCheckReport& report);
json certificate_to_json(const ConnectCertificate& cert);

json presentation_to_json(const SubmodulePresentation& presentation);
/// Reads generators and recomputes their closure.
SubmodulePresentation presentation_from_json(const json& j);

/// Census payload; counts are decimal strings. Timing is excluded so that
/// identical inputs give byte-identical payloads.
json census_to_json(const CensusReport& report);

}  // namespace quotforge
