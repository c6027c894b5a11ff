#pragma once

#include "grsdual/grs.hpp"
#include "grsdual/mobius.hpp"
#include "grsdual/selfdual.hpp"

namespace grsdual {

using Json = nlohmann::ordered_json;

Json field_to_json(const FieldContext& F);
// Rebuilds the context and insists the stored modulus is the canonical one.
FieldPtr field_from_json(const Json& j, uint64_t max_q = kDefaultMaxField);

Json element_to_json(const FieldElement& x);
FieldElement element_from_json(const Json& j, const FieldContext& F);
Json point_to_json(const EvalPoint& p);
EvalPoint point_from_json(const Json& j, const FieldContext& F);

Json code_to_json(const GrsCode& code, bool include_matrix = true);
GrsCode code_from_json(const Json& j, uint64_t max_q = kDefaultMaxField);

Json transform_to_json(const MobiusTransform& g);
MobiusTransform transform_from_json(const Json& j, const FieldContext& F);

Json certificate_to_json(const TransportCertificate& cert);
Json self_dual_report_to_json(const SelfDualReport& rep);
Json mds_report_to_json(const MdsReport& rep);
// Full verification verdict for one code; "pass" combines the parts.
Json verification_report_json(const GrsCode& code, const MdsOptions& opts);

Json length_witness_to_json(const struct LengthWitness& w);

// Whole-file helpers; writes go through a temp file + rename.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace grsdual
