#ifndef GELL_REPORT_HPP
#define GELL_REPORT_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gell/rotation.hpp"
#include "gell/trace_pairing.hpp"

namespace gell {

inline constexpr const char* kToolName = "gell";
inline constexpr const char* kToolVersion = "0.1.0";

// Input validation failure, pointing at the offending field.
struct SchemaError : std::runtime_error {
    std::string field;
    SchemaError(std::string field_path, const std::string& message)
        : std::runtime_error(message + " (at " + field_path + ")"), field(std::move(field_path)) {}
};

// Parsed input document. All numbers are accepted as decimal strings (the
// canonical form) or plain JSON integers.
struct SpecDocument {
    int rank = 0;
    std::vector<IntMatrix> steps;
    std::vector<IntMatrix> tail;
    Twist twist;
    std::optional<int> depth;
};

SpecDocument parse_spec_document(const nlohmann::json& j);
SpecDocument load_spec_document(const std::string& path);

SpecPtr to_spec(const SpecDocument& doc);

// Document depth, else the default 6, clamped to the finite depth of a
// tower without periodic tail. An explicit request is range-checked instead.
int effective_depth(const SpecDocument& doc, const OdometerSpec& spec,
                    std::optional<int> requested);

IntertwinerCertificate parse_certificate(const nlohmann::json& j, int rank);
IntertwinerCertificate load_certificate(const std::string& path, int rank);

// Deterministic JSON renderings.
nlohmann::ordered_json gell_report_json(const GEllData& data);
nlohmann::ordered_json rieffel_json(const RieffelProjection& r);

// Obstruction comparison of two towers (no certificate). "Distinguished"
// is decided only from whole-tower invariants of rank-one degree blocks;
// truncation-depth data is reported but never decides.
struct CompareOutcome {
    bool used_certificate = false;
    CertificateCheck certificate;
    bool distinguished = false;
    std::vector<std::string> reasons;
    SupernaturalNumber index_tower_a;
    SupernaturalNumber index_tower_b;
    SubgroupOfQ labels_a;  // untwisted, at the compared depth
    SubgroupOfQ labels_b;
};

CompareOutcome compare_specs(SpecPtr a, SpecPtr b, int depth_a, int depth_b,
                             const std::optional<IntertwinerCertificate>& cert);

nlohmann::ordered_json compare_json(const CompareOutcome& outcome);

}  // namespace gell

#endif
