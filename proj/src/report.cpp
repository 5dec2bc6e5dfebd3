#include "gell/report.hpp"

#include <fstream>

namespace gell {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Int parse_int_field(const json& j, const std::string& path) {
    try {
        if (j.is_string()) return int_from_string(j.get<std::string>());
        if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    } catch (const std::exception& e) {
        throw SchemaError(path, e.what());
    }
    throw SchemaError(path, "expected an integer (string or number)");
}

Rat parse_rat_field(const json& j, const std::string& path) {
    try {
        if (j.is_string()) return rat_from_string(j.get<std::string>());
        if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    } catch (const std::exception& e) {
        throw SchemaError(path, e.what());
    }
    throw SchemaError(path, "expected a rational (string \"a/b\" or integer)");
}

IntMatrix parse_matrix_field(const json& j, int rank, const std::string& path) {
    if (!j.is_array() || static_cast<int>(j.size()) != rank)
        throw SchemaError(path, "expected an array of " + std::to_string(rank) + " rows");
    IntMatrix m(rank, rank);
    for (int r = 0; r < rank; ++r) {
        const json& row = j[r];
        std::string rpath = path + "[" + std::to_string(r) + "]";
        if (!row.is_array() || static_cast<int>(row.size()) != rank)
            throw SchemaError(rpath, "expected a row of " + std::to_string(rank) + " entries");
        for (int c = 0; c < rank; ++c)
            m.at(r, c) = parse_int_field(row[c], rpath + "[" + std::to_string(c) + "]");
    }
    return m;
}

ordered_json matrix_json(const IntMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < m.rows; ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(to_string(m.at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

ordered_json rat_matrix_json(const RatMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < m.rows; ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(to_string(m.at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

ordered_json group_json(const GapLabelGroup& g) {
    ordered_json out;
    if (g.symbolic) {
        out["mode"] = "symbolic";
        out["one"] = to_string(g.one_part.generator);
        out["theta"] = to_string(g.theta_part.generator);
    } else {
        out["mode"] = "exact";
        out["generator"] = to_string(g.one_part.generator);
    }
    if (g.completion) out["steinitz"] = g.completion->str();
    return out;
}

ordered_json presentation_json(const KGroupPresentation& p) {
    ordered_json out;
    out["parity"] = p.parity == Parity::even ? "even" : "odd";
    out["rank_per_stage"] = p.rank;
    out["stages"] = p.depth + 1;
    ordered_json conns = ordered_json::array();
    for (const IntMatrix& m : p.connecting) conns.push_back(matrix_json(m));
    out["connecting"] = conns;
    ordered_json st = ordered_json::array();
    for (const auto& [degree, s] : p.degree_steinitz)
        st.push_back(ordered_json::array({degree, s.str()}));
    out["degree_steinitz"] = st;
    ordered_json emb = ordered_json::array();
    for (const RatMatrix& m : p.colimit_embedding) emb.push_back(rat_matrix_json(m));
    out["colimit_embedding"] = emb;
    return out;
}

ordered_json theta_json(const Twist& t) {
    switch (t.mode) {
        case Twist::Mode::none:
            return nullptr;
        case Twist::Mode::symbolic:
            return ordered_json{{"symbolic", true}};
        case Twist::Mode::numeric: {
            ordered_json upper = ordered_json::array();
            const RatMatrix& m = t.form->matrix();
            for (int i = 0; i < m.rows; ++i)
                for (int j = i + 1; j < m.cols; ++j) upper.push_back(to_string(m.at(i, j)));
            return ordered_json{{"upper", upper}};
        }
    }
    return nullptr;
}

}  // namespace

SpecDocument parse_spec_document(const json& j) {
    if (!j.is_object()) throw SchemaError("$", "spec document must be a JSON object");
    for (const auto& [key, _] : j.items())
        if (key != "rank" && key != "steps" && key != "periodic_tail" && key != "theta" &&
            key != "depth")
            throw SchemaError(key, "unknown field");

    SpecDocument doc;
    if (!j.contains("rank")) throw SchemaError("rank", "missing required field");
    Int rank = parse_int_field(j["rank"], "rank");
    if (rank < 1 || rank > 8) throw SchemaError("rank", "rank must be between 1 and 8");
    doc.rank = static_cast<int>(rank.get_si());

    if (!j.contains("steps") || !j["steps"].is_array())
        throw SchemaError("steps", "missing required array field");
    for (size_t i = 0; i < j["steps"].size(); ++i)
        doc.steps.push_back(
            parse_matrix_field(j["steps"][i], doc.rank, "steps[" + std::to_string(i) + "]"));

    if (j.contains("periodic_tail")) {
        if (!j["periodic_tail"].is_array())
            throw SchemaError("periodic_tail", "expected an array of matrices");
        for (size_t i = 0; i < j["periodic_tail"].size(); ++i)
            doc.tail.push_back(parse_matrix_field(j["periodic_tail"][i], doc.rank,
                                                  "periodic_tail[" + std::to_string(i) + "]"));
    }

    if (j.contains("theta") && !j["theta"].is_null()) {
        const json& t = j["theta"];
        if (!t.is_object()) throw SchemaError("theta", "expected an object");
        if (t.contains("symbolic")) {
            if (!t["symbolic"].is_boolean() || !t["symbolic"].get<bool>())
                throw SchemaError("theta.symbolic", "only the value true is meaningful");
            if (doc.rank != kSymbolicDimension)
                throw SchemaError("theta.symbolic", "symbolic twist needs rank 2");
            doc.twist = Twist::symbolic();
        } else if (t.contains("upper")) {
            const json& u = t["upper"];
            const int need = doc.rank * (doc.rank - 1) / 2;
            if (!u.is_array() || static_cast<int>(u.size()) != need)
                throw SchemaError("theta.upper", "expected " + std::to_string(need) +
                                                     " upper-triangular entries");
            RatMatrix m(doc.rank, doc.rank);
            int idx = 0;
            for (int r = 0; r < doc.rank; ++r)
                for (int c = r + 1; c < doc.rank; ++c) {
                    Rat v = parse_rat_field(u[idx], "theta.upper[" + std::to_string(idx) + "]");
                    m.at(r, c) = v;
                    m.at(c, r) = -v;
                    ++idx;
                }
            doc.twist = Twist::numeric(SkewForm(std::move(m)));
        } else {
            throw SchemaError("theta", "expected {\"upper\": [...]} or {\"symbolic\": true}");
        }
    }

    if (j.contains("depth")) {
        Int depth = parse_int_field(j["depth"], "depth");
        if (depth < 0 || depth > 64) throw SchemaError("depth", "depth must be between 0 and 64");
        doc.depth = static_cast<int>(depth.get_si());
    }

    try {
        to_spec(doc);
    } catch (const std::exception& e) {
        throw SchemaError("steps", e.what());
    }
    return doc;
}

SpecDocument load_spec_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("$", "cannot open spec file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw SchemaError("$", std::string("invalid JSON: ") + e.what());
    }
    return parse_spec_document(j);
}

SpecPtr to_spec(const SpecDocument& doc) {
    return std::make_shared<const OdometerSpec>(doc.rank, doc.steps, doc.tail);
}

int effective_depth(const SpecDocument& doc, const OdometerSpec& spec,
                    std::optional<int> requested) {
    int depth = requested.value_or(doc.depth.value_or(6));
    if (requested || doc.depth) {
        spec.require_stage(depth);
        return depth;
    }
    if (!spec.has_tail() && depth > spec.finite_depth()) depth = spec.finite_depth();
    return depth;
}

IntertwinerCertificate parse_certificate(const json& j, int rank) {
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
        throw SchemaError("entries", "certificate must be {\"entries\": [...]}");
    IntertwinerCertificate cert;
    const int full = 1 << rank;
    for (size_t i = 0; i < j["entries"].size(); ++i) {
        const json& e = j["entries"][i];
        std::string path = "entries[" + std::to_string(i) + "]";
        if (!e.is_object()) throw SchemaError(path, "expected an object");
        CertificateEntry entry;
        if (!e.contains("stage_a") || !e.contains("stage_b") || !e.contains("matrix"))
            throw SchemaError(path, "entry needs stage_a, stage_b, matrix");
        entry.stage_a = static_cast<int>(parse_int_field(e["stage_a"], path + ".stage_a").get_si());
        entry.stage_b = static_cast<int>(parse_int_field(e["stage_b"], path + ".stage_b").get_si());
        entry.phi = parse_matrix_field(e["matrix"], full, path + ".matrix");
        cert.entries.push_back(std::move(entry));
    }
    return cert;
}

IntertwinerCertificate load_certificate(const std::string& path, int rank) {
    std::ifstream in(path);
    if (!in) throw SchemaError("$", "cannot open certificate file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw SchemaError("$", std::string("invalid JSON: ") + e.what());
    }
    return parse_certificate(j, rank);
}

nlohmann::ordered_json gell_report_json(const GEllData& data) {
    const OdometerSpec& spec = *data.spec;
    ordered_json out;
    out["tool"] = ordered_json{{"name", kToolName}, {"version", kToolVersion}};
    out["conventions"] = ordered_json{{"pullback", "M_transpose_on_H1"},
                                      {"pfaffian_empty_subset", "1"},
                                      {"rieffel_operator_order", "self_checked_V_or_Vstar"}};

    ordered_json echo;
    echo["rank"] = spec.rank();
    ordered_json steps = ordered_json::array();
    for (const IntMatrix& m : spec.steps()) steps.push_back(matrix_json(m));
    echo["steps"] = steps;
    ordered_json tail = ordered_json::array();
    for (const IntMatrix& m : spec.tail()) tail.push_back(matrix_json(m));
    echo["periodic_tail"] = tail;
    echo["theta"] = theta_json(data.twist);
    echo["depth"] = data.depth;
    echo["degenerate"] = data.degenerate;
    out["spec"] = echo;

    out["k_even"] = presentation_json(data.k_even);
    out["k_odd"] = presentation_json(data.k_odd);

    std::vector<int> top(spec.rank());
    for (int i = 0; i < spec.rank(); ++i) top[i] = i + 1;
    out["order_unit"] = ordered_json{
        {"stage", 0}, {"subset", subset_to_string(mask_of(top))}, {"coefficient", "1"}};

    ordered_json transfer = ordered_json::array();
    for (const auto& [stage, value] : data.transfer_table)
        transfer.push_back(ordered_json{{"stage", stage},
                                        {"index", to_string(spec.index_at(stage))},
                                        {"trace", to_string(value)}});
    out["transfer"] = transfer;

    out["trace_simplex"] = "single point (uniquely ergodic)";

    ordered_json pairing = ordered_json::array();
    for (const auto& row : data.pairing_table)
        pairing.push_back(ordered_json{{"stage", row.stage},
                                       {"subset", subset_to_string(row.subset)},
                                       {"trace", to_string(row.value)}});
    out["pairing"] = pairing;

    ordered_json labels;
    labels["untwisted"] = group_json(data.labels_untwisted);
    labels["measure_group"] = to_string(data.measure_group.generator);
    labels["twisted_route_A"] =
        data.twisted_route_a ? group_json(*data.twisted_route_a) : ordered_json(nullptr);
    labels["twisted_route_B"] =
        data.twisted_route_b ? group_json(*data.twisted_route_b) : ordered_json(nullptr);
    labels["agree"] = data.routes_agree;
    out["gap_labels"] = labels;
    return out;
}

nlohmann::ordered_json rieffel_json(const RieffelProjection& r) {
    ordered_json out;
    out["p"] = r.p;
    out["q"] = r.q;
    out["eps"] = to_string(r.eps);
    out["convention"] = r.convention;
    out["trace"] = r.trace;
    out["trace_error"] = r.trace_error;
    out["projection_residual"] = r.idempotent_residual;
    out["selfadjoint_residual"] = r.selfadjoint_residual;
    out["spectrum_gap"] = r.spectrum_gap;
    out["spectrum_deviation"] = r.spectrum_deviation;
    return out;
}

CompareOutcome compare_specs(SpecPtr a, SpecPtr b, int depth_a, int depth_b,
                             const std::optional<IntertwinerCertificate>& cert) {
    if (a->rank() != b->rank()) throw std::invalid_argument("compared specs must have equal rank");
    CompareOutcome out;
    if (cert) {
        out.used_certificate = true;
        out.certificate = check_basic_certificate(a, b, *cert);
        return out;
    }

    auto tower = [](const OdometerSpec& s) {
        std::vector<Int> finite, tail;
        for (int j = 1; j <= s.finite_depth(); ++j)
            finite.push_back(abs(determinant(s.step_at(j))));
        for (const IntMatrix& m : s.tail()) tail.push_back(abs(determinant(m)));
        return steinitz(finite, tail);
    };
    out.index_tower_a = tower(*a);
    out.index_tower_b = tower(*b);
    out.labels_a = gap_label_group(a, Twist::untwisted(), depth_a).one_part;
    out.labels_b = gap_label_group(b, Twist::untwisted(), depth_b).one_part;

    if (!(out.index_tower_a == out.index_tower_b)) {
        out.distinguished = true;
        out.reasons.push_back("index-tower Steinitz invariants differ: " + out.index_tower_a.str() +
                              " vs " + out.index_tower_b.str());
    }
    if (!out.distinguished)
        out.reasons.push_back("not distinguished at this depth (no certificate given; "
                              "no rank-one obstruction separates the towers)");
    return out;
}

nlohmann::ordered_json compare_json(const CompareOutcome& outcome) {
    ordered_json out;
    if (outcome.used_certificate) {
        out["verdict"] = outcome.certificate.ok ? "certificate verified" : "certificate rejected";
        out["squares_ok"] = outcome.certificate.squares_ok;
        out["top_degree_ok"] = outcome.certificate.top_degree_ok;
        out["order_unit_ok"] = outcome.certificate.unit_ok;
        out["transfer_ok"] = outcome.certificate.transfer_ok;
        ordered_json fails = ordered_json::array();
        for (const std::string& f : outcome.certificate.failures) fails.push_back(f);
        out["failures"] = fails;
        return out;
    }
    out["verdict"] = outcome.distinguished ? "distinguished" : "not distinguished at this depth";
    ordered_json reasons = ordered_json::array();
    for (const std::string& r : outcome.reasons) reasons.push_back(r);
    out["reasons"] = reasons;
    out["index_tower_steinitz"] =
        ordered_json::array({outcome.index_tower_a.str(), outcome.index_tower_b.str()});
    out["gap_labels_at_depth"] = ordered_json::array(
        {to_string(outcome.labels_a.generator), to_string(outcome.labels_b.generator)});
    return out;
}

}  // namespace gell
