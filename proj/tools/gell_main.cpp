// gell: exact invariants and gap-labelling checks for Z^d odometer towers.
//
// Exit codes: 0 success, 1 input error, 2 mathematical inconsistency
// (the two label-group routes disagree; must not happen on valid input).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gell/report.hpp"

namespace {

using namespace gell;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInconsistent = 2;

void write_out(const nlohmann::ordered_json& j, const std::string& out_path) {
    if (out_path.empty()) return;
    std::ofstream out(out_path);
    if (!out) throw SchemaError("--out", "cannot open output file: " + out_path);
    out << j.dump(2) << "\n";
}

std::string group_summary(const GapLabelGroup& g) {
    if (g.symbolic)
        return "Z*" + to_string(g.one_part.generator) + " + Z*" + to_string(g.theta_part.generator) +
               "*theta";
    std::string s = "(" + to_string(g.one_part.generator) + ")Z";
    if (g.completion) s += "  [Steinitz " + g.completion->str() + "]";
    return s;
}

int run_gell(const std::string& spec_path, std::optional<int> depth_opt,
             const std::string& out_path) {
    SpecDocument doc = load_spec_document(spec_path);
    SpecPtr spec = to_spec(doc);
    int depth = effective_depth(doc, *spec, depth_opt);
    GEllData data = compute_gell(spec, doc.twist, depth);

    std::cout << "gell report: rank " << spec->rank() << ", depth " << depth << ", index "
              << to_string(spec->index_at(depth)) << "\n";
    if (data.degenerate)
        std::cout << "  warning: degenerate tower (every step unimodular); the action is not"
                     " free on a Cantor set\n";
    std::cout << "  K^0 / K^1 rank per stage: " << data.k_even.rank << " / " << data.k_odd.rank
              << "\n";
    std::cout << "  gap labels (untwisted): " << group_summary(data.labels_untwisted) << "\n";
    std::cout << "  measure group:          (" << to_string(data.measure_group.generator)
              << ")Z\n";
    if (data.twisted_route_a) {
        std::cout << "  twisted labels, route A: " << group_summary(*data.twisted_route_a) << "\n";
        std::cout << "  twisted labels, route B: " << group_summary(*data.twisted_route_b) << "\n";
    }
    std::cout << "  routes agree: " << (data.routes_agree ? "yes" : "NO") << "\n";

    write_out(gell_report_json(data), out_path);
    return data.routes_agree ? kExitOk : kExitInconsistent;
}

int run_verify_gap(const std::string& spec_path, std::optional<int> depth_opt) {
    SpecDocument doc = load_spec_document(spec_path);
    if (doc.twist.twisted()) {
        std::cerr << "verify-gap: twisted specs are not accepted; drop the theta field\n";
        return kExitInput;
    }
    SpecPtr spec = to_spec(doc);
    int depth = effective_depth(doc, *spec, depth_opt);

    bool all_equal = true;
    std::cout << "depth  lhs tau(K_0)  rhs Z[mu]     verdict\n";
    for (int j = 0; j <= depth; ++j) {
        GapVerification v = verify_gap_labelling(spec, j);
        all_equal = all_equal && v.equal;
        std::cout << "  " << j << "    (" << to_string(v.lhs.one_part.generator) << ")Z"
                  << "    (" << to_string(v.rhs.generator) << ")Z    "
                  << (v.equal ? "equal" : "NOT EQUAL") << "\n";
    }
    std::cout << (all_equal ? "gap-labelling equality holds at all checked depths\n"
                            : "gap-labelling equality FAILED\n");
    return all_equal ? kExitOk : kExitInconsistent;
}

int run_compare(const std::string& path_a, const std::string& path_b,
                const std::string& cert_path, std::optional<int> depth_opt,
                const std::string& out_path) {
    SpecDocument doc_a = load_spec_document(path_a);
    SpecDocument doc_b = load_spec_document(path_b);
    SpecPtr a = to_spec(doc_a);
    SpecPtr b = to_spec(doc_b);
    if (a->rank() != b->rank()) {
        std::cerr << "compare: rank mismatch (" << a->rank() << " vs " << b->rank() << ")\n";
        return kExitInput;
    }
    std::optional<IntertwinerCertificate> cert;
    if (!cert_path.empty()) cert = load_certificate(cert_path, a->rank());
    int depth_a = effective_depth(doc_a, *a, depth_opt);
    int depth_b = effective_depth(doc_b, *b, depth_opt);
    CompareOutcome outcome = compare_specs(a, b, depth_a, depth_b, cert);
    nlohmann::ordered_json j = compare_json(outcome);
    std::cout << j["verdict"].get<std::string>() << "\n";
    if (outcome.used_certificate)
        for (const std::string& f : outcome.certificate.failures) std::cout << "  " << f << "\n";
    else
        for (const std::string& r : outcome.reasons) std::cout << "  " << r << "\n";
    write_out(j, out_path);
    return kExitOk;
}

int run_rieffel(int p, int q, const std::string& eps_str, const std::string& out_path) {
    Rat eps = rat_from_string(eps_str);
    RieffelProjection r = rieffel_projection(p, q, eps);
    nlohmann::ordered_json j = rieffel_json(r);
    std::cout << j.dump(2) << "\n";
    write_out(j, out_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact geometric Elliott invariants of Z^d odometer towers"};
    app.require_subcommand(1);

    std::string spec_path, spec_path_b, cert_path, out_path, eps_str;
    std::optional<int> depth;
    int p = 0, q = 0;

    CLI::App* cmd_gell = app.add_subcommand("gell", "compute the full invariant report");
    cmd_gell->add_option("spec", spec_path, "spec JSON file")->required();
    cmd_gell->add_option("--depth", depth, "truncation depth (default 6, clamped)");
    cmd_gell->add_option("--out", out_path, "write the JSON report here");

    CLI::App* cmd_verify = app.add_subcommand("verify-gap", "check the gap-labelling equality");
    cmd_verify->add_option("spec", spec_path, "spec JSON file (untwisted)")->required();
    cmd_verify->add_option("--depth", depth, "check depths 0..N");

    CLI::App* cmd_compare = app.add_subcommand("compare", "compare two towers");
    cmd_compare->add_option("specA", spec_path, "first spec JSON file")->required();
    cmd_compare->add_option("specB", spec_path_b, "second spec JSON file")->required();
    cmd_compare->add_option("certificate", cert_path, "intertwiner certificate JSON file");
    cmd_compare->add_option("--depth", depth, "truncation depth for reported data");
    cmd_compare->add_option("--out", out_path, "write the JSON verdict here");

    CLI::App* cmd_rieffel = app.add_subcommand("rieffel", "finite Rieffel projection oracle");
    cmd_rieffel->add_option("--p", p, "numerator of the angle")->required();
    cmd_rieffel->add_option("--q", q, "denominator of the angle")->required();
    cmd_rieffel->add_option("--eps", eps_str, "bump width, a multiple of 1/q")->required();
    cmd_rieffel->add_option("--out", out_path, "write the JSON record here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(cmd_gell)) return run_gell(spec_path, depth, out_path);
        if (app.got_subcommand(cmd_verify)) return run_verify_gap(spec_path, depth);
        if (app.got_subcommand(cmd_compare))
            return run_compare(spec_path, spec_path_b, cert_path, depth, out_path);
        if (app.got_subcommand(cmd_rieffel)) return run_rieffel(p, q, eps_str, out_path);
    } catch (const gell::SchemaError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInconsistent;
    }
    return kExitInput;
}
