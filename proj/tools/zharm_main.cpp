// Command-line surface: exact link invariants of braid closures and
// polynomial classes, cyclic-branched-cover homology orders, the existence
// criterion, batch table scans, golden-table reproduction, and the numerical
// local-model checks.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "zharm/braid.hpp"
#include "zharm/catalog.hpp"
#include "zharm/cover.hpp"
#include "zharm/laurent.hpp"
#include "zharm/localmodel.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitGoldenMismatch = 3;

using zharm::laurent::UnitClass;

// --poly/--form pair shared by several subcommands. Form "quotient" means
// the stored text is Delta/(t-1).
UnitClass delta_from_options(const std::string& poly, const std::string& form) {
    zharm::laurent::LaurentPoly p = zharm::laurent::parse_poly(poly);
    if (form == "quotient")
        p = p * zharm::laurent::parse_poly("t-1");
    else if (form != "alexander")
        throw CLI::ValidationError("--form", "must be 'alexander' or 'quotient'");
    return zharm::laurent::normalize(p);
}

std::vector<int> parse_k_list(const std::string& text) {
    std::vector<int> ks;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        ks.push_back(std::stoi(item));
    }
    if (ks.empty()) throw CLI::ValidationError("--k", "needs at least one cover degree");
    return ks;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << content;
}

std::string verdict_json(const zharm::cover::CoverVerdict& v) {
    std::ostringstream out;
    out << "{\"determinant\":" << v.determinant.str() << ",\"order2\":" << v.order2.str()
        << ",\"order3\":" << v.order3.str()
        << ",\"b1_s2_positive\":" << (v.b1_s2_positive ? "true" : "false")
        << ",\"qhs3\":" << (v.qhs3 ? "true" : "false") << ",\"conclusion\":\""
        << zharm::cover::to_string(v.conclusion) << "\"}\n";
    return out.str();
}

std::string expansion_json(const zharm::localmodel::ModeExpansion& ex) {
    char buf[128];
    auto num = [&](double x) {
        std::snprintf(buf, sizeof buf, "%.17g", x);
        return std::string(buf);
    };
    std::ostringstream out;
    out << "{\"A\":{\"re\":" << num(ex.A.real()) << ",\"im\":" << num(ex.A.imag())
        << "},\"B\":{\"re\":" << num(ex.B.real()) << ",\"im\":" << num(ex.B.imag())
        << "},\"fit_residual\":" << num(ex.fit_residual) << ",\"modes\":[";
    bool first = true;
    for (const auto& [key, m] : ex.modes) {
        if (!first) out << ',';
        first = false;
        out << "{\"k\":" << key.first << ",\"nu\":" << key.second << ",\"re\":" << num(m.real())
            << ",\"im\":" << num(m.imag()) << '}';
    }
    out << "]}\n";
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact link invariants and cyclic-branched-cover homology for the "
                 "multivalued-harmonic-1-form existence criterion"};
    app.require_subcommand(1);

    std::string braid_text, poly_text, form = "alexander", table_path, out_path, golden_path;
    std::string k_text = "2,3", input_path;
    int k = 3, family_n = 0, jobs = 1, vk = 1, nr = 64, ntheta = 384, numax = 3, kmax = 2;
    double r0 = 0.5, r1 = 1.0;
    std::optional<int> components;
    bool skip_bad = false;

    auto* alex = app.add_subcommand("alex", "Normalized Alexander polynomial of a braid closure");
    alex->add_option("--braid", braid_text, "braid word, e.g. \"2: 1,1,1\"")->required();

    auto* det = app.add_subcommand("det", "Link determinant |Delta(-1)|");
    det->add_option("--poly", poly_text, "polynomial text")->required();
    det->add_option("--form", form, "alexander|quotient");

    auto* coverc = app.add_subcommand("cover", "|H_1| of the k-fold cyclic branched cover "
                                               "(0 = infinite)");
    coverc->add_option("--poly", poly_text)->required();
    coverc->add_option("--form", form, "alexander|quotient");
    coverc->add_option("--k", k, "cover degree")->required();

    auto* crit = app.add_subcommand("criterion", "Existence-criterion verdict as JSON");
    crit->add_option("--poly", poly_text)->required();
    crit->add_option("--form", form, "alexander|quotient");
    crit->add_option("--components", components, "component count for consistency checking");

    auto* scan = app.add_subcommand("scan", "Scan a link table CSV");
    scan->add_option("table", table_path, "input CSV")->required();
    scan->add_option("--k", k_text, "comma-separated cover degrees (default 2,3)");
    scan->add_option("--jobs", jobs, "worker threads");
    scan->add_flag("--skip-bad", skip_bad, "skip malformed rows instead of aborting");
    scan->add_option("--out", out_path, "output file (.json or .csv); stdout JSON if absent");

    auto* appendix = app.add_subcommand("appendix", "Recompute the golden homology-order table");
    appendix->add_option("--golden", golden_path, "fixture CSV (name,alexander,order3)")
        ->required();
    appendix->add_option("--out", out_path, "write the diff as JSON");

    auto* family = app.add_subcommand("family",
                                      "|H_1(S_k)| of the n-fold trefoil-union family member");
    family->add_option("--poly", poly_text)->required();
    family->add_option("--form", form, "alexander|quotient");
    family->add_option("--n", family_n, "number of trefoil factors")->required();
    family->add_option("--k", k, "cover degree")->required();

    auto* local = app.add_subcommand("localmodel", "Numerical local-model verification");
    local->require_subcommand(1);
    auto* check = local->add_subcommand("check", "Harmonicity residuals of v_k on an annulus");
    check->add_option("--k", vk, "model index k of v_k = z^{k-1/2} dz");
    check->add_option("--r0", r0);
    check->add_option("--r1", r1);
    check->add_option("--nr", nr);
    check->add_option("--ntheta", ntheta);
    auto* extract = local->add_subcommand("extract", "Mode expansion of sampled form");
    extract->add_option("--input", input_path, "samples CSV")->required();
    extract->add_option("--numax", numax);
    extract->add_option("--kmax", kmax);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*alex) {
            const auto d = zharm::braid::alexander_from_braid(zharm::braid::parse_braid(braid_text));
            std::cout << zharm::laurent::to_string(d.canonical()) << '\n';
        } else if (*det) {
            std::cout << zharm::cover::link_determinant(delta_from_options(poly_text, form)).str()
                      << '\n';
        } else if (*coverc) {
            std::cout
                << zharm::cover::homology_order(delta_from_options(poly_text, form), k).str()
                << '\n';
        } else if (*crit) {
            const auto v = zharm::cover::criterion(delta_from_options(poly_text, form), components);
            std::cout << verdict_json(v);
        } else if (*scan) {
            std::ifstream in(table_path);
            if (!in) throw std::runtime_error("cannot open table '" + table_path + "'");
            std::vector<std::string> diagnostics;
            const auto records = zharm::catalog::parse_table(in, skip_bad, &diagnostics);
            for (const auto& d : diagnostics) std::cerr << "warning: " << d << '\n';
            const auto k_list = parse_k_list(k_text);
            const auto rows = zharm::catalog::scan(records, k_list, jobs);
            const bool csv = out_path.size() >= 4 &&
                             out_path.compare(out_path.size() - 4, 4, ".csv") == 0;
            const std::string payload = csv ? zharm::catalog::scan_to_csv(rows, k_list)
                                            : zharm::catalog::scan_to_json(rows);
            if (out_path.empty())
                std::cout << payload;
            else
                write_file(out_path, payload);
        } else if (*appendix) {
            std::ifstream in(golden_path);
            if (!in) throw std::runtime_error("cannot open golden fixture '" + golden_path + "'");
            const auto golden = zharm::catalog::read_golden(in);
            const auto diff = zharm::catalog::reproduce_appendix(golden);
            if (!out_path.empty()) write_file(out_path, zharm::catalog::diff_to_json(diff));
            if (diff.empty()) {
                std::cout << "all " << golden.size() << " rows match\n";
            } else {
                for (const auto& d : diff)
                    std::cout << d.name << ": got " << d.got.str() << ", expected "
                              << d.expected.str() << '\n';
                return kExitGoldenMismatch;
            }
        } else if (*family) {
            std::cout << zharm::cover::family_order(delta_from_options(poly_text, form), family_n,
                                                    k)
                             .str()
                      << '\n';
        } else if (*check) {
            const zharm::localmodel::PolarGrid grid(r0, r1, nr, ntheta);
            const auto f = zharm::localmodel::sample_vk(vk, grid);
            const auto [rd, rs] = zharm::localmodel::harmonic_residual(f, grid);
            char buf[128];
            std::snprintf(buf, sizeof buf, "{\"residual_d\":%.17g,\"residual_dstar\":%.17g}\n",
                          rd, rs);
            std::cout << buf;
        } else if (*extract) {
            std::ifstream in(input_path);
            if (!in) throw std::runtime_error("cannot open samples '" + input_path + "'");
            zharm::localmodel::PolarGrid grid;
            const auto f = zharm::localmodel::read_samples_csv(in, &grid);
            const auto ex = zharm::localmodel::extract_modes(f, grid, numax, kmax);
            std::cout << expansion_json(ex);
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitOk;
}
