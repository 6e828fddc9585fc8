#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kinks/bounds.hpp"
#include "kinks/braiding.hpp"
#include "kinks/closure.hpp"
#include "kinks/families.hpp"
#include "kinks/json_io.hpp"
#include "kinks/scan.hpp"

namespace {

using kinks::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw kinks::input_error("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct BoundArgs {
    std::string kind;
    std::string input;
    bool mirror = false;
    bool raw = false;
    std::string format = "json";
};

void run_bound(const BoundArgs& args) {
    if (args.format == "csv") {
        std::string kind = args.kind;
        std::string payload = args.input;
        if (kind == "diagram") {
            kind = "pd";
            payload = read_file(args.input);
        }
        const std::vector<kinks::ScanRecord> recs{{"-", kind, payload}};
        std::cout << kinks::render_scan_csv(kinks::scan_rows(recs));
        return;
    }

    kinks::BoundReport report;
    if (args.kind == "braid") {
        const kinks::BraidWord w = kinks::parse_braid(args.input);
        report = kinks::braid_kappa_plus_lb(w);
        if (args.mirror) report.kappa_minus_lb = kinks::braid_kappa_minus_lb(w).kappa_minus_lb;
    } else if (args.kind == "band") {
        const kinks::BandWord bw = kinks::parse_band_word(args.input);
        if (args.mirror)
            throw kinks::input_error("the mirror reduction is not available for band presentations");
        const kinks::SqpProfile prof = kinks::sqp_profile(bw);
        report.source = kinks::BoundSource::sqp;
        report.raw = kinks::half_int::whole(prof.slice_genus);
        report.kappa_plus_lb = prof.kappa_plus_lb;
        report.u_plus_lb = prof.u_plus_lb;
        report.presentation = kinks::serialize_band_word(bw);
    } else {
        const kinks::OrientedDiagram d = kinks::parse_pd(read_file(args.input));
        report = kinks::diagram_kappa_plus_lb(d);
        if (args.mirror) report.kappa_minus_lb = kinks::diagram_kappa_minus_lb(d).kappa_minus_lb;
    }
    emit(kinks::to_json(report, args.raw));
}

void run_family_torus(int p, int q, bool raw) {
    const kinks::BraidWord w = kinks::torus_braid(p, q);
    json j;
    j["family"] = "torus";
    j["p"] = p;
    j["q"] = q;
    j["braid"] = kinks::serialize_braid(w);
    j["strands"] = w.strands;
    j["exponent_sum"] = kinks::exponent_sum(w);
    j["components"] = kinks::closure_components(w).components;
    j["profile"] = kinks::to_json(kinks::positive_braid_profile(w));
    j["bound"] = kinks::to_json(kinks::braid_kappa_plus_lb(w), raw);
    emit(j);
}

void run_family_pretzel(const kinks::PretzelParams& k, bool raw) {
    const kinks::OrientedDiagram d = kinks::pretzel_diagram(k);
    const kinks::SeifertMatrix2 v = kinks::pretzel_seifert_matrix(k);
    const kinks::PretzelInvariants inv = kinks::pretzel_invariants(k);
    json j;
    j["family"] = "pretzel";
    j["p"] = k.p;
    j["q"] = k.q;
    j["r"] = k.r;
    j["pd"] = kinks::serialize_pd(d);
    j["stats"] = kinks::to_json(kinks::seifert_data(d));
    j["seifert_matrix"] = json::array({json::array({v.v11, v.v12}), json::array({v.v21, v.v22})});
    j["alexander"] = kinks::to_json(inv.alexander);
    j["signature"] = inv.signature;
    j["determinant"] = inv.determinant;
    j["genus"] = kinks::seifert_genus_of_diagram(d).as_int();
    j["bound"] = kinks::to_json(kinks::diagram_kappa_plus_lb(d), raw);
    emit(j);
}

void run_family_twist(int m, bool raw) {
    const kinks::OrientedDiagram d = kinks::twist_knot_diagram(m);
    const kinks::TwistInvariants inv = kinks::twist_invariants(m);
    json j;
    j["family"] = "twist";
    j["m"] = m;
    j["pd"] = kinks::serialize_pd(d);
    j["stats"] = kinks::to_json(kinks::seifert_data(d));
    j["alexander"] = kinks::to_json(inv.alexander);
    j["determinant"] = inv.determinant;
    j["kappa_profile"] = json{{"kappa_plus", inv.kappa_profile.kappa_plus},
                              {"kappa_minus", inv.kappa_profile.kappa_minus},
                              {"unknotting", inv.kappa_profile.unknotting}};
    j["bound"] = kinks::to_json(kinks::diagram_kappa_plus_lb(d), raw);
    emit(j);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lower bounds for kinkiness and unknotting numbers of links\n"
                 "presented as braid words or oriented diagrams."};
    app.require_subcommand(1);

    BoundArgs bound_args;
    auto* bound = app.add_subcommand("bound", "Kinkiness lower bounds for one presentation");
    bound->add_option("kind", bound_args.kind, "braid | band | diagram")
        ->required()
        ->check(CLI::IsMember({"braid", "band", "diagram"}));
    bound->add_option("input", bound_args.input,
                      "braid/band text, or a PD file path for 'diagram'")
        ->required();
    bound->add_flag("--mirror", bound_args.mirror, "also bound kappa- via the mirror image");
    bound->add_flag("--raw", bound_args.raw, "include the unclamped right-hand side");
    bound->add_option("--format", bound_args.format)->check(CLI::IsMember({"json", "csv"}));

    auto* family = app.add_subcommand("family", "Generate a family presentation with invariants");
    family->require_subcommand(1);
    bool family_raw = false;
    family->add_flag("--raw", family_raw, "include unclamped bounds");
    int tp = 0, tq = 0;
    auto* torus = family->add_subcommand("torus", "torus knot t(p,q)");
    torus->add_option("p", tp)->required();
    torus->add_option("q", tq)->required();
    kinks::PretzelParams pk;
    auto* pretzel = family->add_subcommand("pretzel", "pretzel knot K(p,q,r), odd parameters");
    pretzel->add_option("p", pk.p)->required();
    pretzel->add_option("q", pk.q)->required();
    pretzel->add_option("r", pk.r)->required();
    int twist_m = 0;
    auto* twist = family->add_subcommand("twist", "twist knot K_m");
    twist->add_option("m", twist_m)->required();

    auto* classify = app.add_subcommand("classify", "Concordance flags for a family member");
    classify->require_subcommand(1);
    kinks::PretzelParams ck;
    auto* classify_pretzel = classify->add_subcommand("pretzel", "pretzel knot flags");
    classify_pretzel->add_option("p", ck.p)->required();
    classify_pretzel->add_option("q", ck.q)->required();
    classify_pretzel->add_option("r", ck.r)->required();

    std::string bfd_path;
    auto* bfd = app.add_subcommand("braid-from-diagram",
                                   "Convert a PD file to a braid word (Vogel moves)");
    bfd->add_option("file", bfd_path)->required();

    std::string scan_path;
    std::string scan_format = "csv";
    auto* scan = app.add_subcommand("scan", "Batch-process a TSV file of presentations");
    scan->add_option("file", scan_path)->required();
    scan->add_option("--format", scan_format)->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);

        if (*bound) run_bound(bound_args);
        if (*torus) run_family_torus(tp, tq, family_raw);
        if (*pretzel) run_family_pretzel(pk, family_raw);
        if (*twist) run_family_twist(twist_m, family_raw);
        if (*classify_pretzel) {
            json j;
            j["family"] = "pretzel";
            j["p"] = ck.p;
            j["q"] = ck.q;
            j["r"] = ck.r;
            j["flags"] = kinks::to_json(kinks::pretzel_classify(ck));
            emit(j);
        }
        if (*bfd) {
            const kinks::OrientedDiagram d = kinks::parse_pd(read_file(bfd_path));
            emit(kinks::to_json(kinks::braid_from_diagram(d)));
        }
        if (*scan) {
            const auto rows = kinks::scan_rows(kinks::parse_scan_records(read_file(scan_path)));
            if (scan_format == "json") {
                json arr = json::array();
                for (const auto& row : rows) arr.push_back(kinks::to_json(row));
                emit(arr);
            } else {
                std::cout << kinks::render_scan_csv(rows);
            }
        }
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const kinks::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const kinks::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
