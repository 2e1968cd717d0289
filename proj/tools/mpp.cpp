#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "commands.hpp"

namespace {

using mpp::cli::Json;
using mpp::cli::Options;

int emit(const Json& report, const std::string& path)
{
    const std::string text = report.dump(2) + "\n";
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "mpp: cannot write " << path << "\n";
        return 2;
    }
    out << text;
    return 0;
}

Json error_report(const std::string& command, const std::string& kind, const std::string& message)
{
    return Json{{"command", command}, {"error", {{"kind", kind}, {"message", message}}}};
}

void add_member_flags(CLI::App* sub, Options& o)
{
    sub->add_option("--t", o.t, "parameter file, or \"generic\"");
    sub->add_option("--partition", o.partition, "partition file {\"C\": [...], \"O\": [...]}");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Marked poset polytopes: exact H/V-representations, subdivisions and degenerations"};
    app.require_subcommand(1);
    Options o;
    std::string output;
    app.add_option("-o,--output", output, "write the JSON report to a file");

    auto poset_arg = [&](CLI::App* sub, bool required = true) {
        auto* opt = sub->add_option("poset", o.poset_file, "marked poset JSON file");
        if (required) opt->required();
        sub->add_flag("--projected", o.projected, "report points in the unmarked coordinates only");
        return sub;
    };

    auto* hrep = poset_arg(app.add_subcommand("hrep", "H-representation of a family member"));
    add_member_flags(hrep, o);
    hrep->add_flag("--irredundant", o.irredundant, "drop redundant constraints");

    auto* vertices = poset_arg(app.add_subcommand("vertices", "vertices and rays of a family member"));
    add_member_flags(vertices, o);
    vertices->add_option("--method", o.method, "tropical, dd or bruteforce")->check(CLI::IsMember({"tropical", "dd", "bruteforce"}));
    vertices->add_option("--off", o.off, "also write an OFF file");

    auto* fvector = poset_arg(app.add_subcommand("fvector", "f-vector of a bounded family member"));
    add_member_flags(fvector, o);
    fvector->add_option("--off", o.off, "also write an OFF file");

    auto* ehrhart = poset_arg(app.add_subcommand("ehrhart", "lattice-point counts of dilates and the Ehrhart polynomial"));
    add_member_flags(ehrhart, o);
    ehrhart->add_option("--dilations", o.dilations, "largest dilation factor")->check(CLI::NonNegativeNumber);

    auto* points = poset_arg(app.add_subcommand("lattice-points", "integer points of a bounded family member"));
    add_member_flags(points, o);

    auto* subdivision = poset_arg(app.add_subcommand("subdivision", "tropical subdivision of the marked order polytope"));
    subdivision->add_flag("--ideal-chains", o.ideal_chains, "report the cells given by chains of order ideals");

    auto* degenerate = poset_arg(app.add_subcommand("degenerate", "face map of a degeneration"), false);
    degenerate->add_option("--t", o.t, "source parameter file, or \"generic\" (default)");
    degenerate->add_option("--to", o.to, "target parameter file, or \"generic\"");
    degenerate->add_option("--partition", o.partition, "target cube vertex as a partition file");
    degenerate->add_flag("--pentagon", o.pentagon, "the pentagon-to-rectangle fixture; no poset needed");

    auto* sweep = poset_arg(app.add_subcommand("sweep", "checks over the whole parameter cube"));
    sweep->add_option("--check", o.check, "the property to sweep")
        ->required()
        ->check(CLI::IsMember({"ehrhart", "types", "domination", "tame", "hibi-li", "conjecture5"}));
    sweep->add_option("--t", o.t, "interior parameter for domination and conjecture5 (default generic)");
    sweep->add_option("--dilations", o.dilations, "largest dilation factor for ehrhart")->check(CLI::NonNegativeNumber);
    sweep->add_option("--samples", o.samples, "samples per cube face for types")->check(CLI::PositiveNumber);

    poset_arg(app.add_subcommand("regularize", "contract constant intervals and drop redundant covers"));
    poset_arg(app.add_subcommand("tame", "tameness, regularity and rankedness"));

    auto* hibi = poset_arg(app.add_subcommand("hibi-li", "f-vector comparison between chain-order polytopes"));
    hibi->add_option("--a", o.a, "partition file with the smaller C");
    hibi->add_option("--b", o.b, "partition file with the larger C");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "mpp: " << e.what() << "\n";
        emit(error_report("", "usage", e.what()), "");
        return 2;
    }
    o.command = app.get_subcommands().front()->get_name();

    try {
        const auto outcome = mpp::cli::run(o);
        if (emit(outcome.report, output) != 0) return 2;
        std::cerr << o.command << ": " << outcome.summary << "\n";
        return outcome.exit_code;
    } catch (const mpp::cli::ValidationFailed& e) {
        auto report = error_report(o.command, "validation", e.what());
        report["error"]["violations"] = e.violations;
        for (const auto& v : e.violations) std::cerr << "mpp: " << v << "\n";
        emit(report, output);
        return 2;
    } catch (const mpp::InputError& e) {
        std::cerr << "mpp: " << e.what() << "\n";
        emit(error_report(o.command, "input", e.what()), output);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "mpp: " << e.what() << "\n";
        emit(error_report(o.command, "computation", e.what()), output);
        return 3;
    }
}
