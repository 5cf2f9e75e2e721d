// zz: zigzag persistence toolkit.
//
// Subcommands: decompose, homology-zigzag, localize, diamond-verify, plant,
// plot. Exit codes: 0 success, 1 input error, 2 internal invariant violation.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zigzag/decompose.hpp"
#include "zigzag/diamond.hpp"
#include "zigzag/harness.hpp"
#include "zigzag/homology.hpp"
#include "zigzag/io.hpp"
#include "zigzag/localize.hpp"
#include "zigzag/svg.hpp"

namespace {

using namespace zigzag;

void emit(const std::string& path, const std::string& text) {
    if (path.empty())
        std::cout << text;
    else
        write_file(path, text);
}

std::pair<int, int> parse_dims_range(const std::string& s) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(s);
            return {v, v};
        }
        int lo = std::stoi(s.substr(0, dots));
        int hi = std::stoi(s.substr(dots + 2));
        if (lo < 0 || hi < lo) throw ParseError("");
        return {lo, hi};
    } catch (...) {
        throw ParseError("bad --dims value \"" + s + "\", expected <min>..<max>");
    }
}

std::string figure(const Barcode& bc, const std::string& style) {
    if (style == "diagram") return render_figure(bc, FigureStyle::Diagram);
    if (style == "barcode") return render_figure(bc, FigureStyle::Barcode);
    throw ParseError("bad --style value \"" + style + "\"");
}

struct CommonOpts {
    std::string output;
    std::string format = "json";
    std::string style = "barcode";
};

void add_output_opts(CLI::App* cmd, CommonOpts& o, bool with_format = true) {
    cmd->add_option("-o,--output", o.output, "Output path (stdout when omitted)");
    if (with_format) {
        cmd->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember({"json", "svg"}));
        cmd->add_option("--style", o.style, "Figure style for svg output")
            ->check(CLI::IsMember({"barcode", "diagram"}));
    }
}

int run_decompose(const std::string& input, const CommonOpts& o, bool trace) {
    ZigzagModule m = module_from_json(read_file(input));
    DecomposeResult res = decompose(m);
    if (o.format == "svg") {
        emit(o.output, figure(res.barcode, o.style));
    } else {
        emit(o.output, barcode_to_json(res.barcode));
    }
    if (trace) {
        std::string text = trace_to_json(res.trace);
        if (o.output.empty())
            std::cout << text;
        else
            write_file(o.output + ".trace.json", text);
    }
    return 0;
}

int run_homology_zigzag(const std::string& input, const CommonOpts& o,
                        const std::string& mode_flag, const std::string& dims_flag,
                        bool verify) {
    std::string warnings;
    ComplexSequenceFile f = complexes_from_json(read_file(input), &warnings);
    if (!warnings.empty()) std::cerr << "warning: " << warnings;
    if (!mode_flag.empty())
        f.mode = mode_flag == "union" ? ZigzagMode::Union : ZigzagMode::Intersection;
    if (!dims_flag.empty()) std::tie(f.ell_min, f.ell_max) = parse_dims_range(dims_flag);

    int n = int(f.complexes.size());
    Barcode merged;
    merged.grid = n == 1 ? std::vector<GridPoint>{{1, "1"}} : half_integer_grid(n);
    for (int ell = f.ell_min; ell <= f.ell_max; ++ell) {
        Barcode bc = barcode_of(build_zigzag({f.complexes, f.mode}, ell, f.field));
        for (const auto& e : bc.entries) merged.add(e.iv, e.mult, ell);
    }
    merged.canonicalize();

    if (verify) {
        if (n < 2) throw ParseError("--verify-strong-diamond needs at least two complexes");
        StrongDiamondReport rep = verify_strong_diamond(f.complexes, f.ell_max, f.field);
        if (!rep.ok) throw InvariantViolation("strong diamond check failed: " + rep.detail);
        std::cerr << "strong diamond checks passed for H0..H" << f.ell_max << "\n";
    }

    if (o.format == "svg")
        emit(o.output, figure(merged, o.style));
    else
        emit(o.output, barcode_to_json(merged));
    return 0;
}

int run_localize(const std::string& input, int k, const std::string& output, bool check) {
    ZigzagModule m = module_from_json(read_file(input));
    LocalizeResult loc = localize_at(m, k);
    std::string text = "intervals through " + std::to_string(k) + ":\n";
    for (const auto& e : loc.intervals.entries)
        text += "  [" + std::to_string(e.iv.b) + "," + std::to_string(e.iv.d) + "] x" +
                std::to_string(e.mult) + "\n";
    if (loc.intervals.entries.empty()) text += "  (none)\n";
    emit(output, text);
    if (check) {
        Barcode filtered;
        for (const auto& e : barcode_of(m).entries)
            if (e.iv.contains(k)) filtered.add(e.iv, e.mult, e.dim);
        filtered.canonicalize();
        if (!(filtered.entries == loc.intervals.entries))
            throw InvariantViolation("localization disagrees with the full decomposition at k=" +
                                     std::to_string(k));
        std::cerr << "localization agrees with the full decomposition at k=" << std::to_string(k)
                  << "\n";
    }
    return 0;
}

int run_diamond_verify(const std::string& upper, const std::string& lower, int k,
                       std::uint64_t seed, bool seeded, int length, int max_intervals,
                       std::uint32_t p) {
    DiamondInstance d;
    if (seeded) {
        d = random_exact_diamond(seed, length, k, max_intervals, FieldSpec(p));
    } else {
        if (upper.empty() || lower.empty())
            throw ParseError("diamond-verify needs --upper and --lower module files, or --seed");
        d.vplus = module_from_json(read_file(upper));
        d.vminus = module_from_json(read_file(lower));
        d.k = k;
        int n = d.vminus.length();
        if (d.vplus.length() != n) throw ParseError("modules have different lengths");
        for (int i = 1; i <= n; ++i)
            if (i != k && d.vplus.dims[i - 1] != d.vminus.dims[i - 1])
                throw ParseError("modules disagree at index " + std::to_string(i) +
                                 ", but only index " + std::to_string(k) + " may differ");
        if (!check_exact(d)) throw ParseError("central diamond is not exact");
    }
    DiamondReport rep = verify_diamond_matching(d);
    if (!rep.ok) throw InvariantViolation("diamond matching failed: " + rep.detail);
    std::cout << "diamond matching holds at k=" << d.k << "\n"
              << "  upper: " << to_string(rep.pers_plus) << "\n"
              << "  lower: " << to_string(rep.pers_minus) << "\n"
              << "  [k,k] counts: " << rep.kk_plus << " upper, " << rep.kk_minus
              << " lower (unconstrained)\n";
    return 0;
}

int run_plant(std::uint64_t seed, const std::string& type, int max_intervals, std::uint32_t p,
              const std::string& output, const std::string& truth_path) {
    PlantedInstance inst = plant(seed, ZigzagType::parse(type), max_intervals, FieldSpec(p));
    emit(output, module_to_json(inst.module));
    if (!truth_path.empty()) write_file(truth_path, barcode_to_json(inst.truth));
    return 0;
}

int run_plot(const std::string& input, const CommonOpts& o) {
    Barcode bc = barcode_from_json(read_file(input));
    emit(o.output, figure(bc, o.style));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zigzag persistence of diagrams of vector spaces over prime fields"};
    app.require_subcommand(1);

    // decompose
    std::string dec_input;
    CommonOpts dec_opts;
    bool dec_trace = false;
    CLI::App* dec = app.add_subcommand("decompose", "Interval decomposition of a module file");
    dec->add_option("module", dec_input, "module JSON file")->required();
    dec->add_flag("--trace", dec_trace, "also write the r/bt/c tables");
    add_output_opts(dec, dec_opts);

    // homology-zigzag
    std::string hz_input, hz_mode, hz_dims;
    CommonOpts hz_opts;
    bool hz_verify = false;
    CLI::App* hz = app.add_subcommand(
        "homology-zigzag", "Barcodes of the union or intersection zigzag of a complex sequence");
    hz->add_option("complexes", hz_input, "complex sequence JSON file")->required();
    hz->add_option("--mode", hz_mode, "override the file's mode")
        ->check(CLI::IsMember({"union", "intersection"}));
    hz->add_option("--dims", hz_dims, "homological dimension range, e.g. 0..2");
    hz->add_flag("--verify-strong-diamond", hz_verify,
                 "check union/intersection barcode compatibility");
    add_output_opts(hz, hz_opts);

    // localize
    std::string loc_input, loc_output;
    int loc_k = 1;
    bool loc_check = false;
    CLI::App* loc = app.add_subcommand("localize", "Intervals through one index");
    loc->add_option("module", loc_input, "module JSON file")->required();
    loc->add_option("k", loc_k, "index to localize at")->required();
    loc->add_flag("--check", loc_check, "compare against the full decomposition");
    loc->add_option("-o,--output", loc_output, "Output path (stdout when omitted)");

    // diamond-verify
    std::string dv_upper, dv_lower;
    int dv_k = 2, dv_length = 5, dv_max = 4;
    std::uint64_t dv_seed = 0;
    std::uint32_t dv_field = 2;
    CLI::App* dv = app.add_subcommand("diamond-verify",
                                      "Exactness and interval matching for a diamond pair");
    dv->add_option("--upper", dv_upper, "module file passing through W_k");
    dv->add_option("--lower", dv_lower, "module file passing through U_k");
    dv->add_option("-k,--k", dv_k, "the index where the modules differ")->required();
    CLI::Option* dv_seed_opt =
        dv->add_option("--seed", dv_seed, "generate a random exact diamond instead");
    dv->add_option("--length", dv_length, "length of the generated diamond");
    dv->add_option("--max-intervals", dv_max, "planted interval budget for generation");
    dv->add_option("--field", dv_field, "field modulus for generation");

    // plant
    std::string pl_type, pl_output, pl_truth;
    std::uint64_t pl_seed = 0;
    int pl_max = 4;
    std::uint32_t pl_field = 2;
    CLI::App* pl = app.add_subcommand("plant", "Random module with planted barcode");
    pl->add_option("--seed", pl_seed, "generator seed")->required();
    pl->add_option("--type", pl_type, "arrow string, e.g. fgf")->required();
    pl->add_option("--max-intervals", pl_max, "planted interval budget");
    pl->add_option("--field", pl_field, "field modulus");
    pl->add_option("-o,--output", pl_output, "module file path (stdout when omitted)");
    pl->add_option("--truth", pl_truth, "also write the planted barcode here");

    // plot
    std::string plot_input;
    CommonOpts plot_opts;
    plot_opts.format = "svg";
    CLI::App* plot = app.add_subcommand("plot", "Render a barcode file as SVG");
    plot->add_option("barcode", plot_input, "barcode JSON file")->required();
    plot->add_option("-o,--output", plot_opts.output, "Output path (stdout when omitted)");
    plot->add_option("--style", plot_opts.style, "barcode or diagram")
        ->check(CLI::IsMember({"barcode", "diagram"}));

    try {
        app.parse(argc, argv);
        if (dec->parsed()) return run_decompose(dec_input, dec_opts, dec_trace);
        if (hz->parsed()) return run_homology_zigzag(hz_input, hz_opts, hz_mode, hz_dims, hz_verify);
        if (loc->parsed()) return run_localize(loc_input, loc_k, loc_output, loc_check);
        if (dv->parsed())
            return run_diamond_verify(dv_upper, dv_lower, dv_k, dv_seed, dv_seed_opt->count() > 0,
                                      dv_length, dv_max, dv_field);
        if (pl->parsed()) return run_plant(pl_seed, pl_type, pl_max, pl_field, pl_output, pl_truth);
        if (plot->parsed()) return run_plot(plot_input, plot_opts);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
