// merodiff: construct complex differentiation matrices, differentiate sampled
// data, and rerun the bundled numerical experiments (CSV out).

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "merodiff/diffmat.hpp"
#include "merodiff/experiments.hpp"
#include "merodiff/serialize.hpp"

namespace {

using namespace merodiff;

Complex parse_complex(const std::string& text, const char* what) {
    // "RE" or "RE,IM"
    std::istringstream in(text);
    double re = 0, im = 0;
    char comma = 0;
    if (!(in >> re)) throw ValidationError(std::string(what) + ": cannot parse '" + text + "'");
    if (in >> comma) {
        if (comma != ',' || !(in >> im))
            throw ValidationError(std::string(what) + ": cannot parse '" + text + "'");
    }
    std::string rest;
    if (in >> rest) throw ValidationError(std::string(what) + ": trailing input in '" + text + "'");
    return Complex{re, im};
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ValidationError(std::string(what) + ": bad integer '" + item + "'");
        }
    }
    if (out.empty()) throw ValidationError(std::string(what) + ": empty list");
    return out;
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::cout << content;
    else
        write_text_file(out_path, content);
}

struct DiffOptions {
    std::string nodes_file, segment_spec, poles_file, samples_file;
    int equispaced_n = 0;
    std::string basis = "algebraic";
    int order = 1;
    std::string dump_matrix_path, out_path;
};

NodeSet<Complex> resolve_nodes(const DiffOptions& opt) {
    const int given = int(!opt.nodes_file.empty()) + int(!opt.segment_spec.empty()) +
                      int(opt.equispaced_n != 0);
    if (given != 1)
        throw ValidationError("diff: give exactly one of --nodes, --segment, --equispaced");
    if (!opt.nodes_file.empty()) return nodes_from_file(opt.nodes_file);
    if (opt.equispaced_n != 0) return equispaced_periodic_nodes(opt.equispaced_n);
    // --segment RE,IM,T0,T1,N
    std::istringstream in(opt.segment_spec);
    double re, im, t0, t1;
    int n;
    char c1, c2, c3, c4;
    if (!(in >> re >> c1 >> im >> c2 >> t0 >> c3 >> t1 >> c4 >> n) || c1 != ',' || c2 != ',' ||
        c3 != ',' || c4 != ',')
        throw ValidationError("diff: --segment expects RE,IM,T0,T1,N");
    return segment_nodes(Complex{re, im}, t0, t1, n);
}

int run_diff(const DiffOptions& opt) {
    const NodeSet<Complex> nodes = resolve_nodes(opt);
    const BasisFamily basis = basis_from_name(opt.basis);
    if (opt.order < 1) throw ValidationError("diff: --order must be >= 1");

    const bool needs_poles =
        basis == BasisFamily::Rational || basis == BasisFamily::PeriodicMeromorphic;
    std::optional<PoleSet<Complex>> poles;
    if (!opt.poles_file.empty()) poles = poles_from_file(opt.poles_file);
    if (needs_poles && !poles)
        throw ValidationError("diff: basis '" + opt.basis + "' requires --poles");
    if (!needs_poles && poles)
        throw ValidationError("diff: basis '" + opt.basis + "' takes no poles");

    DiffMatrix<Complex> d = [&] {
        switch (basis) {
            case BasisFamily::Algebraic: return algebraic_matrix(nodes);
            case BasisFamily::Trigonometric: return trigonometric_matrix(nodes);
            case BasisFamily::Rational: return rational_power(nodes, *poles, opt.order);
            case BasisFamily::PeriodicMeromorphic:
                return periodic_meromorphic_power(nodes, *poles, opt.order);
        }
        throw ValidationError("diff: unknown basis");
    }();
    // Plain bases take matrix powers for higher derivative orders.
    if (!needs_poles && opt.order > 1) {
        CMatrix m = d.matrix;
        for (int k = 1; k < opt.order; ++k) m = mat_mul(m, d.matrix);
        d.matrix = std::move(m);
        d.order = opt.order;
    }

    if (!opt.dump_matrix_path.empty())
        write_text_file(opt.dump_matrix_path, diffmatrix_to_json(d).dump(2) + "\n");

    const CVector samples = samples_from_file(opt.samples_file);
    const CVector df = d.apply(samples);
    emit(experiments::diff_to_csv(nodes.points(), df), opt.out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"complex differentiation matrices for rational and periodic meromorphic functions"};
    app.require_subcommand(1);

    // table1
    auto* table1 = app.add_subcommand("table1", "relative-error sweep for the third derivative of "
                                                "(z^7+z+1)/z^10 on the ray (1+i)t");
    int n_min = 4, n_max = 11;
    std::string table1_out;
    table1->add_option("--n-min", n_min, "smallest node count");
    table1->add_option("--n-max", n_max, "largest node count");
    table1->add_option("--out", table1_out, "CSV output path (default stdout)");

    // elliptic
    auto* elliptic = app.add_subcommand("elliptic", "convergence sweep for elliptic-function "
                                                    "derivatives via pole-corrected matrices");
    std::string function_name, n_list = "7,9,11,13,15,17,19,21", omega1_text = "2,0",
                omega2_text = "0,2", elliptic_out;
    elliptic->add_option("--function", function_name, "jacobi or weierstrass")->required();
    elliptic->add_option("--n", n_list, "comma-separated odd node counts");
    elliptic->add_option("--omega1", omega1_text, "Weierstrass period RE,IM");
    elliptic->add_option("--omega2", omega2_text, "Weierstrass period RE,IM");
    elliptic->add_option("--out", elliptic_out, "CSV output path (default stdout)");

    // kummer
    auto* kummer = app.add_subcommand("kummer", "smallest-modulus eigenpair of the discretized "
                                                "Kummer operator vs the confluent series");
    std::string b_text, scale_text = "5,5", basis_text = "algebraic", gauge_text = "max-entry",
                kummer_out, kummer_summary;
    int kummer_n = 21;
    kummer->add_option("--b", b_text, "equation parameter RE[,IM]")->required();
    kummer->add_option("--n", kummer_n, "node count");
    kummer->add_option("--scale", scale_text, "node scale RE,IM; nodes are scale*k/N");
    kummer->add_option("--basis", basis_text, "algebraic or trigonometric");
    kummer->add_option("--gauge", gauge_text, "max-entry or least-squares");
    kummer->add_option("--out", kummer_out, "CSV output path (default stdout)");
    kummer->add_option("--summary", kummer_summary, "summary JSON path (default stdout)");

    // diff
    auto* diff = app.add_subcommand("diff", "apply a differentiation matrix to sampled data");
    DiffOptions opt;
    diff->add_option("--nodes", opt.nodes_file, "node set JSON file");
    diff->add_option("--segment", opt.segment_spec, "generate nodes: RE,IM,T0,T1,N");
    diff->add_option("--equispaced", opt.equispaced_n, "generate N equispaced periodic nodes");
    diff->add_option("--poles", opt.poles_file, "pole set JSON file");
    diff->add_option("--samples", opt.samples_file, "sample JSON file")->required();
    diff->add_option("--basis", opt.basis,
                     "algebraic|trigonometric|rational|periodic-meromorphic");
    diff->add_option("--order", opt.order, "derivative order");
    diff->add_option("--dump-matrix", opt.dump_matrix_path, "write the matrix as JSON");
    diff->add_option("--out", opt.out_path, "CSV output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (table1->parsed()) {
            emit(experiments::sweep_to_csv(experiments::table1_sweep(n_min, n_max)), table1_out);
        } else if (elliptic->parsed()) {
            experiments::EllipticConfig config;
            if (function_name == "jacobi")
                config.function = experiments::EllipticFunction::Jacobi;
            else if (function_name == "weierstrass")
                config.function = experiments::EllipticFunction::Weierstrass;
            else
                throw ValidationError("elliptic: --function must be jacobi or weierstrass");
            config.n_values = parse_int_list(n_list, "--n");
            config.omega1 = parse_complex(omega1_text, "--omega1");
            config.omega2 = parse_complex(omega2_text, "--omega2");
            emit(experiments::sweep_to_csv(experiments::elliptic_sweep(config)), elliptic_out);
        } else if (kummer->parsed()) {
            experiments::KummerConfig config;
            config.b = parse_complex(b_text, "--b");
            config.n = kummer_n;
            config.scale = parse_complex(scale_text, "--scale");
            if (basis_text == "algebraic")
                config.basis = experiments::KummerBasis::Algebraic;
            else if (basis_text == "trigonometric")
                config.basis = experiments::KummerBasis::Trigonometric;
            else
                throw ValidationError("kummer: --basis must be algebraic or trigonometric");
            if (gauge_text == "max-entry")
                config.gauge = experiments::EigenvectorGauge::MaxEntry;
            else if (gauge_text == "least-squares")
                config.gauge = experiments::EigenvectorGauge::LeastSquares;
            else
                throw ValidationError("kummer: --gauge must be max-entry or least-squares");
            const auto result = experiments::kummer_experiment(config);
            emit(experiments::kummer_to_csv(result), kummer_out);
            nlohmann::json summary{
                {"lambda_m", {result.lambda.real(), result.lambda.imag()}},
                {"error", result.error},
                {"basis", basis_text},
                {"gauge", gauge_text},
                {"iterations", result.iterations},
                {"residual", result.residual},
            };
            if (kummer_summary.empty())
                std::cout << summary.dump() << "\n";
            else
                write_text_file(kummer_summary, summary.dump() + "\n");
        } else if (diff->parsed()) {
            return run_diff(opt);
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
