#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ridgekit/annihilator.hpp"
#include "ridgekit/direction.hpp"
#include "ridgekit/io.hpp"
#include "ridgekit/projection.hpp"
#include "ridgekit/radon.hpp"
#include "ridgekit/reproduce.hpp"
#include "ridgekit/shannon.hpp"
#include "ridgekit/spectrum.hpp"
#include "ridgekit/stochastic.hpp"

namespace {

using namespace ridgekit;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitTolerance = 3;

/** Bad input (unreadable file, parse failure, semantic rejection). */
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/** Everything the subcommands consume, populated by the shared flags. */
struct RunConfig {
    std::string measure = "normalized";
    int band = 8;
    int grid = 128;
    int bins = 16;
    double tol = 1e-8;
    std::uint64_t seed = 0;
    std::string out;
};

Measure parse_measure(const std::string& name) {
    if (name == "normalized") return Measure::normalized;
    if (name == "lebesgue") return Measure::lebesgue;
    throw InputError("unknown measure '" + name +
                     "' (expected normalized or lebesgue)");
}

/** Parse `path` with `parse`, rewriting failures as "path: line N: msg". */
template <class Parse>
auto load_file(const std::string& path, Parse parse) {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open");
    try {
        return parse(in);
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(path + ": " + e.what());
    }
}

/** Run `emit` against --out when set, stdout otherwise. */
void write_text(const std::string& out_path,
                const std::function<void(std::ostream&)>& emit) {
    if (out_path.empty()) {
        emit(std::cout);
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw InputError(out_path + ": cannot open for writing");
    emit(f);
}

std::ofstream open_output(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw InputError(path + ": cannot open for writing");
    return f;
}

std::vector<DirectionClass> canonicalize_rows(const std::vector<ivec>& rows) {
    std::vector<DirectionClass> classes;
    classes.reserve(rows.size());
    for (const ivec& row : rows) classes.push_back(DirectionClass::canonical(row));
    return classes;
}

int run_canon(const RunConfig& cfg, const std::string& in_path,
              const std::vector<std::string>& entries) {
    if (!in_path.empty()) {
        auto rows = load_file(in_path, parse_direction_rows);
        auto classes = canonicalize_rows(rows);
        write_text(cfg.out, [&](std::ostream& os) {
            emit_direction_rows(os, classes);
        });
        return kExitOk;
    }
    std::string joined;
    for (const std::string& e : entries) {
        if (!joined.empty()) joined += ' ';
        joined += e;
    }
    std::istringstream ss(joined);
    ivec w;
    int v = 0;
    while (ss >> v) w.push_back(v);
    if (!ss.eof()) throw InputError("direction entries must be integers");
    DirectionClass c = DirectionClass::canonical(w);
    write_text(cfg.out, [&](std::ostream& os) {
        emit_direction_rows(os, {c});
    });
    return kExitOk;
}

int run_complete(const RunConfig& cfg, const std::string& in_path, int dim) {
    if (!in_path.empty()) {
        auto rows = load_file(in_path, parse_direction_rows);
        auto classes = canonicalize_rows(rows);
        int m = classes.front().dim();
        CompletenessReport report = is_complete(classes, m, cfg.band);
        write_text(cfg.out, [&](std::ostream& os) {
            os << "box_radius " << report.box_radius << "\n";
            os << "complete " << (report.complete_on_box ? "yes" : "no")
               << "\n";
            os << "uncovered " << report.uncovered.size() << "\n";
            for (const ivec& k : report.uncovered) {
                for (std::size_t j = 0; j < k.size(); ++j)
                    os << (j ? " " : "  ") << k[j];
                os << "\n";
            }
            os << "overlaps " << report.overlaps.size() << "\n";
            for (const LineOverlap& o : report.overlaps) {
                os << "  rows " << o.first << " and " << o.second << " at";
                for (int kj : o.point) os << " " << kj;
                os << "\n";
            }
        });
        return kExitOk;
    }
    auto family = enumerate_primitive(dim, cfg.band);
    write_text(cfg.out, [&](std::ostream& os) {
        emit_direction_rows(os, family);
    });
    return kExitOk;
}

int run_project(const RunConfig& cfg, const std::string& in_path,
                const std::string& dirs_path) {
    LatticeSpectrum S = load_file(in_path, parse_spectrum);
    auto rows = load_file(dirs_path, parse_direction_rows);
    DirectionSet W = DirectionSet::of(rows);
    Measure measure = parse_measure(cfg.measure);
    ProjectionSplit split = project(S, W, measure);

    std::string prefix = cfg.out.empty() ? "out" : cfg.out;
    {
        std::ofstream f = open_output(prefix + ".projected.spectrum");
        emit_spectrum(f, split.projected);
    }
    {
        std::ofstream f = open_output(prefix + ".residual.spectrum");
        emit_spectrum(f, split.residual);
    }
    nlohmann::json summary;
    summary["distance_sq"] = split.distance_sq;
    summary["measure"] = cfg.measure;
    std::cout << summary.dump() << "\n";
    return kExitOk;
}

int run_radon(const RunConfig& cfg, const std::string& in_path,
              const std::string& spectrum_path, const std::string& dirs_path) {
    GridFunction G;
    if (!in_path.empty()) {
        G = load_file(in_path, parse_grid);
    } else {
        LatticeSpectrum S = load_file(spectrum_path, parse_spectrum);
        std::vector<int> shape(static_cast<std::size_t>(S.m), cfg.grid);
        G = synthesize_grid(S, shape);
    }
    auto dirs = load_file(dirs_path, parse_real_rows);
    if (dirs.empty()) throw InputError(dirs_path + ": no directions");

    std::string prefix = cfg.out.empty() ? "out" : cfg.out;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        RadonProfile profile = radon_profile(G, dirs[i], cfg.bins);
        std::string path =
            prefix + ".radon." + std::to_string(i) + ".csv";
        std::ofstream f = open_output(path);
        for (std::size_t b = 0; b < profile.ts.size(); ++b)
            f << format_double(profile.ts[b]) << ","
              << format_double(profile.values[b].real()) << "\n";
        std::cout << "direction " << i << " -> " << path << " (" << cfg.bins
                  << " bins, width " << format_double(profile.bin_width)
                  << ")\n";
    }
    return kExitOk;
}

int run_annihilate(const RunConfig& cfg, const std::string& dirs_path,
                   const std::string& zs_path) {
    auto rows = load_file(dirs_path, parse_direction_rows);
    DirectionSet W = DirectionSet::of(rows);
    auto zs = load_file(zs_path, parse_real_rows);
    if (zs.size() != W.size())
        throw InputError(zs_path + ": expected one displacement row per "
                         "direction (" + std::to_string(W.size()) + ")");
    HatFunction hat = haar_hat(zs[0]);
    for (std::size_t k = 1; k < zs.size(); ++k)
        hat = convolve_hats(hat, haar_hat(zs[k]));
    if (hat.dim() != W.dim())
        throw InputError(zs_path + ": displacement dimension " +
                         std::to_string(hat.dim()) +
                         " does not match direction dimension " +
                         std::to_string(W.dim()));

    const int t_count = 64;
    rvec ts = chebyshev_samples(t_count);
    std::string prefix = cfg.out.empty() ? "out" : cfg.out;
    std::string path = prefix + ".annihilate.csv";
    {
        std::ofstream f = open_output(path);
        rvec xi(static_cast<std::size_t>(W.dim()));
        for (std::size_t i = 0; i < W.size(); ++i) {
            for (double t : ts) {
                for (std::size_t j = 0; j < xi.size(); ++j)
                    xi[j] = t * static_cast<double>(W[i].coords()[j]);
                f << format_double(t) << "," << i << ","
                  << format_double(hat(xi)) << "\n";
            }
        }
    }
    AnnihilationReport report = verify_annihilation(hat, W, cfg.tol, t_count);
    std::cout << "samples -> " << path << "\n";
    std::cout << (report.pass ? "PASS" : "FAIL") << " max |hat| on lines = "
              << format_double(report.max_abs) << " (tol "
              << format_double(cfg.tol) << ")\n";
    return report.pass ? kExitOk : kExitTolerance;
}

int run_interp(const RunConfig& cfg, const std::string& in_path,
               const std::string& queries_path, int band_flag_count) {
    LatticeSpectrum S = load_file(in_path, parse_spectrum);
    int band = cfg.band;
    if (band_flag_count == 0) {
        band = 0;
        for (const auto& [k, v] : S.c)
            for (int kj : k) band = std::max(band, std::abs(kj));
    }
    HatSamples H = hat_samples(S, band);

    std::vector<rvec> queries;
    if (queries_path.empty()) {
        queries = parse_real_rows(std::cin);
    } else {
        queries = load_file(queries_path, parse_real_rows);
    }
    for (std::size_t i = 0; i < queries.size(); ++i)
        if (static_cast<int>(queries[i].size()) != S.m)
            throw InputError("query row " + std::to_string(i + 1) + " has " +
                             std::to_string(queries[i].size()) +
                             " coordinates, spectrum dimension is " +
                             std::to_string(S.m));

    write_text(cfg.out, [&](std::ostream& os) {
        for (const rvec& xi : queries) {
            cplx v = interpolate(H, xi);
            for (double x : xi) os << format_double(x) << " ";
            os << format_double(v.real()) << " " << format_double(v.imag())
               << "\n";
        }
    });
    return kExitOk;
}

int run_condexp(const RunConfig& cfg, const std::string& in_path,
                bool quantile) {
    EmpiricalSample S = load_file(in_path, parse_sample_csv);
    BinnedConditional C =
        quantile ? conditional_expectation(S, quantile_edges(S.xs, cfg.bins))
                 : conditional_expectation(S, cfg.bins);
    write_text(cfg.out, [&](std::ostream& os) { emit_binned_csv(os, C); });
    return kExitOk;
}

int run_reproduce(const RunConfig& cfg) {
    std::vector<CheckResult> checks = standard_checks();
    bool all_pass = true;
    write_text(cfg.out, [&](std::ostream& os) {
        char line[256];
        std::snprintf(line, sizeof line, "%-28s %-22s %-12s %-8s %s\n",
                      "check", "value", "target", "tol", "status");
        os << line;
        for (const CheckResult& c : checks) {
            std::snprintf(line, sizeof line, "%-28s %-22.15g %-12g %-8g %s\n",
                          c.name.c_str(), c.value, c.target, c.tol,
                          c.pass ? "PASS" : "FAIL");
            os << line;
            if (!c.detail.empty()) os << "    " << c.detail << "\n";
        }
    });
    for (const CheckResult& c : checks) all_pass = all_pass && c.pass;
    return all_pass ? kExitOk : kExitTolerance;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ridge-function toolkit: direction classes, spectral "
                 "projection, Radon profiles, annihilating hats, transform "
                 "interpolation, conditional expectation"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string in_path, dirs_path, zs_path, queries_path, spectrum_path;
    std::vector<std::string> canon_entries;
    int dim = 0;
    bool quantile = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--measure", cfg.measure,
                        "inner-product normalization: normalized (dx/2^m) or "
                        "lebesgue (dx)")
            ->check(CLI::IsMember({"normalized", "lebesgue"}));
        cmd->add_option("--tol", cfg.tol, "tolerance for pass/fail checks")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--seed", cfg.seed,
                        "random seed (reserved; current commands are "
                        "deterministic)");
        cmd->add_option("--out", cfg.out,
                        "output path or prefix (default: stdout / 'out')");
    };

    CLI::App* canon = app.add_subcommand(
        "canon", "canonicalize integer directions ('4 -6' -> '2 -3')");
    canon->add_option("entries", canon_entries,
                      "direction entries, quoted as one argument ('4 -6')");
    canon->add_option("--in", in_path, "file of direction rows instead");
    add_common(canon);

    CLI::App* complete = app.add_subcommand(
        "complete",
        "enumerate the complete direction family for a box, or check a "
        "family's coverage");
    complete->add_option("--dim", dim, "dimension to enumerate for")
        ->check(CLI::PositiveNumber);
    complete->add_option("--in", in_path,
                         "direction rows to check instead of enumerating");
    complete->add_option("--band", cfg.band, "box radius (default 8)")
        ->check(CLI::NonNegativeNumber);
    add_common(complete);

    CLI::App* project = app.add_subcommand(
        "project", "split a spectrum against the span of ridge directions");
    project->add_option("--in", in_path, "spectrum file")->required();
    project->add_option("--dirs", dirs_path, "direction rows file")
        ->required();
    add_common(project);

    CLI::App* radon = app.add_subcommand(
        "radon", "binned profiles of a grid function along directions");
    radon->add_option("--in", in_path, "grid file");
    radon->add_option("--spectrum", spectrum_path,
                      "spectrum file to synthesize on a --grid^m grid "
                      "instead of --in");
    radon->add_option("--dirs", dirs_path,
                      "real direction rows (normalized internally)")
        ->required();
    radon->add_option("--bins", cfg.bins, "bin count (default 64)")
        ->check(CLI::PositiveNumber);
    radon->add_option("--grid", cfg.grid,
                      "cells per axis when synthesizing from --spectrum")
        ->check(CLI::PositiveNumber);
    add_common(radon);

    CLI::App* annihilate = app.add_subcommand(
        "annihilate",
        "build the product of per-direction Haar hats and verify it "
        "vanishes on the direction lines");
    annihilate->add_option("--dirs", dirs_path, "direction rows file")
        ->required();
    annihilate
        ->add_option("--zs", zs_path,
                     "real displacement rows, one per direction")
        ->required();
    add_common(annihilate);

    CLI::App* interp = app.add_subcommand(
        "interp",
        "evaluate the transform of a spectrum at query points via the "
        "cardinal series");
    interp->add_option("--in", in_path, "spectrum file")->required();
    interp->add_option("--queries", queries_path,
                       "query rows 'xi_1 ... xi_m' (stdin when omitted)");
    CLI::Option* band_opt =
        interp->add_option("--band", cfg.band,
                           "lattice sample band (default: spectrum's own "
                           "band)");
    band_opt->check(CLI::NonNegativeNumber);
    add_common(interp);

    CLI::App* condexp = app.add_subcommand(
        "condexp", "binned conditional expectation of a sample file");
    condexp->add_option("--in", in_path, "sample CSV 'x,re[,im]'")
        ->required();
    condexp->add_option("--bins", cfg.bins, "bin count (default 16)")
        ->check(CLI::PositiveNumber);
    condexp->add_flag("--quantile", quantile,
                      "bin at sample quantiles instead of equal widths");
    add_common(condexp);

    CLI::App* reproduce = app.add_subcommand(
        "reproduce", "run the built-in worked-example checks");
    add_common(reproduce);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (canon->parsed()) {
            if (canon_entries.empty() && in_path.empty()) {
                std::cerr << "canon: give direction entries or --in FILE\n";
                return kExitUsage;
            }
            return run_canon(cfg, in_path, canon_entries);
        }
        if (complete->parsed()) {
            if (in_path.empty() && dim == 0) {
                std::cerr << "complete: give --dim M or --in FILE\n";
                return kExitUsage;
            }
            if (!in_path.empty() && dim != 0) {
                std::cerr << "complete: --dim and --in are exclusive\n";
                return kExitUsage;
            }
            return run_complete(cfg, in_path, dim);
        }
        if (project->parsed()) return run_project(cfg, in_path, dirs_path);
        if (radon->parsed()) {
            if (in_path.empty() == spectrum_path.empty()) {
                std::cerr << "radon: give exactly one of --in or "
                             "--spectrum\n";
                return kExitUsage;
            }
            return run_radon(cfg, in_path, spectrum_path, dirs_path);
        }
        if (annihilate->parsed())
            return run_annihilate(cfg, dirs_path, zs_path);
        if (interp->parsed())
            return run_interp(cfg, in_path, queries_path,
                              static_cast<int>(band_opt->count()));
        if (condexp->parsed()) return run_condexp(cfg, in_path, quantile);
        if (reproduce->parsed()) return run_reproduce(cfg);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitUsage;
}
