// Copyright 2026 The covpovm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Batch experiment driver.  Subcommands:
//   check  -- structural checks of the covariant measurement for one group
//             and fiducial (irreducibility, identity resolution, multiplier
//             factorization, informational completeness)
//   tomo   -- state tomography: exact inversion, a single sampled run, or a
//             shots schedule emitting a convergence CSV
//   cv     -- truncated-Fock-space checks of the coherent-state instance
//
// Exit codes: 0 all checks pass, 2 mathematical check failed,
// 3 ill-conditioned input, 4 I/O or config error.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <complex>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "covpovm/covpovm.hpp"

namespace {

using covpovm::cplx;
using covpovm::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 2;
constexpr int kExitIllConditioned = 3;
constexpr int kExitConfigError = 4;

constexpr int kSchemaVersion = 1;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Independent deterministic seed streams from the single master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(master ^ splitmix64(stream + 1));
}

cplx parse_complex(const std::string &text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s += c;
        }
    }
    if (s.empty()) {
        throw std::invalid_argument("empty complex literal");
    }
    auto parse_unit_imag = [](const std::string &t, double &im) {
        if (t == "i" || t == "+i") {
            im = 1.0;
            return true;
        }
        if (t == "-i") {
            im = -1.0;
            return true;
        }
        return false;
    };
    double im = 0.0;
    if (parse_unit_imag(s, im)) {
        return {0.0, im};
    }
    const char *begin = s.c_str();
    char *end = nullptr;
    const double first = std::strtod(begin, &end);
    if (end == begin) {
        throw std::invalid_argument("bad complex literal '" + text + "'");
    }
    if (*end == '\0') {
        return {first, 0.0};
    }
    if (*end == 'i' && *(end + 1) == '\0') {
        return {0.0, first};
    }
    const std::string rest(end);
    if (parse_unit_imag(rest, im)) {
        return {first, im};
    }
    const char *begin2 = end;
    char *end2 = nullptr;
    const double second = std::strtod(begin2, &end2);
    if (end2 == begin2 || *end2 != 'i' || *(end2 + 1) != '\0') {
        throw std::invalid_argument("bad complex literal '" + text + "'");
    }
    return {first, second};
}

void emit_report(const json &report, const std::string &out_path) {
    const std::string text = report.dump(2) + "\n";
    std::cout << text;
    if (!out_path.empty()) {
        covpovm::write_text_file(out_path, text);
    }
}

covpovm::StateVector make_fiducial(const covpovm::GroupSpec &spec, const std::string &kind,
                                   const std::string &file, std::uint64_t seed) {
    if (kind == "basis") {
        covpovm::StateVector psi = covpovm::StateVector::Zero(spec.order());
        psi(0) = 1.0;
        return psi;
    }
    if (kind == "gaussian" || kind == "discrete-gaussian") {
        return covpovm::discrete_gaussian_fiducial(spec);
    }
    if (kind == "random") {
        covpovm::Rng64 rng(seed);
        return covpovm::random_unit_vector(spec.order(), rng);
    }
    if (kind == "file") {
        if (file.empty()) {
            throw std::invalid_argument("--fiducial file requires --fiducial-file");
        }
        return covpovm::vector_from_json(json::parse(covpovm::read_text_file(file)));
    }
    throw std::invalid_argument("unknown fiducial preset '" + kind + "'");
}

covpovm::DensityMatrix make_state(const covpovm::GroupSpec &spec, const std::string &kind,
                                  const std::string &file, std::uint64_t seed, std::int64_t rank) {
    const std::int64_t d = spec.order();
    if (kind == "mixed") {
        return covpovm::DensityMatrix::validated(
            covpovm::ComplexMatrix::Identity(d, d) / static_cast<double>(d));
    }
    if (kind == "basis") {
        covpovm::ComplexMatrix rho = covpovm::ComplexMatrix::Zero(d, d);
        rho(0, 0) = 1.0;
        return covpovm::DensityMatrix::validated(rho);
    }
    if (kind == "random") {
        covpovm::Rng64 rng(seed);
        const std::int64_t r = rank <= 0 ? d : std::min(rank, d);
        return covpovm::DensityMatrix::validated(covpovm::random_density_matrix(d, r, rng));
    }
    if (kind == "file") {
        if (file.empty()) {
            throw std::invalid_argument("--state file requires --state-file");
        }
        return covpovm::DensityMatrix::validated(
            covpovm::matrix_from_json(json::parse(covpovm::read_text_file(file))));
    }
    throw std::invalid_argument("unknown state preset '" + kind + "'");
}

/// Applies config-file values for keys whose flags were not given explicitly.
template <typename T>
void merge_option(const CLI::App &app, const json &config, const std::string &flag,
                  const std::string &key, T &value) {
    if (app.count(flag) == 0 && config.contains(key)) {
        value = config.at(key).get<T>();
    }
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

struct CheckOptions {
    std::string group;
    std::string fiducial = "random";
    std::string fiducial_file;
    std::uint64_t seed = 1;
    double ic_tol = 1e-10;
    double residual_tol = 1e-11;
    std::string config_file;
    std::string out;
    std::string multipliers_csv;
    std::string multipliers_json;
};

int run_check(const CheckOptions &opt) {
    const covpovm::GroupSpec spec = covpovm::GroupSpec::parse(opt.group);
    const covpovm::PhaseSpace ps(spec);
    const std::uint64_t fiducial_seed = derive_seed(opt.seed, 0);
    const covpovm::StateVector psi =
        make_fiducial(spec, opt.fiducial, opt.fiducial_file, fiducial_seed);

    json config;
    config["group"] = spec.to_string();
    config["fiducial"] = opt.fiducial;
    if (!opt.fiducial_file.empty()) {
        config["fiducial_file"] = opt.fiducial_file;
    }
    config["seed"] = opt.seed;
    config["fiducial_seed"] = fiducial_seed;
    config["ic_tol"] = opt.ic_tol;
    config["residual_tol"] = opt.residual_tol;

    json checks = json::array();
    bool all_pass = true;
    auto push_check = [&](const std::string &name, bool pass, const json &measured,
                          const json &threshold) {
        json entry;
        entry["name"] = name;
        entry["pass"] = pass;
        entry["measured"] = measured;
        entry["threshold"] = threshold;
        checks.push_back(std::move(entry));
        all_pass = all_pass && pass;
    };

    const int commutant = covpovm::commutant_dimension(spec);
    push_check("commutant_dimension", commutant == 1, commutant, 1);

    const covpovm::CovariantPovm povm = covpovm::build_povm(ps, psi);
    const double identity_err = covpovm::max_abs(covpovm::ComplexMatrix(
        povm.identity_sum() - covpovm::ComplexMatrix::Identity(spec.order(), spec.order())));
    push_check("identity_resolution", identity_err < 1e-12, identity_err, 1e-12);

    const covpovm::MultiplierTable table = covpovm::extract_multiplier(povm, opt.residual_tol);
    push_check("multiplier_residual", table.max_residual < opt.residual_tol, table.max_residual,
               opt.residual_tol);

    double max_modulus = 0.0;
    for (const cplx &f : table.values) {
        max_modulus = std::max(max_modulus, std::abs(f));
    }
    push_check("multiplier_modulus_bound", max_modulus <= 1.0 + 1e-12, max_modulus, 1.0 + 1e-12);

    const covpovm::MultiplierTable oracle = covpovm::ambiguity_multipliers(ps, psi);
    double oracle_dev = 0.0;
    for (std::size_t i = 0; i < table.values.size(); ++i) {
        oracle_dev = std::max(oracle_dev, std::abs(table.values[i] - oracle.values[i]));
    }
    push_check("multiplier_matches_autocorrelation", oracle_dev < 1e-12, oracle_dev, 1e-12);

    if (!opt.multipliers_csv.empty()) {
        covpovm::write_text_file(opt.multipliers_csv, covpovm::multiplier_table_to_csv(ps, table));
    }
    if (!opt.multipliers_json.empty()) {
        covpovm::write_text_file(opt.multipliers_json,
                                 covpovm::multiplier_table_to_json(ps, table).dump(2) + "\n");
    }

    const covpovm::IcReport ic = covpovm::informational_completeness_report(ps, table, opt.ic_tol);
    {
        json entry;
        entry["name"] = "informational_completeness";
        entry["pass"] = ic.complete;
        entry["measured"] = ic.min_modulus;
        entry["threshold"] = ic.tol;
        entry["worst_point"]["chi"] = ic.worst_point.chi.coords;
        entry["worst_point"]["g"] = ic.worst_point.g.coords;
        checks.push_back(std::move(entry));
        all_pass = all_pass && ic.complete;
    }

    json report;
    report["schema_version"] = kSchemaVersion;
    report["command"] = "check";
    report["config"] = config;
    report["checks"] = checks;
    report["all_pass"] = all_pass;
    emit_report(report, opt.out);
    return all_pass ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// tomo
// ---------------------------------------------------------------------------

struct TomoOptions {
    std::string group;
    std::string fiducial = "random";
    std::string fiducial_file;
    std::string state = "random";
    std::string state_file;
    std::uint64_t seed = 1;
    bool state_seed_set = false;
    std::uint64_t state_seed = 0;
    std::int64_t state_rank = 0;  // 0 = full rank
    std::int64_t shots = 0;       // 0 = exact
    std::string shots_schedule;   // csv list; enables schedule mode
    std::int64_t num_seeds = 20;
    bool psd_project = false;
    double ic_tol = 1e-10;
    std::string config_file;
    std::string out;
    std::string csv;
};

double fit_loglog_slope(const std::vector<double> &shots, const std::vector<double> &errors) {
    const std::size_t n = shots.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += std::log10(shots[i]);
        my += std::log10(errors[i]);
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = std::log10(shots[i]) - mx;
        num += dx * (std::log10(errors[i]) - my);
        den += dx * dx;
    }
    return num / den;
}

int run_tomo(const TomoOptions &opt) {
    const covpovm::GroupSpec spec = covpovm::GroupSpec::parse(opt.group);
    const covpovm::PhaseSpace ps(spec);
    const std::uint64_t fiducial_seed = derive_seed(opt.seed, 0);
    const std::uint64_t state_seed = opt.state_seed_set ? opt.state_seed : derive_seed(opt.seed, 1);
    const std::uint64_t sample_seed_base = derive_seed(opt.seed, 2);

    const covpovm::StateVector psi =
        make_fiducial(spec, opt.fiducial, opt.fiducial_file, fiducial_seed);
    const covpovm::DensityMatrix rho =
        make_state(spec, opt.state, opt.state_file, state_seed, opt.state_rank);

    json config;
    config["group"] = spec.to_string();
    config["fiducial"] = opt.fiducial;
    if (!opt.fiducial_file.empty()) {
        config["fiducial_file"] = opt.fiducial_file;
    }
    config["state"] = opt.state;
    if (!opt.state_file.empty()) {
        config["state_file"] = opt.state_file;
    }
    config["seed"] = opt.seed;
    config["fiducial_seed"] = fiducial_seed;
    config["state_seed"] = state_seed;
    config["sample_seed_base"] = sample_seed_base;
    config["state_rank"] = opt.state_rank;
    config["shots"] = opt.shots;
    if (!opt.shots_schedule.empty()) {
        config["shots_schedule"] = opt.shots_schedule;
        config["num_seeds"] = opt.num_seeds;
    }
    config["psd_project"] = opt.psd_project;
    config["ic_tol"] = opt.ic_tol;

    const covpovm::CovariantPovm povm = covpovm::build_povm(ps, psi);
    const covpovm::MultiplierTable table = covpovm::extract_multiplier(povm);
    const covpovm::ProbabilityTable exact = covpovm::forward_probabilities(povm, rho);
    covpovm::ReconstructOptions ropt;
    ropt.ic_tol = opt.ic_tol;
    ropt.psd_project = opt.psd_project;

    json report;
    report["schema_version"] = kSchemaVersion;
    report["command"] = "tomo";
    report["config"] = config;
    report["condition_indicator"] = table.min_modulus;

    if (!opt.shots_schedule.empty()) {
        std::vector<std::int64_t> schedule;
        for (const std::string &token : CLI::detail::split(opt.shots_schedule, ',')) {
            schedule.push_back(std::stoll(token));
        }
        if (schedule.empty() || opt.num_seeds < 1) {
            throw std::invalid_argument("schedule mode needs shots values and num-seeds >= 1");
        }
        std::ostringstream csv;
        csv.precision(17);
        csv << "shots,seed,frobenius,trace_distance\n";
        std::vector<double> medians;
        std::vector<double> xs;
        for (const std::int64_t shots : schedule) {
            std::vector<double> errs;
            for (std::int64_t i = 0; i < opt.num_seeds; ++i) {
                const std::uint64_t seed_i = sample_seed_base + static_cast<std::uint64_t>(i);
                const covpovm::ProbabilityTable emp = covpovm::sample_outcomes(exact, shots, seed_i);
                const covpovm::TomographyResult rec = covpovm::reconstruct(povm, emp, table, ropt);
                const covpovm::ErrorMetrics metrics = covpovm::error_metrics(rho.mat, rec.rho_hat);
                csv << shots << ',' << seed_i << ',' << metrics.frobenius << ','
                    << metrics.trace_distance << '\n';
                errs.push_back(metrics.frobenius);
            }
            std::sort(errs.begin(), errs.end());
            const std::size_t n = errs.size();
            medians.push_back(n % 2 ? errs[n / 2] : 0.5 * (errs[n / 2 - 1] + errs[n / 2]));
            xs.push_back(static_cast<double>(shots));
        }
        if (!opt.csv.empty()) {
            covpovm::write_text_file(opt.csv, csv.str());
        }
        report["mode"] = "schedule";
        report["schedule"] = schedule;
        report["median_frobenius"] = medians;
        if (schedule.size() >= 2) {
            report["loglog_slope"] = fit_loglog_slope(xs, medians);
        }
        if (!opt.csv.empty()) {
            report["csv_path"] = opt.csv;
        } else {
            report["csv"] = csv.str();
        }
        emit_report(report, opt.out);
        return kExitOk;
    }

    if (opt.shots == 0) {
        const covpovm::TomographyResult rec = covpovm::reconstruct(povm, exact, table, ropt);
        const covpovm::ErrorMetrics metrics = covpovm::error_metrics(rho.mat, rec.rho_hat);
        report["mode"] = "exact";
        report["frobenius_error"] = metrics.frobenius;
        report["trace_distance"] = metrics.trace_distance;
        emit_report(report, opt.out);
        return kExitOk;
    }

    const covpovm::ProbabilityTable emp =
        covpovm::sample_outcomes(exact, opt.shots, sample_seed_base);
    const covpovm::TomographyResult rec = covpovm::reconstruct(povm, emp, table, ropt);
    const covpovm::ErrorMetrics metrics = covpovm::error_metrics(rho.mat, rec.rho_hat);
    report["mode"] = "sampled";
    report["sample_seed"] = sample_seed_base;
    report["frobenius_error"] = metrics.frobenius;
    report["trace_distance"] = metrics.trace_distance;
    report["projected"] = rec.projected;
    emit_report(report, opt.out);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// cv
// ---------------------------------------------------------------------------

struct CvOptions {
    int trunc = 16;
    double radius = 7.0;
    double step = 0.05;
    std::string alpha = "0.5+0.3i";
    int levels = 8;
    double tol = 1e-3;
    bool strict = false;
    std::string config_file;
    std::string out;
};

int run_cv(const CvOptions &opt) {
    const covpovm::FockSpace space(opt.trunc);
    const covpovm::QuadratureGrid grid = covpovm::QuadratureGrid::disk(opt.radius, opt.step);
    const cplx alpha = parse_complex(opt.alpha);

    json config;
    config["trunc"] = opt.trunc;
    config["radius"] = opt.radius;
    config["step"] = opt.step;
    config["alpha"] = json::array({alpha.real(), alpha.imag()});
    config["levels"] = opt.levels;
    config["tol"] = opt.tol;
    config["strict"] = opt.strict;

    json report;
    report["schema_version"] = kSchemaVersion;
    report["command"] = "cv";
    report["config"] = config;

    json params;
    params["N"] = opt.trunc;
    params["R"] = opt.radius;
    params["h"] = opt.step;
    params["alpha"] = json::array({alpha.real(), alpha.imag()});

    const covpovm::GsIdentityReport identity = covpovm::gs_identity_check(space, grid, opt.levels);
    {
        json check;
        check["params"] = params;
        check["max_error"] = identity.max_error;
        check["per_level_errors"] = identity.per_level_diag_error;
        check["max_offdiag"] = identity.max_offdiag;
        report["identity_check"] = std::move(check);
    }

    bool truncation_warning = false;
    bool pass = identity.max_error < opt.tol;
    const double ratio = covpovm::displacement_truncation_ratio(space, alpha);
    if (ratio > 1.0) {
        truncation_warning = true;
        report["contraction_check"] = nullptr;
    } else {
        const double err = covpovm::cv_contraction_error(space, grid, alpha, opt.levels);
        json check;
        check["params"] = params;
        check["max_error"] = err;
        report["contraction_check"] = std::move(check);
        pass = pass && err < opt.tol;
    }
    report["truncation_warning"] = truncation_warning;
    if (truncation_warning && opt.strict) {
        pass = false;
    }
    report["pass"] = pass;
    emit_report(report, opt.out);
    return pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Covariant phase-space measurements on finite Abelian groups: "
                 "structural checks, state tomography, and the coherent-state instance"};
    app.require_subcommand(1);

    CheckOptions check_opt;
    CLI::App *check = app.add_subcommand("check", "verify structural properties of a measurement");
    check->add_option("--group", check_opt.group, "comma-separated cyclic factors, e.g. 2,2,3")
        ->required();
    check->add_option("--fiducial", check_opt.fiducial,
                      "basis | discrete-gaussian | random | file");
    check->add_option("--fiducial-file", check_opt.fiducial_file, "JSON vector for --fiducial file");
    check->add_option("--seed", check_opt.seed, "master 64-bit seed");
    check->add_option("--ic-tol", check_opt.ic_tol, "informational-completeness tolerance");
    check->add_option("--residual-tol", check_opt.residual_tol, "multiplier residual tolerance");
    check->add_option("--config", check_opt.config_file, "JSON config file (flags override)");
    check->add_option("--out", check_opt.out, "write the JSON report here as well");
    check->add_option("--multipliers-csv", check_opt.multipliers_csv,
                      "dump the multiplier table as CSV");
    check->add_option("--multipliers-json", check_opt.multipliers_json,
                      "dump the multiplier table as JSON");

    TomoOptions tomo_opt;
    CLI::App *tomo = app.add_subcommand("tomo", "reconstruct a state from measurement statistics");
    tomo->add_option("--group", tomo_opt.group, "comma-separated cyclic factors")->required();
    tomo->add_option("--fiducial", tomo_opt.fiducial,
                     "basis | discrete-gaussian | random | file");
    tomo->add_option("--fiducial-file", tomo_opt.fiducial_file, "JSON vector for --fiducial file");
    tomo->add_option("--state", tomo_opt.state, "random | mixed | basis | file");
    tomo->add_option("--state-file", tomo_opt.state_file, "JSON matrix for --state file");
    tomo->add_option("--seed", tomo_opt.seed, "master 64-bit seed");
    auto *state_seed_opt = tomo->add_option("--state-seed", tomo_opt.state_seed,
                                            "override the derived state seed");
    tomo->add_option("--state-rank", tomo_opt.state_rank, "rank of the random state (0 = full)");
    tomo->add_option("--shots", tomo_opt.shots, "samples to draw; 0 = exact probabilities");
    tomo->add_option("--shots-schedule", tomo_opt.shots_schedule,
                     "comma-separated shots list; runs the convergence study");
    tomo->add_option("--num-seeds", tomo_opt.num_seeds, "seeds per schedule entry");
    tomo->add_flag("--psd-project", tomo_opt.psd_project,
                   "project sampled estimates onto the density cone");
    tomo->add_option("--ic-tol", tomo_opt.ic_tol, "conditioning tolerance for the inversion");
    tomo->add_option("--config", tomo_opt.config_file, "JSON config file (flags override)");
    tomo->add_option("--out", tomo_opt.out, "write the JSON report here as well");
    tomo->add_option("--csv", tomo_opt.csv, "write the convergence CSV here");

    CvOptions cv_opt;
    CLI::App *cv = app.add_subcommand("cv", "truncated-Fock-space coherent-state checks");
    cv->add_option("--trunc", cv_opt.trunc, "Fock truncation N");
    cv->add_option("--radius", cv_opt.radius, "quadrature disk radius");
    cv->add_option("--step", cv_opt.step, "quadrature lattice step");
    cv->add_option("--alpha", cv_opt.alpha, "displacement amplitude, e.g. 0.5+0.3i");
    cv->add_option("--levels", cv_opt.levels, "highest Fock level checked");
    cv->add_option("--tol", cv_opt.tol, "pass/fail tolerance for both checks");
    cv->add_flag("--strict", cv_opt.strict, "treat truncation warnings as failures");
    cv->add_option("--config", cv_opt.config_file, "JSON config file (flags override)");
    cv->add_option("--out", cv_opt.out, "write the JSON report here as well");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfigError;
    }

    try {
        if (check->parsed()) {
            if (!check_opt.config_file.empty()) {
                const json config = json::parse(covpovm::read_text_file(check_opt.config_file));
                merge_option(*check, config, "--group", "group", check_opt.group);
                merge_option(*check, config, "--fiducial", "fiducial", check_opt.fiducial);
                merge_option(*check, config, "--fiducial-file", "fiducial_file",
                             check_opt.fiducial_file);
                merge_option(*check, config, "--seed", "seed", check_opt.seed);
                merge_option(*check, config, "--ic-tol", "ic_tol", check_opt.ic_tol);
                merge_option(*check, config, "--residual-tol", "residual_tol",
                             check_opt.residual_tol);
                merge_option(*check, config, "--out", "out", check_opt.out);
            }
            return run_check(check_opt);
        }
        if (tomo->parsed()) {
            tomo_opt.state_seed_set = state_seed_opt->count() > 0;
            if (!tomo_opt.config_file.empty()) {
                const json config = json::parse(covpovm::read_text_file(tomo_opt.config_file));
                merge_option(*tomo, config, "--group", "group", tomo_opt.group);
                merge_option(*tomo, config, "--fiducial", "fiducial", tomo_opt.fiducial);
                merge_option(*tomo, config, "--fiducial-file", "fiducial_file",
                             tomo_opt.fiducial_file);
                merge_option(*tomo, config, "--state", "state", tomo_opt.state);
                merge_option(*tomo, config, "--state-file", "state_file", tomo_opt.state_file);
                merge_option(*tomo, config, "--seed", "seed", tomo_opt.seed);
                merge_option(*tomo, config, "--state-rank", "state_rank", tomo_opt.state_rank);
                merge_option(*tomo, config, "--shots", "shots", tomo_opt.shots);
                merge_option(*tomo, config, "--shots-schedule", "shots_schedule",
                             tomo_opt.shots_schedule);
                merge_option(*tomo, config, "--num-seeds", "num_seeds", tomo_opt.num_seeds);
                merge_option(*tomo, config, "--ic-tol", "ic_tol", tomo_opt.ic_tol);
                merge_option(*tomo, config, "--out", "out", tomo_opt.out);
                merge_option(*tomo, config, "--csv", "csv", tomo_opt.csv);
                if (tomo->count("--psd-project") == 0 && config.contains("psd_project")) {
                    tomo_opt.psd_project = config.at("psd_project").get<bool>();
                }
                if (tomo->count("--state-seed") == 0 && config.contains("state_seed")) {
                    tomo_opt.state_seed = config.at("state_seed").get<std::uint64_t>();
                    tomo_opt.state_seed_set = true;
                }
            }
            return run_tomo(tomo_opt);
        }
        if (cv->parsed()) {
            if (!cv_opt.config_file.empty()) {
                const json config = json::parse(covpovm::read_text_file(cv_opt.config_file));
                merge_option(*cv, config, "--trunc", "trunc", cv_opt.trunc);
                merge_option(*cv, config, "--radius", "radius", cv_opt.radius);
                merge_option(*cv, config, "--step", "step", cv_opt.step);
                merge_option(*cv, config, "--alpha", "alpha", cv_opt.alpha);
                merge_option(*cv, config, "--levels", "levels", cv_opt.levels);
                merge_option(*cv, config, "--tol", "tol", cv_opt.tol);
                merge_option(*cv, config, "--out", "out", cv_opt.out);
                if (cv->count("--strict") == 0 && config.contains("strict")) {
                    cv_opt.strict = config.at("strict").get<bool>();
                }
            }
            return run_cv(cv_opt);
        }
    } catch (const covpovm::ill_conditioned_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIllConditioned;
    } catch (const covpovm::grid_too_small_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const covpovm::multiplier_residual_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
    return kExitConfigError;
}
