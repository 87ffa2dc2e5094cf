// Copyright 2026 The kitaev-lab Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <kitaev/braid.hpp>
#include <kitaev/io.hpp>
#include <kitaev/majorana.hpp>
#include <kitaev/spin_ed.hpp>

namespace {

using kitaev::cplx;
using nlohmann::json;

// Exit codes: 0 success, 1 usage, 2 resource, 3 numeric/convergence.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitResource = 2;
constexpr int kExitNumeric = 3;

struct CommonConfig {
    int lx = 2;
    int ly = 2;
    std::string bc = "torus";
    double jx = 1, jy = 1, jz = 1;
    double hx = 0, hy = 0, hz = 0;
    uint64_t seed = 1;
    std::string config_path;
    std::string output_path;
};

void add_common_flags(CLI::App* cmd, CommonConfig& c) {
    cmd->add_option("--config", c.config_path, "JSON config file (flags override file values)");
    cmd->add_option("--lx", c.lx, "Unit cells along x");
    cmd->add_option("--ly", c.ly, "Unit cells along y");
    cmd->add_option("--bc", c.bc, "Boundary: torus or open")
        ->check(CLI::IsMember({"torus", "open"}));
    cmd->add_option("--jx", c.jx, "x-link coupling");
    cmd->add_option("--jy", c.jy, "y-link coupling");
    cmd->add_option("--jz", c.jz, "z-link coupling");
    cmd->add_option("--hx", c.hx, "Field component x");
    cmd->add_option("--hy", c.hy, "Field component y");
    cmd->add_option("--hz", c.hz, "Field component z");
    cmd->add_option("--seed", c.seed, "Solver seed");
    cmd->add_option("-o,--output", c.output_path,
                    "Output file (default stdout); a .manifest.json is written beside it");
}

// File values fill in every option the command line left untouched.
void apply_config_file(CLI::App* cmd, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open config file: " + path);
    json j;
    in >> j;
    for (const auto& [key, value] : j.items()) {
        CLI::Option* opt = cmd->get_option_no_throw("--" + key);
        if (!opt) throw CLI::ValidationError("--config", "unknown config key: " + key);
        if (opt->count() > 0) continue;  // explicit flag wins
        std::string text = value.is_string() ? value.get<std::string>() : value.dump();
        opt->add_result(text);
        opt->run_callback();
    }
}

kitaev::Boundary parse_bc(const std::string& s) {
    return s == "open" ? kitaev::Boundary::Open : kitaev::Boundary::Torus;
}

kitaev::CouplingParams params_of(const CommonConfig& c) {
    kitaev::CouplingParams p{c.jx, c.jy, c.jz, c.hx, c.hy, c.hz};
    p.validate();
    return p;
}

json config_echo(const CommonConfig& c, json extra = json::object()) {
    json j;
    j["lattice"] = {{"lx", c.lx}, {"ly", c.ly}, {"bc", c.bc}};
    j["couplings"] = {{"jx", kitaev::round12(c.jx)}, {"jy", kitaev::round12(c.jy)},
                      {"jz", kitaev::round12(c.jz)}, {"hx", kitaev::round12(c.hx)},
                      {"hy", kitaev::round12(c.hy)}, {"hz", kitaev::round12(c.hz)}};
    j["seed"] = c.seed;
    for (auto& [k, v] : extra.items()) j[k] = v;
    return j;
}

std::filesystem::path resolve_output(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("KITAEV_OUTPUT_DIR")) p = std::filesystem::path(dir) / p;
    }
    return p;
}

/// Emit the payload to stdout or the output file; with a file, also
/// write <file>.manifest.json (config echo, version, wall time).
void emit(const CommonConfig& c, const std::string& payload, const json& echo,
          double wall_seconds) {
    if (c.output_path.empty()) {
        std::cout << payload;
        return;
    }
    auto out_path = resolve_output(c.output_path);
    if (out_path.has_parent_path()) std::filesystem::create_directories(out_path.parent_path());
    std::ofstream out(out_path);
    if (!out) throw CLI::ValidationError("--output", "cannot write " + out_path.string());
    out << payload;
    json manifest;
    manifest["config"] = echo;
    manifest["version"] = kitaev::kVersion;
    manifest["wall_seconds"] = wall_seconds;
    std::ofstream mf(out_path.string() + ".manifest.json");
    mf << manifest.dump(2) << '\n';
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw CLI::ValidationError(what, "expected a comma-separated integer list");
        }
    }
    if (out.empty()) throw CLI::ValidationError(what, "empty list");
    return out;
}

int cmd_lattice_info(const CommonConfig& c) {
    auto t0 = std::chrono::steady_clock::now();
    auto lat = kitaev::build_lattice(c.lx, c.ly, parse_bc(c.bc));
    json j = kitaev::lattice_to_json(lat);
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(c, j.dump(2) + "\n", config_echo(c, {{"command", "lattice-info"}}), wall);
    return kExitOk;
}

int cmd_spectrum(const CommonConfig& c, int k, const std::string& flux_text, bool vectors,
                 double penalty) {
    auto t0 = std::chrono::steady_clock::now();
    auto lat = kitaev::build_lattice(c.lx, c.ly, parse_bc(c.bc));
    auto p = params_of(c);
    if (lat.n_sites() > kitaev::kEdCeiling)
        throw kitaev::ResourceError("register of " + std::to_string(lat.n_sites()) +
                                    " spins exceeds the ED ceiling of " +
                                    std::to_string(kitaev::kEdCeiling));
    auto H = kitaev::build_hamiltonian(lat, p);
    kitaev::SolverOptions sopts;
    sopts.seed = c.seed;
    kitaev::EigenResult res;
    json extra = {{"command", "spectrum"}, {"k", k}};
    if (!flux_text.empty()) {
        auto flux = parse_int_list(flux_text, "--flux");
        kitaev::SectorOptions sec;
        sec.solver = sopts;
        sec.penalty = penalty;
        res = kitaev::sector_ground(H, lat, p, flux, k, sec);
        extra["flux"] = flux;
    } else {
        res = kitaev::ground_states(H, k, sopts);
    }
    json j = kitaev::eigen_result_to_json(res, vectors);
    j["config"] = config_echo(c, extra);
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(c, j.dump(2) + "\n", config_echo(c, extra), wall);
    return kExitOk;
}

int cmd_phase_diagram(const CommonConfig& c, double step, int gap_size) {
    auto t0 = std::chrono::steady_clock::now();
    std::string csv = kitaev::phase_diagram_csv(step, gap_size);
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(c, csv,
         config_echo(c, {{"command", "phase-diagram"},
                         {"step", kitaev::round12(step)},
                         {"gap_size", gap_size}}),
         wall);
    return kExitOk;
}

int cmd_gap_sweep(const CommonConfig& c, const std::string& sizes_text) {
    auto t0 = std::chrono::steady_clock::now();
    auto sizes = parse_int_list(sizes_text, "--sizes");
    auto p = params_of(c);
    auto sweep = kitaev::bulk_gap_estimate(p, sizes);
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(c, kitaev::gap_sweep_csv(sweep),
         config_echo(c, {{"command", "gap-sweep"}, {"sizes", sizes}}), wall);
    return kExitOk;
}

int cmd_braid(const CommonConfig& c, std::vector<int> loops, int creation_site, int plaquette,
              bool discriminate, double penalty) {
    auto t0 = std::chrono::steady_clock::now();
    auto lat = kitaev::build_lattice(c.lx, c.ly, parse_bc(c.bc));
    auto p = params_of(c);
    if (lat.n_sites() > kitaev::kEdCeiling)
        throw kitaev::ResourceError("register of " + std::to_string(lat.n_sites()) +
                                    " spins exceeds the ED ceiling of " +
                                    std::to_string(kitaev::kEdCeiling));
    if (loops.empty()) loops = {1};

    auto H = kitaev::build_hamiltonian(lat, p);
    kitaev::ProtocolOptions popts;
    popts.solver.seed = c.seed;
    kitaev::StateVector gs;
    if (p.zero_field()) {
        std::vector<int> flux(static_cast<size_t>(lat.n_plaquettes()), 1);
        kitaev::SectorOptions sec;
        sec.solver = popts.solver;
        sec.penalty = penalty;
        gs = kitaev::sector_ground(H, lat, p, flux, 1, sec).eigenvectors.front();
        popts.ground_state = &gs;
    }

    std::vector<kitaev::BraidReport> reports;
    json jreports = json::array();
    for (int n : loops) {
        auto script = kitaev::standard_script(lat, creation_site, plaquette, n);
        auto rep = kitaev::run_protocol(lat, p, script, popts);
        jreports.push_back(kitaev::braid_report_to_json(rep));
        reports.push_back(std::move(rep));
    }
    json j;
    j["reports"] = jreports;
    json extra = {{"command", "braid"},
                  {"loops", loops},
                  {"creation_site", creation_site},
                  {"plaquette", plaquette}};
    if (discriminate) {
        auto verdict = kitaev::statistics_discriminator(reports);
        j["classification"] = kitaev::to_string(verdict);
        std::cerr << "classification: " << kitaev::to_string(verdict) << '\n';
    }
    j["config"] = config_echo(c, extra);
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(c, j.dump(2) + "\n", config_echo(c, extra), wall);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kitaev honeycomb model lab: spectra, phase diagram, anyon braiding"};
    app.require_subcommand(1);

    CommonConfig c_lat, c_spec, c_phase, c_gap, c_braid;

    CLI::App* lat = app.add_subcommand("lattice-info", "Dump the lattice structure as JSON");
    add_common_flags(lat, c_lat);

    CLI::App* spec = app.add_subcommand("spectrum", "Low-lying eigenvalues (optionally per flux sector)");
    add_common_flags(spec, c_spec);
    int k = 4;
    std::string flux_text;
    bool vectors = false;
    double spec_penalty = 0;
    spec->add_option("--k", k, "Number of eigenpairs")->check(CLI::PositiveNumber);
    spec->add_option("--flux", flux_text, "Comma-separated +-1 per plaquette (sector solve)");
    spec->add_flag("--vectors", vectors, "Include eigenvector amplitudes");
    spec->add_option("--penalty", spec_penalty, "Sector penalty strength (0 = default formula)");

    CLI::App* phase = app.add_subcommand("phase-diagram", "Simplex sweep CSV with phase labels and gaps");
    add_common_flags(phase, c_phase);
    double step = 0.05;
    int gap_size = 4;
    phase->add_option("--step", step, "Simplex grid step");
    phase->add_option("--gap-size", gap_size, "Torus extent L for the gap column")
        ->check(CLI::Range(2, 64));

    CLI::App* gap = app.add_subcommand("gap-sweep", "Bulk gap vs lattice size CSV");
    add_common_flags(gap, c_gap);
    std::string sizes_text = "4,7,10,13";
    gap->add_option("--sizes", sizes_text, "Comma-separated torus extents L");

    CLI::App* braid = app.add_subcommand("braid", "Ancilla interferometry braid protocol");
    add_common_flags(braid, c_braid);
    c_braid.lx = 3;
    c_braid.ly = 3;
    std::vector<int> loops;
    int creation_site = 8;
    int plaquette = 4;
    bool discriminate = false;
    double braid_penalty = 0;
    braid->add_option("--loops", loops, "Braid loop counts (repeatable)");
    braid->add_option("--creation-site", creation_site, "Site for the unconditional vortex pair");
    braid->add_option("--plaquette", plaquette, "Hexagon hosting the braid loop");
    braid->add_flag("--discriminate", discriminate, "Classify statistics from {1,2}-loop reports");
    braid->add_option("--penalty", braid_penalty, "Sector penalty strength (0 = default formula)");

    try {
        app.parse(argc, argv);
        CLI::App* cmd = app.get_subcommands().front();
        CommonConfig* cc = nullptr;
        if (cmd == lat) cc = &c_lat;
        else if (cmd == spec) cc = &c_spec;
        else if (cmd == phase) cc = &c_phase;
        else if (cmd == gap) cc = &c_gap;
        else cc = &c_braid;
        if (!cc->config_path.empty()) apply_config_file(cmd, cc->config_path);

        if (cmd == lat) return cmd_lattice_info(c_lat);
        if (cmd == spec) return cmd_spectrum(c_spec, k, flux_text, vectors, spec_penalty);
        if (cmd == phase) return cmd_phase_diagram(c_phase, step, gap_size);
        if (cmd == gap) return cmd_gap_sweep(c_gap, sizes_text);
        return cmd_braid(c_braid, loops, creation_site, plaquette, discriminate, braid_penalty);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    } catch (const kitaev::ResourceError& e) {
        std::cerr << "resource error: " << e.what() << '\n';
        return kExitResource;
    } catch (const kitaev::ConvergenceError& e) {
        std::cerr << "convergence error: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const kitaev::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
