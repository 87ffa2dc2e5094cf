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

#include <kitaev/braid.hpp>

#include <algorithm>
#include <cmath>
#include <random>

namespace kitaev {

void ProtocolScript::validate() const {
    if (steps.empty() || steps.front().kind != StepKind::PrepareAncillaPlus)
        throw ProtocolError("script must start with PrepareAncillaPlus");
    for (size_t i = 1; i < steps.size(); ++i) {
        if (steps[i].kind == StepKind::PrepareAncillaPlus)
            throw ProtocolError("script must contain exactly one PrepareAncillaPlus");
        if (steps[i].kind == StepKind::MeasureAncilla && i + 1 != steps.size())
            throw ProtocolError("MeasureAncilla must be the last step");
    }
}

StateVector attach_ancilla(const StateVector& psi) {
    if (psi.n_ancilla() != 0) throw ProtocolError("ancilla already attached");
    const size_t dim = psi.dim();
    std::vector<cplx> amps(2 * dim);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (size_t x = 0; x < dim; ++x) {
        amps[x] = psi[x] * inv_sqrt2;
        amps[x + dim] = psi[x] * inv_sqrt2;
    }
    return StateVector::from_amplitudes(psi.n_spins(), 1, std::move(amps));
}

StateVector controlled_pauli(const StateVector& psi, int site, Axis axis) {
    if (psi.n_ancilla() != 1) throw ProtocolError("controlled_pauli requires an ancilla");
    if (site < 0 || site >= psi.n_spins())
        throw RegisterError("controlled_pauli site out of range: " + std::to_string(site));
    StringAction act = string_action(PauliString::single(site, axis));
    const size_t half = psi.dim() / 2;
    std::vector<cplx> amps(psi.dim());
    for (size_t x = 0; x < half; ++x) amps[x] = psi[x];
    for (size_t x = 0; x < half; ++x)
        amps[(x ^ act.flip) | half] = act.factor(x) * psi[x | half];
    return StateVector::from_amplitudes(psi.n_spins(), 1, std::move(amps));
}

StateVector unconditional_pauli(const StateVector& psi, int site, Axis axis) {
    if (site < 0 || site >= psi.n_spins())
        throw RegisterError("pauli site out of range: " + std::to_string(site));
    return apply(PauliString::single(site, axis), psi);
}

namespace {
// Letters by hexagon position 1..6 for the loop operator.
constexpr Axis kLoopAxes[6] = {Axis::Z, Axis::Y, Axis::X, Axis::Z, Axis::Y, Axis::X};
}  // namespace

PauliString loop_string(const std::array<Site, 6>& hexagon) {
    PauliString s;
    for (int i = 0; i < 6; ++i) s.mul_right(hexagon[static_cast<size_t>(i)].index, kLoopAxes[i]);
    return s;
}

StateVector braid_loop(const HoneycombLattice& lat, const StateVector& psi,
                       const std::array<Site, 6>& hexagon) {
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (hexagon[static_cast<size_t>(i)].index == hexagon[static_cast<size_t>(j)].index)
                throw GeometryError("braid hexagon sites must be distinct");
    for (int i = 0; i < 6; ++i) {
        int a = hexagon[static_cast<size_t>(i)].index;
        int b = hexagon[static_cast<size_t>((i + 1) % 6)].index;
        bool bonded = false;
        for (LinkType t : {LinkType::X, LinkType::Y, LinkType::Z})
            if (auto n = lat.neighbor(a, t); n && *n == b) bonded = true;
        if (!bonded)
            throw GeometryError("braid hexagon sites are not a closed nearest-neighbor path");
    }
    // U6^x first, then U1^z ... U5^y.
    StateVector s = controlled_pauli(psi, hexagon[5].index, kLoopAxes[5]);
    for (int i = 0; i < 5; ++i) s = controlled_pauli(s, hexagon[static_cast<size_t>(i)].index, kLoopAxes[i]);
    return s;
}

ProtocolScript standard_script(const HoneycombLattice& lat, int creation_site,
                               int braid_plaquette, int n_loops) {
    if (creation_site < 0 || creation_site >= lat.n_sites())
        throw LookupError("creation site out of range");
    const auto& hex = plaquette_sites(lat, braid_plaquette);
    ProtocolScript sc;
    sc.steps.push_back({StepKind::PrepareAncillaPlus});
    sc.steps.push_back({StepKind::UnconditionalPauli, creation_site, Axis::Z});
    sc.steps.push_back({StepKind::ControlledPauli, hex[5].index, Axis::Z});
    for (int l = 0; l < n_loops; ++l) {
        ProtocolStep st;
        st.kind = StepKind::BraidLoop;
        st.plaquette = braid_plaquette;
        sc.steps.push_back(st);
    }
    sc.steps.push_back({StepKind::ControlledPauli, hex[5].index, Axis::Z});
    sc.steps.push_back({StepKind::UnconditionalPauli, creation_site, Axis::Z});
    sc.validate();
    return sc;
}

BraidReport run_protocol(const HoneycombLattice& lat, const CouplingParams& params,
                         const ProtocolScript& script, const ProtocolOptions& opts) {
    script.validate();
    StateVector gs;
    if (opts.ground_state) {
        gs = *opts.ground_state;
        if (gs.dim() != (size_t{1} << lat.n_sites()) || gs.n_ancilla() != 0)
            throw RegisterError("supplied ground state does not match the lattice");
    } else {
        SparseOperator H = build_hamiltonian(lat, params);
        if (params.zero_field()) {
            // start from the vortex-free sector (on small tori the global
            // ground state can live in a different flux sector)
            std::vector<int> flux(static_cast<size_t>(lat.n_plaquettes()), 1);
            SectorOptions sopts;
            sopts.solver = opts.solver;
            gs = sector_ground(H, lat, params, flux, 1, sopts).eigenvectors.front();
        } else {
            gs = ground_states(H, 1, opts.solver).eigenvectors.front();
        }
    }

    StateVector state = gs;
    int loops = 0;
    double drift = 0;
    bool ancilla = false;
    for (const ProtocolStep& st : script.steps) {
        switch (st.kind) {
            case StepKind::PrepareAncillaPlus:
                state = attach_ancilla(state);
                ancilla = true;
                break;
            case StepKind::ControlledPauli:
                state = controlled_pauli(state, st.site, st.axis);
                break;
            case StepKind::UnconditionalPauli:
                state = unconditional_pauli(state, st.site, st.axis);
                break;
            case StepKind::BraidLoop:
                if (!ancilla) throw ProtocolError("BraidLoop before the ancilla is prepared");
                state = braid_loop(lat, state, plaquette_sites(lat, st.plaquette));
                ++loops;
                break;
            case StepKind::MeasureAncilla:
                break;  // readout is the density-matrix extraction below
        }
        drift = std::max(drift, std::abs(1.0 - state.norm()));
    }
    if (!ancilla) throw ProtocolError("script never prepared the ancilla");

    const size_t half = state.dim() / 2;
    BraidReport rep;
    rep.script_echo = script;
    rep.n_loops = loops;
    rep.norm_drift = drift;
    // rho_ab = <psi_a|psi_b> / 2 over the branch decomposition
    // |psi> = (|0>_a psi_0 + |1>_a psi_1)/sqrt2.
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            cplx s{0, 0};
            for (size_t x = 0; x < half; ++x)
                s += std::conj(state[x + static_cast<size_t>(a) * half]) *
                     state[x + static_cast<size_t>(b) * half];
            rep.rho_ancilla(a, b) = s;
        }
    rep.coherence = std::abs(rep.rho_ancilla(0, 1));
    rep.phase = std::arg(rep.rho_ancilla(0, 1));
    for (int a = 0; a < 2; ++a) {
        cplx ov{0, 0};
        double nrm = 0;
        for (size_t x = 0; x < half; ++x) {
            cplx amp = state[x + static_cast<size_t>(a) * half];
            ov += std::conj(gs[x]) * amp;
            nrm += std::norm(amp);
        }
        rep.leakage[static_cast<size_t>(a)] =
            nrm > 0 ? 1.0 - std::norm(ov) / nrm : 0.0;
    }
    return rep;
}

ProjectedBraid projected_braid(const std::vector<StateVector>& basis, const PauliString& loop) {
    const int k = static_cast<int>(basis.size());
    if (k == 0) throw DomainError("empty ground basis");
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            cplx g = inner(basis[static_cast<size_t>(a)], basis[static_cast<size_t>(b)]);
            double want = a == b ? 1.0 : 0.0;
            if (std::abs(g - want) > 1e-8)
                throw DomainError("ground basis is not orthonormal within 1e-8");
        }
    ProjectedBraid out;
    out.matrix = Eigen::MatrixXcd(k, k);
    std::vector<StateVector> mapped;
    mapped.reserve(static_cast<size_t>(k));
    for (int b = 0; b < k; ++b) mapped.push_back(apply(loop, basis[static_cast<size_t>(b)]));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            out.matrix(a, b) = inner(basis[static_cast<size_t>(a)], mapped[static_cast<size_t>(b)]);
    out.unitarity_defect =
        (out.matrix.adjoint() * out.matrix - Eigen::MatrixXcd::Identity(k, k)).norm();
    return out;
}

BraidMatrix reference_braid_matrix(int n) {
    const double t = n * M_PI / 4.0;
    BraidMatrix m;
    m << cplx{std::cos(t), 0}, cplx{0, -std::sin(t)},
         cplx{0, -std::sin(t)}, cplx{std::cos(t), 0};
    return m;
}

double best_alignment_overlap(const Eigen::Matrix2cd& M, const Eigen::Matrix2cd& R,
                              int samples, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0, 2 * M_PI);
    auto su2 = [](double a, double b, double c) {
        Eigen::Matrix2cd u;
        cplx e1 = std::polar(1.0, b), e2 = std::polar(1.0, c);
        u << std::cos(a) * e1, std::sin(a) * e2,
             -std::sin(a) * std::conj(e2), std::cos(a) * std::conj(e1);
        return u;
    };
    auto score = [&](double a, double b, double c) {
        Eigen::Matrix2cd u = su2(a, b, c);
        return std::abs(((u * M * u.adjoint()).adjoint() * R).trace());
    };
    double best = 0, ba = 0, bb = 0, bc = 0;
    for (int i = 0; i < samples; ++i) {
        double a = uni(rng) / 4, b = uni(rng), c = uni(rng);
        double s = score(a, b, c);
        if (s > best) { best = s; ba = a; bb = b; bc = c; }
    }
    double step = 0.1;
    while (step > 1e-6) {
        bool improved = false;
        for (int d = 0; d < 6; ++d) {
            double a = ba, b = bb, c = bc;
            double delta = (d % 2 == 0) ? step : -step;
            if (d / 2 == 0) a += delta;
            else if (d / 2 == 1) b += delta;
            else c += delta;
            double s = score(a, b, c);
            if (s > best) { best = s; ba = a; bb = b; bc = c; improved = true; }
        }
        if (!improved) step /= 2;
    }
    return best;
}

StatisticsClass statistics_discriminator(const std::vector<BraidReport>& reports,
                                         const DiscriminatorOptions& opts) {
    const BraidReport* one = nullptr;
    const BraidReport* two = nullptr;
    for (const BraidReport& r : reports) {
        if (r.n_loops == 1) one = &r;
        if (r.n_loops == 2) two = &r;
    }
    if (!one || !two)
        throw DomainError("discriminator needs reports for braid counts 1 and 2");
    for (const BraidReport* r : {one, two})
        if (r->coherence < opts.min_coherence)
            throw NumericError("inconclusive: coherence " + std::to_string(r->coherence) +
                               " below threshold for " + std::to_string(r->n_loops) + " loop(s)");
    auto near = [&](double phase, double target) {
        double d = std::abs(std::abs(phase) - std::abs(target));
        return d <= opts.phase_tol;
    };
    if (near(one->phase, M_PI / 2)) return StatisticsClass::NonAbelianConsistent;
    if (near(one->phase, M_PI) && near(two->phase, 0)) return StatisticsClass::AbelianConsistent;
    if (near(one->phase, 0) && near(two->phase, 0)) return StatisticsClass::TrivialConsistent;
    throw NumericError("phase pattern matches no statistics class within tolerance");
}

const char* to_string(StatisticsClass c) {
    switch (c) {
        case StatisticsClass::NonAbelianConsistent: return "NonAbelian-consistent";
        case StatisticsClass::AbelianConsistent: return "Abelian-consistent";
        case StatisticsClass::TrivialConsistent: return "Trivial-consistent";
    }
    return "?";
}

const char* to_string(StepKind k) {
    switch (k) {
        case StepKind::PrepareAncillaPlus: return "PrepareAncillaPlus";
        case StepKind::ControlledPauli: return "ControlledPauli";
        case StepKind::UnconditionalPauli: return "UnconditionalPauli";
        case StepKind::BraidLoop: return "BraidLoop";
        case StepKind::MeasureAncilla: return "MeasureAncilla";
    }
    return "?";
}

StepKind step_kind_from_string(const std::string& s) {
    if (s == "PrepareAncillaPlus") return StepKind::PrepareAncillaPlus;
    if (s == "ControlledPauli") return StepKind::ControlledPauli;
    if (s == "UnconditionalPauli") return StepKind::UnconditionalPauli;
    if (s == "BraidLoop") return StepKind::BraidLoop;
    if (s == "MeasureAncilla") return StepKind::MeasureAncilla;
    throw DomainError("unknown protocol step kind: " + s);
}

}  // namespace kitaev
