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

#pragma once

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <kitaev/lattice.hpp>
#include <kitaev/pauli.hpp>
#include <kitaev/spin_ed.hpp>

namespace kitaev {

enum class StepKind {
    PrepareAncillaPlus,
    ControlledPauli,
    UnconditionalPauli,
    BraidLoop,
    MeasureAncilla,
};

struct ProtocolStep {
    StepKind kind = StepKind::PrepareAncillaPlus;
    int site = -1;          // ControlledPauli / UnconditionalPauli
    Axis axis = Axis::Z;    // ControlledPauli / UnconditionalPauli
    int plaquette = -1;     // BraidLoop: hexagon hosting the loop
    double basis_angle = 0; // MeasureAncilla (recorded only; readout is
                            // direct density-matrix extraction)
};

/// Ordered protocol steps. Exactly one PrepareAncillaPlus, as the first
/// step; MeasureAncilla, if present, is last.
struct ProtocolScript {
    std::vector<ProtocolStep> steps;
    void validate() const;
};

using BraidMatrix = Eigen::Matrix2cd;

/// Ancilla interferometry result.
struct BraidReport {
    Eigen::Matrix2cd rho_ancilla;     // Hermitian, trace 1
    double coherence = 0;             // |rho01|
    double phase = 0;                 // arg(rho01) in (-pi, pi]
    std::array<double, 2> leakage{};  // 1 - |<gs|psi_branch>|^2 per branch
    int n_loops = 0;                  // braid loops executed
    double norm_drift = 0;            // |1 - norm| accumulated over the run
    ProtocolScript script_echo;
};

/// |+>_a tensor |psi>, ancilla as the highest-order qubit.
StateVector attach_ancilla(const StateVector& psi);

/// U^axis_site = |0><0| x I + |1><1| x sigma^axis_site.
StateVector controlled_pauli(const StateVector& psi, int site, Axis axis);

/// sigma^axis_site on the full register (both branches).
StateVector unconditional_pauli(const StateVector& psi, int site, Axis axis);

/// The loop string s23 = sigma5^y sigma4^z sigma3^x sigma2^y sigma1^z sigma6^x
/// over the hexagon's 1..6 sites.
PauliString loop_string(const std::array<Site, 6>& hexagon);

/// One braid loop: the six controlled Paulis applied in the order
/// U6^x, U1^z, U2^y, U3^x, U4^z, U5^y. Validates that the sites form a
/// hexagon path (distinct, cyclically nearest neighbors).
StateVector braid_loop(const HoneycombLattice& lat, const StateVector& psi,
                       const std::array<Site, 6>& hexagon);

/// Standard ancilla-interferometry script: prepare the ancilla, create
/// the first vortex pair by an unconditional sigma^z at creation_site,
/// conditionally create the second pair by U^z at the hexagon's site 6,
/// run n_loops braid loops, then undo both creations in reverse.
ProtocolScript standard_script(const HoneycombLattice& lat, int creation_site,
                               int braid_plaquette, int n_loops);

struct ProtocolOptions {
    SolverOptions solver;
    /// Optional precomputed vortex-free ground state (skips the ED solve).
    const StateVector* ground_state = nullptr;
};

/// Execute a script starting from the vortex-free ground state and
/// extract the ancilla density matrix, coherence, phase and leakage.
BraidReport run_protocol(const HoneycombLattice& lat, const CouplingParams& params,
                         const ProtocolScript& script, const ProtocolOptions& opts = {});

/// M_ab = <basis_a| loop |basis_b> over an orthonormal ground basis,
/// with the unitarity defect ||M^dag M - I||_F.
struct ProjectedBraid {
    Eigen::MatrixXcd matrix;
    double unitarity_defect = 0;
};
ProjectedBraid projected_braid(const std::vector<StateVector>& ground_basis,
                               const PauliString& loop);

/// R2^n exactly: R2 = (1/sqrt2) [[1, -i], [-i, 1]]; negative n is the
/// clockwise exchange. Closed form cos(n pi/4) I - i sin(n pi/4) sigma^x.
BraidMatrix reference_braid_matrix(int n);

/// Best |tr((U M U^dag)^dag R)| over single-qubit basis changes U
/// (random search with local refinement; diagnostic only). Maximum is 2
/// for a perfect match up to the optimized basis.
double best_alignment_overlap(const Eigen::Matrix2cd& M, const Eigen::Matrix2cd& R,
                              int samples = 20000, uint64_t seed = 7);

enum class StatisticsClass { NonAbelianConsistent, AbelianConsistent, TrivialConsistent };

struct DiscriminatorOptions {
    double phase_tol = 0.2;      // radians
    double min_coherence = 0.1;
};

/// Classify reports for braid counts {1, 2}:
/// |phase(1)| ~ pi/2 -> NonAbelian; phase(1) ~ pi and phase(2) ~ 0 ->
/// Abelian; both ~ 0 -> Trivial.
StatisticsClass statistics_discriminator(const std::vector<BraidReport>& reports,
                                         const DiscriminatorOptions& opts = {});

const char* to_string(StatisticsClass c);
const char* to_string(StepKind k);
StepKind step_kind_from_string(const std::string& s);

}  // namespace kitaev
