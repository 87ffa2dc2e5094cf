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

#include <optional>
#include <vector>

#include <kitaev/lattice.hpp>
#include <kitaev/spin_ed.hpp>

namespace kitaev {

/// Z2 gauge field: u = +-1 per bond, with the orientation u_{jk} taken
/// with j on sublattice A (matching Bond endpoint order). The flux
/// through plaquette p is w_p = prod of u over the boundary bonds.
struct GaugeConfig {
    std::vector<int> u;  // one +-1 per bond, indexed by Bond::index

    int flux(const HoneycombLattice& lat, int p) const;
    std::vector<int> fluxes(const HoneycombLattice& lat) const;
};

/// Real antisymmetric coupling matrix: A_{jk} = 2 J_alpha u_{jk} on
/// bonds (rows on sublattice A), zero elsewhere.
using SkewMatrix = Eigen::MatrixXd;

enum class ParityNote { Physical, Flipped };

/// Quadratic spectrum of one gauge sector. The Hermitian matrix iA has
/// eigenvalues +-eps_m; the free-fermion (vacuum) ground energy is
/// -(1/2) sum_m eps_m.
///
/// Normalization: the quadratic form (i/4) sum_{jk} A_{jk} c_j c_k
/// decomposes per canonical 2x2 block [[0, eps],[-eps, 0]] into
/// eps (a^dag a - 1/2), so each positive eigenvalue eps_m of iA
/// contributes -eps_m/2 to the vacuum energy (checked against the
/// 2-spin dimer and the ED oracle in the tests).
struct SectorSpectrum {
    std::vector<double> epsilons;  // N/2 values, ascending, >= 0
    double ground_energy = 0;      // vacuum energy for the stated parity
    ParityNote parity_note = ParityNote::Physical;
};

/// Find a gauge with the requested plaquette fluxes. Construction:
/// start from all u = +1 and flip u along deterministic dual-lattice
/// strings between consecutive requested vortices (vortices paired in
/// ascending plaquette order; routing moves along rows first, then
/// columns, wrapping in whichever direction is shorter with ties broken
/// toward the positive direction). Optional homology twists flip a
/// flux-neutral loop of bonds around each torus cycle.
GaugeConfig gauge_from_flux(const HoneycombLattice& lat, const std::vector<int>& target_flux,
                            bool twist_x = false, bool twist_y = false);

/// A_{jk} = 2 J_alpha u_{jk} on bonds, 0 elsewhere. Field components
/// are ignored; a warning string is returned alongside if any h != 0.
SkewMatrix majorana_matrix(const HoneycombLattice& lat, const GaugeConfig& gauge,
                           const CouplingParams& p, std::optional<std::string>* warning = nullptr);

/// Pair the spectrum of iA into +-eps and form the vacuum energy.
SectorSpectrum sector_spectrum(const SkewMatrix& A);

/// Vacuum ground-state energy of the sector corrected for the physical
/// fermion-parity constraint: either -1/2 sum eps or that plus eps_min,
/// whichever parity the gauge sector admits. Torus only (open
/// fragments carry unpaired gauge Majoranas, so both parities are
/// physical and the vacuum energy is returned unchanged).
double physical_ground_energy(const HoneycombLattice& lat, const GaugeConfig& gauge,
                              const CouplingParams& p, SectorSpectrum* spectrum_out = nullptr);

/// Minimum of physical_ground_energy over all flux sectors and, on the
/// torus, all four homology classes. Exact match for the ED ground
/// energy on small lattices.
double min_physical_energy(const HoneycombLattice& lat, const CouplingParams& p);

/// E_ground(flux_pattern) - E_ground(vortex-free). Each sector energy
/// is the physical ground energy minimized over the torus homology
/// twists (gauge classes sharing the flux pattern).
double vortex_gap(const HoneycombLattice& lat, const CouplingParams& p,
                  const std::vector<int>& flux_pattern);

enum class Phase { A_gapped, B_gapless };

/// Triangle-inequality classifier: phase B iff |J_x| <= |J_y|+|J_z|,
/// |J_y| <= |J_z|+|J_x| and |J_z| <= |J_x|+|J_y| all hold. Boundary
/// (equality) counts as B: the inequalities are non-strict.
Phase classify_phase(const CouplingParams& p);

/// Smallest single-particle energy eps over the vortex-free sector on
/// an L x L torus, for each L in `sizes` (ascending). Reported as
/// (n_sites, gap) pairs.
std::vector<std::pair<int, double>> bulk_gap_estimate(const CouplingParams& p,
                                                      const std::vector<int>& sizes);

const char* to_string(Phase p);
const char* to_string(ParityNote n);

}  // namespace kitaev
