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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <kitaev/lattice.hpp>
#include <kitaev/pauli.hpp>

namespace kitaev {

/// Bond couplings and Zeeman field components, in common energy units.
struct CouplingParams {
    double Jx = 1, Jy = 1, Jz = 1;
    double hx = 0, hy = 0, hz = 0;

    bool zero_field() const { return hx == 0 && hy == 0 && hz == 0; }
    double j_scale() const;  // |Jx|+|Jy|+|Jz|
    void validate() const;   // finite, at least one J nonzero
};

/// Hermitian operator stored as a real-weighted sum of Hermitian Pauli
/// strings on n_spins qubits. The term list is deduplicated (canonical
/// strings merged, zero coefficients dropped).
class SparseOperator {
  public:
    explicit SparseOperator(int n_spins) : n_spins_(n_spins) {}

    int n_spins() const { return n_spins_; }
    size_t dim() const { return size_t{1} << n_spins_; }
    const std::vector<std::pair<double, PauliString>>& terms() const { return terms_; }
    size_t n_terms() const { return terms_.size(); }

    /// Add coeff * P. P must be Hermitian (real phase); the sign of a
    /// -1 phase is folded into the coefficient.
    void add_term(double coeff, PauliString P);

    /// 1-norm of coefficients; cheap upper bound on the spectral radius,
    /// used as the residual/energy scale.
    double coeff_norm() const;

    /// out = H * psi on raw arrays of length dim().
    void apply_to(const cplx* psi, cplx* out) const;
    StateVector apply_to(const StateVector& psi) const;

    /// Conjugate every term by sigma^z_site (term-wise sign flip).
    SparseOperator conjugated_by_z(int site) const;

    /// H + other.
    SparseOperator plus(const SparseOperator& other) const;

    /// True iff both operators have identical canonical term lists
    /// within coefficient tolerance.
    bool same_terms(const SparseOperator& other, double tol = 0) const;

  private:
    int n_spins_;
    std::vector<std::pair<double, PauliString>> terms_;
};

/// Low-lying eigenpairs. Eigenvalues ascending; residuals are
/// ||H v - lambda v|| per pair.
struct EigenResult {
    std::vector<double> eigenvalues;
    std::vector<StateVector> eigenvectors;
    std::vector<double> residuals;
};

/// Solver knobs. Defaults satisfy the module contracts on <= 20 spins.
struct SolverOptions {
    uint64_t seed = 1;
    double tol = 1e-10;          // residual target, relative to coeff_norm
    int max_krylov = 80;         // Krylov dimension per restart cycle
    int max_restarts = 200;
    int dense_cutoff = 12;       // use a dense solver for n_spins <= this
};

/// Exact-diagonalization ceiling (spins). State vectors stay <= 2^21
/// once the protocol ancilla is attached.
inline constexpr int kEdCeiling = 20;

/// H = -sum_nu J_nu sum_{nu-links} sigma^nu sigma^nu
///     - sum_j (hx sigma^x_j + hy sigma^y_j + hz sigma^z_j).
/// Zero-coefficient terms are dropped.
SparseOperator build_hamiltonian(const HoneycombLattice& lat, const CouplingParams& p);

/// Lowest k eigenpairs: dense solve for small registers, otherwise
/// restarted Lanczos with full reorthogonalization and deflation.
/// Deterministic for a fixed seed.
EigenResult ground_states(const SparseOperator& H, int k, const SolverOptions& opts = {});

/// <W_p> for every plaquette, plus flags for plaquettes where
/// |<W_p>| < 0.99 (state is not a W_p eigenstate there).
struct WpProfile {
    std::vector<double> values;
    std::vector<int> mixed;  // plaquette labels with |<W_p>| < 0.99
};
WpProfile wp_profile(const StateVector& psi, const HoneycombLattice& lat);

/// sigma^z_i H sigma^z_i, conjugating every term. At h = 0 this also
/// verifies the two-vortex identity
///   sigma^z_i H sigma^z_i = H + 2 Jx sigma^x_i sigma^x_j + 2 Jy sigma^y_i sigma^y_k
/// (j, k the x- and y-neighbors of i) term by term.
struct ConjugationResult {
    SparseOperator op;
    bool identity_checked = false;   // false when a transverse field forced a skip
    std::optional<std::string> warning;
};
ConjugationResult two_vortex_hamiltonian(const SparseOperator& H, const HoneycombLattice& lat,
                                         const CouplingParams& p, int site_i);

/// Lowest k states in the flux sector `target_flux` (one +-1 per
/// plaquette), realized by a penalty term c * sum_p (1 - w_p W_p) with
/// c = penalty_factor * j_scale * n_plaquettes by default. Requires
/// h = 0 and, on a torus, prod_p w_p = +1.
struct SectorOptions {
    SolverOptions solver;
    double penalty = 0;           // 0 -> use the default formula
    double flux_match_tol = 1e-6;
};
EigenResult sector_ground(const SparseOperator& H, const HoneycombLattice& lat,
                          const CouplingParams& p, const std::vector<int>& target_flux, int k,
                          const SectorOptions& opts = {});

/// Default penalty strength: 10 * (|Jx|+|Jy|+|Jz|) * n_plaquettes.
double default_sector_penalty(const CouplingParams& p, const HoneycombLattice& lat);

/// Perturbative parameter map from tunneling amplitudes and on-site
/// repulsion: J_nu = t_nu^2/(2U), h_nu = 4 t_nu^2/U (so h_nu/J_nu = 8).
struct EffectiveCouplings {
    CouplingParams params;
    bool perturbative = true;  // false when any t/U > 0.1
};
EffectiveCouplings effective_couplings(double tx, double ty, double tz, double U);

}  // namespace kitaev
