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

#include <kitaev/majorana.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

namespace kitaev {

namespace {
int wrap(int v, int n) { return ((v % n) + n) % n; }
}  // namespace

int GaugeConfig::flux(const HoneycombLattice& lat, int p) const {
    if (p < 0 || p >= lat.n_plaquettes())
        throw LookupError("unknown plaquette label: " + std::to_string(p));
    int w = 1;
    for (int b : lat.plaquettes[static_cast<size_t>(p)].bonds) w *= u[static_cast<size_t>(b)];
    return w;
}

std::vector<int> GaugeConfig::fluxes(const HoneycombLattice& lat) const {
    std::vector<int> out(static_cast<size_t>(lat.n_plaquettes()));
    for (int p = 0; p < lat.n_plaquettes(); ++p) out[static_cast<size_t>(p)] = flux(lat, p);
    return out;
}

namespace {

void validate_flux_pattern(const HoneycombLattice& lat, const std::vector<int>& flux) {
    if (flux.size() != static_cast<size_t>(lat.n_plaquettes()))
        throw ConstraintError("flux pattern length != number of plaquettes");
    int prod = 1;
    for (int w : flux) {
        if (w != 1 && w != -1) throw ConstraintError("flux entries must be +-1");
        prod *= w;
    }
    if (lat.boundary == Boundary::Torus && prod != 1)
        throw ConstraintError("torus flux patterns must satisfy prod_p w_p = +1");
}

void flip(GaugeConfig& g, std::optional<int> bond) {
    if (!bond) throw NumericError("internal: gauge string crossed a missing bond");
    g.u[static_cast<size_t>(*bond)] *= -1;
}

// Flip x(r,c1) for a run of rows: toggles fluxes at (r_from,c1), (r_to,c1).
void row_string(const HoneycombLattice& lat, GaugeConfig& g, int r_from, int r_to, int c) {
    for (int r = r_from; r != r_to; r = wrap(r + 1, lat.Ly))
        flip(g, lat.bond_at(r, c, LinkType::X));
}

// One step left at row r: flipping z(r,c) and x(r,c-1) toggles fluxes
// at (r,c) and (r,c-1).
void col_step_left(const HoneycombLattice& lat, GaugeConfig& g, int r, int c) {
    flip(g, lat.bond_at(r, c, LinkType::Z));
    flip(g, lat.bond_at(r, c - 1, LinkType::X));
}

void col_string(const HoneycombLattice& lat, GaugeConfig& g, int r, int c_from, int c_to) {
    for (int c = c_from; c != c_to; c = wrap(c - 1, lat.Lx)) col_step_left(lat, g, r, c);
}

// Connect two vortex plaquettes on the torus by a dual string: rows
// first, then columns; shorter wrap direction wins, ties resolved by
// the route whose first intermediate plaquette has the lower label.
void connect_vortices(const HoneycombLattice& lat, GaugeConfig& g, const Plaquette& a,
                      const Plaquette& b) {
    int r1 = a.row, c1 = a.col, r2 = b.row, c2 = b.col;
    if (r1 != r2) {
        int dr_pos = wrap(r2 - r1, lat.Ly);
        int dr_neg = lat.Ly - dr_pos;
        bool positive;
        if (dr_pos != dr_neg) {
            positive = dr_pos < dr_neg;
        } else {
            int lbl_pos = wrap(r1 + 1, lat.Ly) * lat.Lx + c1;
            int lbl_neg = wrap(r1 - 1, lat.Ly) * lat.Lx + c1;
            positive = lbl_pos < lbl_neg;
        }
        if (positive)
            row_string(lat, g, r1, r2, c1);
        else
            row_string(lat, g, r2, r1, c1);  // same toggled pair, walked backwards
    }
    if (c1 != c2) {
        int dc_left = wrap(c1 - c2, lat.Lx);
        int dc_right = lat.Lx - dc_left;
        bool left;
        if (dc_left != dc_right) {
            left = dc_left < dc_right;
        } else {
            int lbl_left = r2 * lat.Lx + wrap(c1 - 1, lat.Lx);
            int lbl_right = r2 * lat.Lx + wrap(c1 + 1, lat.Lx);
            left = lbl_left < lbl_right;
        }
        if (left)
            col_string(lat, g, r2, c1, c2);
        else
            col_string(lat, g, r2, c2, c1);
    }
}

}  // namespace

GaugeConfig gauge_from_flux(const HoneycombLattice& lat, const std::vector<int>& target_flux,
                            bool twist_x, bool twist_y) {
    validate_flux_pattern(lat, target_flux);
    GaugeConfig g;
    g.u.assign(static_cast<size_t>(lat.n_bonds()), 1);

    if (lat.boundary == Boundary::Torus) {
        std::vector<int> vortices;
        for (int p = 0; p < lat.n_plaquettes(); ++p)
            if (target_flux[static_cast<size_t>(p)] == -1) vortices.push_back(p);
        for (size_t i = 0; i + 1 < vortices.size(); i += 2)
            connect_vortices(lat, g, lat.plaquettes[static_cast<size_t>(vortices[i])],
                             lat.plaquettes[static_cast<size_t>(vortices[i + 1])]);
        if (twist_x)
            for (int r = 0; r < lat.Ly; ++r) flip(g, lat.bond_at(r, 0, LinkType::X));
        if (twist_y)
            for (int c = 0; c < lat.Lx; ++c) {
                flip(g, lat.bond_at(0, c, LinkType::Z));
                flip(g, lat.bond_at(0, c, LinkType::X));
            }
    } else {
        // Open boundary: fix plaquettes in label order; flipping z(r,c)
        // only disturbs the later plaquette (r+1,c-1), if it exists.
        for (const Plaquette& p : lat.plaquettes)
            if (g.flux(lat, p.label) != target_flux[static_cast<size_t>(p.label)])
                flip(g, lat.bond_at(p.row, p.col, LinkType::Z));
    }

    if (g.fluxes(lat) != target_flux)
        throw NumericError("internal: gauge construction missed the target flux pattern");
    return g;
}

SkewMatrix majorana_matrix(const HoneycombLattice& lat, const GaugeConfig& gauge,
                           const CouplingParams& p, std::optional<std::string>* warning) {
    p.validate();
    if (gauge.u.size() != static_cast<size_t>(lat.n_bonds()))
        throw ConstraintError("gauge config does not match lattice bond count");
    if (warning) *warning = std::nullopt;
    if (!p.zero_field() && warning)
        *warning = "field components are ignored by the quadratic Majorana form";
    const double J[3] = {p.Jx, p.Jy, p.Jz};
    int n = lat.n_sites();
    SkewMatrix A = SkewMatrix::Zero(n, n);
    for (const Bond& b : lat.bonds) {
        double v = 2.0 * J[static_cast<int>(b.type)] * gauge.u[static_cast<size_t>(b.index)];
        A(b.a.index, b.b.index) = v;
        A(b.b.index, b.a.index) = -v;
    }
    return A;
}

SectorSpectrum sector_spectrum(const SkewMatrix& A) {
    const long n = A.rows();
    if (n % 2 != 0) throw NumericError("Majorana matrix dimension must be even");
    Eigen::MatrixXcd M = cplx{0, 1} * A.cast<cplx>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
    if (es.info() != Eigen::Success) throw NumericError("iA eigensolver failed");
    const auto& lam = es.eigenvalues();
    double scale = std::max(std::abs(lam(0)), std::abs(lam(n - 1)));
    for (long k = 0; k < n / 2; ++k)
        if (std::abs(lam(k) + lam(n - 1 - k)) > 1e-10 * std::max(scale, 1.0))
            throw NumericError("spectrum of iA is not +-symmetric within tolerance");
    SectorSpectrum out;
    out.epsilons.reserve(static_cast<size_t>(n / 2));
    for (long k = n / 2; k < n; ++k) out.epsilons.push_back(std::max(lam(k), 0.0));
    std::sort(out.epsilons.begin(), out.epsilons.end());
    out.ground_energy = -0.5 * std::accumulate(out.epsilons.begin(), out.epsilons.end(), 0.0);
    out.parity_note = ParityNote::Physical;
    return out;
}

namespace {

// Sign of the permutation taking the per-site Majorana word
// (bx_0 by_0 bz_0 c_0 bx_1 ...) to (bond b-pairs in bond order)(c_0..c_{N-1}).
int reorder_sign(const HoneycombLattice& lat) {
    int n = lat.n_sites();
    std::vector<int> target;
    target.reserve(static_cast<size_t>(4 * n));
    for (const Bond& b : lat.bonds) {
        int ax = static_cast<int>(b.type);
        target.push_back(4 * b.a.index + ax);
        target.push_back(4 * b.b.index + ax);
    }
    for (int j = 0; j < n; ++j) target.push_back(4 * j + 3);
    // Parity by cycle decomposition of target[i] (a permutation of 0..4n-1).
    std::vector<int> pos(static_cast<size_t>(4 * n), -1);
    for (size_t i = 0; i < target.size(); ++i) pos[static_cast<size_t>(target[i])] = static_cast<int>(i);
    std::vector<char> seen(target.size(), 0);
    int transpositions = 0;
    for (size_t i = 0; i < target.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = static_cast<size_t>(pos[j]);
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0 ? 1 : -1;
}

// Required c-fermion parity of physical states in the given gauge
// sector, relative to the canonical pairing (c_0 c_1)(c_2 c_3)...
int required_parity(const HoneycombLattice& lat, const GaugeConfig& gauge) {
    int s = reorder_sign(lat);
    if ((lat.Lx * lat.Ly) % 2 != 0) s = -s;
    for (int u : gauge.u) s *= u;
    return s;
}

// Parity of the free-fermion vacuum relative to the canonical pairing:
// the sign of Pf(A). Writing A = U T U^T with T in the +eps canonical
// form gives Pf(A) = det(U) * prod_m eps_m, so sgn(Pf(A)) is exactly
// the determinant sign of the mode transform. Computed by Parlett-Reid
// elimination with pivoting (row/column swaps flip the sign).
int vacuum_parity(const SkewMatrix& A0, double zero_tol, bool* has_zero_mode) {
    Eigen::MatrixXd A = A0;
    const long n = A.rows();
    int sign = 1;
    *has_zero_mode = false;
    for (long k = 0; k + 1 < n; k += 2) {
        long piv = k + 1;
        for (long j = k + 2; j < n; ++j)
            if (std::abs(A(j, k)) > std::abs(A(piv, k))) piv = j;
        if (std::abs(A(piv, k)) <= zero_tol) {
            *has_zero_mode = true;  // Pf(A) = 0: both parities at the vacuum energy
            return 0;
        }
        if (piv != k + 1) {
            A.row(piv).swap(A.row(k + 1));
            A.col(piv).swap(A.col(k + 1));
            sign = -sign;
        }
        if (A(k, k + 1) < 0) sign = -sign;
        for (long j = k + 2; j < n; ++j) {
            double f = A(k, j) / A(k, k + 1);
            A.row(j) -= f * A.row(k + 1);
            A.col(j) -= f * A.col(k + 1);
        }
    }
    return sign;
}

}  // namespace

double physical_ground_energy(const HoneycombLattice& lat, const GaugeConfig& gauge,
                              const CouplingParams& p, SectorSpectrum* spectrum_out) {
    SkewMatrix A = majorana_matrix(lat, gauge, p);
    SectorSpectrum spec = sector_spectrum(A);
    double E = spec.ground_energy;
    if (lat.boundary == Boundary::Torus) {
        double scale = spec.epsilons.empty() ? 1.0 : std::max(spec.epsilons.back(), 1.0);
        bool zero_mode = false;
        int vac = vacuum_parity(A, 1e-12 * scale, &zero_mode);
        // A spectrum with an (effectively) zero mode hosts both parities at
        // the vacuum energy; no correction then.
        double eps_min = spec.epsilons.empty() ? 0.0 : spec.epsilons.front();
        if (!zero_mode && eps_min > 1e-12 * scale && vac != required_parity(lat, gauge)) {
            E += eps_min;
            spec.parity_note = ParityNote::Flipped;
        }
    }
    if (spectrum_out) {
        spectrum_out->epsilons = spec.epsilons;
        spectrum_out->ground_energy = E;
        spectrum_out->parity_note = spec.parity_note;
    }
    return E;
}

double min_physical_energy(const HoneycombLattice& lat, const CouplingParams& p) {
    int np = lat.n_plaquettes();
    if (np > 16) throw ResourceError("flux-sector enumeration limited to <= 16 plaquettes");
    const bool torus = lat.boundary == Boundary::Torus;
    int free_plaquettes = torus ? np - 1 : np;
    double best = std::numeric_limits<double>::infinity();
    for (uint64_t bits = 0; bits < (uint64_t{1} << free_plaquettes); ++bits) {
        std::vector<int> flux(static_cast<size_t>(np), 1);
        int prod = 1;
        for (int q = 0; q < free_plaquettes; ++q)
            if (bits >> q & 1) {
                flux[static_cast<size_t>(q)] = -1;
                prod *= -1;
            }
        if (torus) flux[static_cast<size_t>(np - 1)] = prod;  // enforce the product constraint
        int n_twists = torus ? 4 : 1;
        for (int t = 0; t < n_twists; ++t) {
            GaugeConfig g = gauge_from_flux(lat, flux, t & 1, t >> 1 & 1);
            best = std::min(best, physical_ground_energy(lat, g, p));
        }
    }
    return best;
}

namespace {

// Physical ground energy of a flux sector: gauge classes within one
// flux pattern differ by their torus homology twists, so the sector
// energy is the minimum over the four twist classes.
double sector_energy(const HoneycombLattice& lat, const CouplingParams& p,
                     const std::vector<int>& flux) {
    int n_twists = lat.boundary == Boundary::Torus ? 4 : 1;
    double best = std::numeric_limits<double>::infinity();
    for (int t = 0; t < n_twists; ++t) {
        GaugeConfig g = gauge_from_flux(lat, flux, t & 1, t >> 1 & 1);
        best = std::min(best, physical_ground_energy(lat, g, p));
    }
    return best;
}

}  // namespace

double vortex_gap(const HoneycombLattice& lat, const CouplingParams& p,
                  const std::vector<int>& flux_pattern) {
    validate_flux_pattern(lat, flux_pattern);
    std::vector<int> free_flux(static_cast<size_t>(lat.n_plaquettes()), 1);
    return sector_energy(lat, p, flux_pattern) - sector_energy(lat, p, free_flux);
}

Phase classify_phase(const CouplingParams& p) {
    double x = std::abs(p.Jx), y = std::abs(p.Jy), z = std::abs(p.Jz);
    bool b = x <= y + z && y <= z + x && z <= x + y;
    return b ? Phase::B_gapless : Phase::A_gapped;
}

std::vector<std::pair<int, double>> bulk_gap_estimate(const CouplingParams& p,
                                                      const std::vector<int>& sizes) {
    std::vector<std::pair<int, double>> out;
    for (int L : sizes) {
        HoneycombLattice lat = build_lattice(L, L, Boundary::Torus);
        std::vector<int> flux(static_cast<size_t>(lat.n_plaquettes()), 1);
        GaugeConfig g = gauge_from_flux(lat, flux);
        SectorSpectrum spec = sector_spectrum(majorana_matrix(lat, g, p));
        out.emplace_back(lat.n_sites(), spec.epsilons.front());
    }
    return out;
}

const char* to_string(Phase p) { return p == Phase::A_gapped ? "A_gapped" : "B_gapless"; }
const char* to_string(ParityNote n) {
    return n == ParityNote::Physical ? "physical" : "flipped";
}

}  // namespace kitaev
