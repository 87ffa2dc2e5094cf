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

#include <kitaev/spin_ed.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace kitaev {

double CouplingParams::j_scale() const { return std::abs(Jx) + std::abs(Jy) + std::abs(Jz); }

void CouplingParams::validate() const {
    for (double v : {Jx, Jy, Jz, hx, hy, hz})
        if (!std::isfinite(v)) throw DomainError("coupling parameters must be finite");
    if (Jx == 0 && Jy == 0 && Jz == 0)
        throw DomainError("at least one bond coupling J must be nonzero");
}

void SparseOperator::add_term(double coeff, PauliString P) {
    if (!P.hermitian())
        throw DomainError("SparseOperator terms must be Hermitian strings; got " + P.str());
    if (P.phase_quarter() == 2) {
        coeff = -coeff;
        P = multiply(PauliString::identity(2), P);
    }
    if (coeff == 0) return;
    if (P.support_max() >= n_spins_)
        throw RegisterError("term touches site " + std::to_string(P.support_max()) +
                            " outside a " + std::to_string(n_spins_) + "-spin register");
    for (auto& [c, q] : terms_)
        if (q == P) {
            c += coeff;
            if (c == 0) {
                terms_.erase(std::find_if(terms_.begin(), terms_.end(),
                                          [&](const auto& t) { return t.second == P; }));
            }
            return;
        }
    terms_.emplace_back(coeff, std::move(P));
}

double SparseOperator::coeff_norm() const {
    double s = 0;
    for (const auto& [c, q] : terms_) s += std::abs(c);
    return s;
}

void SparseOperator::apply_to(const cplx* psi, cplx* out) const {
    std::fill(out, out + dim(), cplx{0, 0});
    for (const auto& [c, q] : terms_) apply_accumulate(q, psi, out, dim(), cplx{c, 0});
}

StateVector SparseOperator::apply_to(const StateVector& psi) const {
    if (psi.dim() != dim()) throw RegisterError("operator/state dimension mismatch");
    std::vector<cplx> out(dim());
    apply_to(psi.amplitudes().data(), out.data());
    return StateVector::from_amplitudes(psi.n_spins(), psi.n_ancilla(), std::move(out),
                                        /*normalize=*/false);
}

SparseOperator SparseOperator::conjugated_by_z(int site) const {
    SparseOperator r(n_spins_);
    for (const auto& [c, q] : terms_) {
        bool anti = false;
        for (const auto& [s, a] : q.letters())
            if (s == site && a != Axis::Z) anti = true;
        r.add_term(anti ? -c : c, q);
    }
    return r;
}

SparseOperator SparseOperator::plus(const SparseOperator& other) const {
    SparseOperator r = *this;
    for (const auto& [c, q] : other.terms_) r.add_term(c, q);
    return r;
}

bool SparseOperator::same_terms(const SparseOperator& other, double tol) const {
    auto covered = [tol](const SparseOperator& a, const SparseOperator& b) {
        for (const auto& [c, q] : a.terms_) {
            double found = 0;
            for (const auto& [c2, q2] : b.terms_)
                if (q2 == q) found = c2;
            if (std::abs(c - found) > tol) return false;
        }
        return true;
    };
    return covered(*this, other) && covered(other, *this);
}

SparseOperator build_hamiltonian(const HoneycombLattice& lat, const CouplingParams& p) {
    p.validate();
    if (lat.n_sites() > kEdCeiling)
        throw ResourceError("lattice has " + std::to_string(lat.n_sites()) +
                            " spins, above the ED ceiling of " + std::to_string(kEdCeiling) +
                            "; use the Majorana gauge-sector solver for large lattices");
    SparseOperator H(lat.n_sites());
    const double J[3] = {p.Jx, p.Jy, p.Jz};
    const Axis ax[3] = {Axis::X, Axis::Y, Axis::Z};
    for (const Bond& b : lat.bonds) {
        int t = static_cast<int>(b.type);
        if (J[t] == 0) continue;
        PauliString s = PauliString::single(b.a.index, ax[t]);
        s.mul_right(b.b.index, ax[t]);
        H.add_term(-J[t], std::move(s));
    }
    const double h[3] = {p.hx, p.hy, p.hz};
    for (const Site& s : lat.sites)
        for (int t = 0; t < 3; ++t)
            if (h[t] != 0) H.add_term(-h[t], PauliString::single(s.index, ax[t]));
    return H;
}

WpProfile wp_profile(const StateVector& psi, const HoneycombLattice& lat) {
    if (psi.dim() != (size_t{1} << lat.n_sites()))
        throw RegisterError("state register does not match lattice spin count");
    WpProfile out;
    out.values.reserve(static_cast<size_t>(lat.n_plaquettes()));
    for (int p = 0; p < lat.n_plaquettes(); ++p) {
        cplx e = expectation(plaquette_operator(lat, p), psi);
        out.values.push_back(e.real());
        if (std::abs(e.real()) < 0.99) out.mixed.push_back(p);
    }
    return out;
}

ConjugationResult two_vortex_hamiltonian(const SparseOperator& H, const HoneycombLattice& lat,
                                         const CouplingParams& p, int site_i) {
    if (site_i < 0 || site_i >= lat.n_sites())
        throw LookupError("site out of range: " + std::to_string(site_i));
    ConjugationResult res{H.conjugated_by_z(site_i)};
    if (p.hx != 0 || p.hy != 0) {
        res.warning = "transverse field present: conjugation also flips h_x, h_y at site " +
                      std::to_string(site_i) + "; two-vortex identity check skipped";
        return res;
    }
    auto j = lat.neighbor(site_i, LinkType::X);
    auto k = lat.neighbor(site_i, LinkType::Y);
    if (!j || !k) {
        res.warning = "site lacks x- or y-neighbor (open boundary); identity check skipped";
        return res;
    }
    SparseOperator expected = H;
    if (p.Jx != 0) {
        PauliString xx = PauliString::single(site_i, Axis::X);
        xx.mul_right(*j, Axis::X);
        expected.add_term(2 * p.Jx, std::move(xx));
    }
    if (p.Jy != 0) {
        PauliString yy = PauliString::single(site_i, Axis::Y);
        yy.mul_right(*k, Axis::Y);
        expected.add_term(2 * p.Jy, std::move(yy));
    }
    if (!res.op.same_terms(expected))
        throw NumericError("two-vortex conjugation identity failed at site " +
                           std::to_string(site_i));
    res.identity_checked = true;
    return res;
}

double default_sector_penalty(const CouplingParams& p, const HoneycombLattice& lat) {
    return 10.0 * p.j_scale() * lat.n_plaquettes();
}

EigenResult sector_ground(const SparseOperator& H, const HoneycombLattice& lat,
                          const CouplingParams& p, const std::vector<int>& target_flux, int k,
                          const SectorOptions& opts) {
    if (!p.zero_field())
        throw UnsupportedSectorError("W_p is conserved only at h = 0; sector tools refuse");
    if (target_flux.size() != static_cast<size_t>(lat.n_plaquettes()))
        throw ConstraintError("flux pattern length != number of plaquettes");
    int prod = 1;
    for (int w : target_flux) {
        if (w != 1 && w != -1) throw ConstraintError("flux entries must be +-1");
        prod *= w;
    }
    if (lat.boundary == Boundary::Torus && prod != 1)
        throw ConstraintError("torus flux patterns must satisfy prod_p w_p = +1");

    double c = opts.penalty > 0 ? opts.penalty : default_sector_penalty(p, lat);
    SparseOperator Hp = H;
    for (int q = 0; q < lat.n_plaquettes(); ++q) {
        Hp.add_term(c, PauliString::identity());
        Hp.add_term(-c * target_flux[static_cast<size_t>(q)], plaquette_operator(lat, q));
    }

    EigenResult raw = ground_states(Hp, k, opts.solver);

    // Report eigenvalues of H itself and verify the sector.
    EigenResult out;
    for (int m = 0; m < k; ++m) {
        const StateVector& v = raw.eigenvectors[static_cast<size_t>(m)];
        WpProfile prof = wp_profile(v, lat);
        for (int q = 0; q < lat.n_plaquettes(); ++q)
            if (std::abs(prof.values[static_cast<size_t>(q)] -
                         target_flux[static_cast<size_t>(q)]) > opts.flux_match_tol)
                throw NumericError(
                    "sector_ground: state " + std::to_string(m) + " misses target flux at "
                    "plaquette " + std::to_string(q) + "; increase the penalty strength");
        std::vector<cplx> hv(H.dim());
        H.apply_to(v.amplitudes().data(), hv.data());
        cplx lam{0, 0};
        for (size_t i = 0; i < hv.size(); ++i) lam += std::conj(v.amplitudes()[i]) * hv[i];
        double lambda = lam.real();
        double res = 0;
        for (size_t i = 0; i < hv.size(); ++i) res += std::norm(hv[i] - lambda * v.amplitudes()[i]);
        out.eigenvalues.push_back(lambda);
        out.eigenvectors.push_back(v);
        out.residuals.push_back(std::sqrt(res));
    }
    return out;
}

EffectiveCouplings effective_couplings(double tx, double ty, double tz, double U) {
    if (U <= 0) throw DomainError("on-site repulsion U must be positive");
    for (double t : {tx, ty, tz})
        if (t < 0 || !std::isfinite(t)) throw DomainError("tunneling amplitudes must be >= 0");
    EffectiveCouplings out;
    out.params.Jx = tx * tx / (2 * U);
    out.params.Jy = ty * ty / (2 * U);
    out.params.Jz = tz * tz / (2 * U);
    out.params.hx = 4 * tx * tx / U;
    out.params.hy = 4 * ty * ty / U;
    out.params.hz = 4 * tz * tz / U;
    out.perturbative = tx / U <= 0.1 && ty / U <= 0.1 && tz / U <= 0.1;
    return out;
}

}  // namespace kitaev
