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

#include <kitaev/pauli.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace kitaev {

namespace {

// sigma_a * sigma_b = phase * sigma_c; phase as quarter-turn exponent.
// Axes: X=0, Y=1, Z=2; result axis 3 means identity.
struct LetterProduct {
    int axis;   // 0..2, or 3 for identity
    int phase;  // i^phase
};

LetterProduct letter_product(Axis a, Axis b) {
    if (a == b) return {3, 0};
    int ia = static_cast<int>(a), ib = static_cast<int>(b);
    int ic = 3 - ia - ib;
    // Cyclic (X,Y,Z) -> +i, anticyclic -> -i.
    bool cyclic = (ib - ia + 3) % 3 == 1;
    return {ic, cyclic ? 1 : 3};
}

}  // namespace

PauliString PauliString::single(int site, Axis axis) {
    PauliString p;
    p.letters_.emplace_back(site, axis);
    return p;
}

PauliString PauliString::identity(int phase_quarter) {
    PauliString p;
    p.phase_quarter_ = ((phase_quarter % 4) + 4) % 4;
    return p;
}

cplx PauliString::phase() const {
    static const cplx table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[phase_quarter_];
}

void PauliString::mul_right(int site, Axis axis) {
    auto it = std::lower_bound(letters_.begin(), letters_.end(), site,
                               [](const auto& e, int s) { return e.first < s; });
    if (it == letters_.end() || it->first != site) {
        letters_.insert(it, {site, axis});
        return;
    }
    // Letters on other sites commute past, no phase cost.
    LetterProduct lp = letter_product(it->second, axis);
    phase_quarter_ = (phase_quarter_ + lp.phase) % 4;
    if (lp.axis == 3)
        letters_.erase(it);
    else
        it->second = static_cast<Axis>(lp.axis);
}

PauliString PauliString::inverse() const {
    PauliString p = *this;
    p.phase_quarter_ = (4 - phase_quarter_) % 4;
    return p;
}

PauliString multiply(const PauliString& P, const PauliString& Q) {
    PauliString r;
    r.phase_quarter_ = (P.phase_quarter_ + Q.phase_quarter_) % 4;
    r.letters_.reserve(P.letters_.size() + Q.letters_.size());
    auto pi = P.letters_.begin(), qi = Q.letters_.begin();
    while (pi != P.letters_.end() || qi != Q.letters_.end()) {
        if (qi == Q.letters_.end() || (pi != P.letters_.end() && pi->first < qi->first)) {
            r.letters_.push_back(*pi++);
        } else if (pi == P.letters_.end() || qi->first < pi->first) {
            r.letters_.push_back(*qi++);
        } else {
            LetterProduct lp = letter_product(pi->second, qi->second);
            r.phase_quarter_ = (r.phase_quarter_ + lp.phase) % 4;
            if (lp.axis != 3) r.letters_.emplace_back(pi->first, static_cast<Axis>(lp.axis));
            ++pi;
            ++qi;
        }
    }
    return r;
}

bool commutes(const PauliString& P, const PauliString& Q) {
    int anti = 0;
    auto pi = P.letters().begin(), qi = Q.letters().begin();
    while (pi != P.letters().end() && qi != Q.letters().end()) {
        if (pi->first < qi->first)
            ++pi;
        else if (qi->first < pi->first)
            ++qi;
        else {
            if (pi->second != qi->second) ++anti;
            ++pi;
            ++qi;
        }
    }
    return anti % 2 == 0;
}

std::string PauliString::str() const {
    static const char* phases[4] = {"+1", "+i", "-1", "-i"};
    std::string out = phases[phase_quarter_];
    if (letters_.empty()) {
        out += " I";
        return out;
    }
    for (const auto& [site, axis] : letters_) {
        out += ' ';
        out += to_string(axis);
        out += std::to_string(site);
    }
    return out;
}

PauliString PauliString::parse(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    PauliString p;
    bool first = true;
    while (in >> tok) {
        if (first) {
            first = false;
            if (tok == "+1") { p.phase_quarter_ = 0; continue; }
            if (tok == "+i") { p.phase_quarter_ = 1; continue; }
            if (tok == "-1") { p.phase_quarter_ = 2; continue; }
            if (tok == "-i") { p.phase_quarter_ = 3; continue; }
        }
        if (tok == "I") continue;
        if (tok.size() < 2) throw DomainError("bad Pauli token: " + tok);
        Axis a = axis_from_char(tok[0]);
        int site = std::stoi(tok.substr(1));
        p.mul_right(site, a);
    }
    return p;
}

StateVector StateVector::basis(int n_spins, uint64_t index) {
    StateVector s;
    s.n_spins_ = n_spins;
    s.amplitudes_.assign(size_t{1} << n_spins, cplx{0, 0});
    s.amplitudes_.at(index) = cplx{1, 0};
    return s;
}

StateVector StateVector::from_amplitudes(int n_spins, int n_ancilla, std::vector<cplx> amps,
                                         bool normalize) {
    StateVector s;
    s.n_spins_ = n_spins;
    s.n_ancilla_ = n_ancilla;
    if (amps.size() != (size_t{1} << (n_spins + n_ancilla)))
        throw RegisterError("amplitude array length does not match register size");
    s.amplitudes_ = std::move(amps);
    if (normalize) s.normalize();
    return s;
}

double StateVector::norm() const {
    double s = 0;
    for (const cplx& a : amplitudes_) s += std::norm(a);
    return std::sqrt(s);
}

void StateVector::normalize() {
    double n = norm();
    if (n == 0) throw NumericError("cannot normalize the zero vector");
    for (cplx& a : amplitudes_) a /= n;
}

cplx inner(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) throw RegisterError("inner product register mismatch");
    cplx s{0, 0};
    for (size_t i = 0; i < a.dim(); ++i) s += std::conj(a.amplitudes_[i]) * b.amplitudes_[i];
    return s;
}

namespace {

struct Masks {
    uint64_t flip = 0;    // X and Y letters
    uint64_t parity = 0;  // Y and Z letters
    cplx base{1, 0};      // string phase times i^(#Y)
};

Masks make_masks(const PauliString& P) {
    Masks m;
    int quarter = P.phase_quarter();
    for (const auto& [site, axis] : P.letters()) {
        uint64_t bit = uint64_t{1} << site;
        switch (axis) {
            case Axis::X: m.flip |= bit; break;
            case Axis::Y: m.flip |= bit; m.parity |= bit; quarter = (quarter + 1) % 4; break;
            case Axis::Z: m.parity |= bit; break;
        }
    }
    static const cplx table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    m.base = table[quarter];
    return m;
}

}  // namespace

cplx StringAction::factor(uint64_t b) const {
    return (std::popcount(b & parity_mask) & 1) ? -base : base;
}

StringAction string_action(const PauliString& P) {
    Masks m = make_masks(P);
    return StringAction{m.flip, m.parity, m.base};
}

void apply_accumulate(const PauliString& P, const cplx* psi, cplx* out, size_t dim,
                      cplx coeff) {
    Masks m = make_masks(P);
    cplx base = m.base * coeff;
    for (size_t b = 0; b < dim; ++b) {
        cplx f = (std::popcount(b & m.parity) & 1) ? -base : base;
        out[b ^ m.flip] += f * psi[b];
    }
}

StateVector apply(const PauliString& P, const StateVector& psi) {
    if (P.support_max() >= psi.n_qubits())
        throw RegisterError("Pauli string touches site " + std::to_string(P.support_max()) +
                            " outside a " + std::to_string(psi.n_qubits()) + "-qubit register");
    StateVector out = psi;
    Masks m = make_masks(P);
    const auto& in = psi.amplitudes();
    auto& o = out.amplitudes();
    for (size_t b = 0; b < in.size(); ++b) {
        cplx f = (std::popcount(b & m.parity) & 1) ? -m.base : m.base;
        o[b ^ m.flip] = f * in[b];
    }
    out.normalize();
    return out;
}

cplx expectation(const PauliString& P, const StateVector& psi) {
    if (P.support_max() >= psi.n_qubits())
        throw RegisterError("Pauli string touches site " + std::to_string(P.support_max()) +
                            " outside a " + std::to_string(psi.n_qubits()) + "-qubit register");
    Masks m = make_masks(P);
    const auto& a = psi.amplitudes();
    cplx s{0, 0};
    for (size_t b = 0; b < a.size(); ++b) {
        cplx f = (std::popcount(b & m.parity) & 1) ? -m.base : m.base;
        s += std::conj(a[b ^ m.flip]) * f * a[b];
    }
    return s;
}

PauliString plaquette_operator(const HoneycombLattice& lat, int p) {
    const auto& sites = plaquette_sites(lat, p);
    static const Axis pattern[6] = {Axis::X, Axis::Y, Axis::Z, Axis::X, Axis::Y, Axis::Z};
    PauliString w;
    for (int i = 0; i < 6; ++i) w.mul_right(sites[static_cast<size_t>(i)].index, pattern[i]);
    return w;
}

const char* to_string(Axis a) {
    switch (a) {
        case Axis::X: return "X";
        case Axis::Y: return "Y";
        case Axis::Z: return "Z";
    }
    return "?";
}

Axis axis_from_char(char c) {
    switch (c) {
        case 'X': case 'x': return Axis::X;
        case 'Y': case 'y': return Axis::Y;
        case 'Z': case 'z': return Axis::Z;
    }
    throw DomainError(std::string("bad Pauli letter: ") + c);
}

}  // namespace kitaev
