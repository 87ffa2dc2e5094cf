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

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <kitaev/errors.hpp>
#include <kitaev/lattice.hpp>

namespace kitaev {

using cplx = std::complex<double>;

enum class Axis : uint8_t { X = 0, Y = 1, Z = 2 };

/// Multi-site Pauli operator: a phase in {+1, -1, +i, -i} (stored as a
/// quarter-turn exponent, phase = i^phase_quarter) times one Pauli letter
/// per touched site. Letters are kept sorted by site index; identity
/// letters are never stored, so equality is plain member equality.
class PauliString {
  public:
    PauliString() = default;

    /// Single-letter string sigma^axis_site with phase +1.
    static PauliString single(int site, Axis axis);

    /// Identity with the given quarter-turn phase exponent.
    static PauliString identity(int phase_quarter = 0);

    const std::vector<std::pair<int, Axis>>& letters() const { return letters_; }
    int phase_quarter() const { return phase_quarter_; }
    cplx phase() const;
    bool is_identity() const { return letters_.empty(); }
    int support_max() const { return letters_.empty() ? -1 : letters_.back().first; }

    /// Hermitian iff the phase is real (+-1).
    bool hermitian() const { return phase_quarter_ % 2 == 0; }

    /// Multiply this string on the right by a single letter at `site`.
    void mul_right(int site, Axis axis);

    PauliString inverse() const;

    friend bool operator==(const PauliString&, const PauliString&) = default;

    /// Text form like "+i X3 Y7 Z12"; identity renders as "+1 I".
    std::string str() const;
    static PauliString parse(const std::string& text);

  private:
    int phase_quarter_ = 0;  // phase = i^phase_quarter_, in 0..3
    std::vector<std::pair<int, Axis>> letters_;

    friend PauliString multiply(const PauliString&, const PauliString&);
};

/// Exact Pauli-group product P*Q with phase tracking in {+-1, +-i}.
PauliString multiply(const PauliString& P, const PauliString& Q);

/// True iff PQ = QP: the number of overlapping sites with different
/// letters is even.
bool commutes(const PauliString& P, const PauliString& Q);

/// Normalized complex amplitudes over 2^(n_spins + n_ancilla) basis
/// states. Qubit q is bit q of the basis index; the ancilla, when
/// present, is the highest-order qubit (bit n_spins).
class StateVector {
  public:
    StateVector() = default;

    /// Computational basis state |index> on n_spins qubits, no ancilla.
    static StateVector basis(int n_spins, uint64_t index = 0);

    int n_spins() const { return n_spins_; }
    int n_ancilla() const { return n_ancilla_; }
    int n_qubits() const { return n_spins_ + n_ancilla_; }
    size_t dim() const { return amplitudes_.size(); }

    const std::vector<cplx>& amplitudes() const { return amplitudes_; }
    std::vector<cplx>& amplitudes() { return amplitudes_; }
    cplx operator[](size_t i) const { return amplitudes_[i]; }

    double norm() const;
    void normalize();

    /// Raw constructor from amplitudes (normalizes by default).
    static StateVector from_amplitudes(int n_spins, int n_ancilla, std::vector<cplx> amps,
                                       bool normalize = true);

    friend cplx inner(const StateVector& a, const StateVector& b);

  private:
    int n_spins_ = 0;
    int n_ancilla_ = 0;
    std::vector<cplx> amplitudes_;
};

/// <a|b>.
cplx inner(const StateVector& a, const StateVector& b);

/// P|psi>. Bit-mask amplitude permutation, O(2^n); no dense matrix.
StateVector apply(const PauliString& P, const StateVector& psi);

/// In-place kernel: out += coeff * P|psi| on raw amplitude arrays of
/// length dim. Used by the sparse-operator matvec.
void apply_accumulate(const PauliString& P, const cplx* psi, cplx* out, size_t dim,
                      cplx coeff);

/// <psi|P|psi>.
cplx expectation(const PauliString& P, const StateVector& psi);

/// Basis-state action of a string: P|b> = factor(b) * |b ^ flip>.
struct StringAction {
    uint64_t flip = 0;
    uint64_t parity_mask = 0;
    cplx base{1, 0};
    cplx factor(uint64_t b) const;
};
StringAction string_action(const PauliString& P);

/// W_p for plaquette p: pattern (x,y,z,x,y,z) over plaquette_sites
/// order, phase +1.
PauliString plaquette_operator(const HoneycombLattice& lat, int p);

const char* to_string(Axis a);
Axis axis_from_char(char c);

}  // namespace kitaev
