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

#include <stdexcept>
#include <string>
#include <vector>

namespace kitaev {

/// Bad lattice extents or other size violations.
struct SizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A site/plaquette label that does not exist.
struct LookupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Pauli string touches sites outside the state's register.
struct RegisterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Problem exceeds the exact-diagonalization ceiling.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid parameter domain (e.g. U <= 0).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Flux pattern violates the torus product constraint, or similar.
struct ConstraintError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sector tools invoked where W_p is not conserved (h != 0).
struct UnsupportedSectorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Protocol step applied out of order (e.g. no ancilla attached).
struct ProtocolError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Braid-loop sites do not form a valid hexagon path.
struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Generic numerical failure (eigensolver breakdown etc.).
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Iterative eigensolver did not reach tolerance; carries last residuals.
struct ConvergenceError : std::runtime_error {
    std::vector<double> residuals;
    ConvergenceError(const std::string& msg, std::vector<double> res)
        : std::runtime_error(msg), residuals(std::move(res)) {}
};

}  // namespace kitaev
