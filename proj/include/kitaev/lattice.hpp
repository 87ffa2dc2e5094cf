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

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <kitaev/errors.hpp>

namespace kitaev {

enum class Sublattice : uint8_t { A = 0, B = 1 };
enum class LinkType : uint8_t { X = 0, Y = 1, Z = 2 };
enum class Boundary : uint8_t { Torus, Open };

/// One spin-1/2 site of the honeycomb lattice.
///
/// Site indexing (documented, fixed): the unit cell at row r, column c has
/// cell index  cell = r*Lx + c,  and the two sites
///   index = 2*cell + 0  (sublattice A)
///   index = 2*cell + 1  (sublattice B).
struct Site {
    int row = 0;
    int col = 0;
    Sublattice sublattice = Sublattice::A;
    int index = 0;
};

/// Nearest-neighbor bond. Endpoints are stored A-site first; this
/// orientation is also the gauge-field convention u_{jk} with j on A.
struct Bond {
    Site a;  // sublattice A endpoint
    Site b;  // sublattice B endpoint
    LinkType type = LinkType::Z;
    int index = 0;  // dense position in HoneycombLattice::bonds
};

/// Hexagonal plaquette. `sites` lists the six corners in the 1..6
/// convention, so the plaquette operator carries the Pauli pattern
/// (x, y, z, x, y, z) by position.
///
/// Convention for "site 1": the A-sublattice site of the plaquette's
/// reference cell (r, c). Walking order:
///   1: A(r,c)  2: B(r,c)  3: A(r,c+1)  4: B(r-1,c+1)  5: A(r-1,c+1)  6: B(r-1,c)
/// Consecutive entries (cyclically) are nearest neighbors.
struct Plaquette {
    int row = 0;
    int col = 0;
    int label = 0;                 // dense plaquette index
    std::array<Site, 6> sites{};   // ordered 1..6
    std::array<int, 6> bonds{};    // boundary bond indices, edge i = (site_i, site_{i+1})
};

struct HoneycombLattice {
    int Lx = 0, Ly = 0;
    Boundary boundary = Boundary::Torus;
    std::vector<Site> sites;
    std::vector<Bond> bonds;
    std::vector<Plaquette> plaquettes;

    int n_sites() const { return static_cast<int>(sites.size()); }
    int n_bonds() const { return static_cast<int>(bonds.size()); }
    int n_plaquettes() const { return static_cast<int>(plaquettes.size()); }

    int site_index(int row, int col, Sublattice s) const;
    const Site& site(int row, int col, Sublattice s) const;

    /// Bond of the given type attached to cell (row, col) by the naming
    /// scheme z(r,c)=A(r,c)-B(r,c), x(r,c)=B(r,c)-A(r,c+1),
    /// y(r,c)=B(r,c)-A(r+1,c). Empty if absent (open boundary).
    std::optional<int> bond_at(int row, int col, LinkType t) const;

    /// The unique bond of type t touching `site` (torus: always present).
    std::optional<int> bond_of_site(int site, LinkType t) const;

    /// Neighbor of `site` across its bond of type t, if that bond exists.
    std::optional<int> neighbor(int site, LinkType t) const;

    /// Plaquette labels (up to 3) containing the given site.
    std::vector<int> plaquettes_of_site(int site) const;

  private:
    friend HoneycombLattice build_lattice(int, int, Boundary);
    // site -> bond index per link type, -1 when absent
    std::vector<std::array<int, 3>> site_bonds_;
};

/// Build the honeycomb lattice. Lx, Ly >= 2 (on a torus smaller extents
/// would make plaquettes self-overlap).
HoneycombLattice build_lattice(int Lx, int Ly, Boundary boundary);

/// The six corner sites of plaquette p, in the 1..6 convention.
const std::array<Site, 6>& plaquette_sites(const HoneycombLattice& lat, int p);

/// All bonds of one link type; the three lists partition lattice.bonds.
std::vector<Bond> bonds_of_type(const HoneycombLattice& lat, LinkType t);

const char* to_string(LinkType t);
const char* to_string(Boundary b);
const char* to_string(Sublattice s);

}  // namespace kitaev
