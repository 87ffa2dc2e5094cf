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

#include <kitaev/lattice.hpp>

#include <string>

namespace kitaev {

namespace {
int wrap(int v, int n) { return ((v % n) + n) % n; }
}  // namespace

int HoneycombLattice::site_index(int row, int col, Sublattice s) const {
    int r = wrap(row, Ly);
    int c = wrap(col, Lx);
    return 2 * (r * Lx + c) + static_cast<int>(s);
}

const Site& HoneycombLattice::site(int row, int col, Sublattice s) const {
    return sites[static_cast<size_t>(site_index(row, col, s))];
}

std::optional<int> HoneycombLattice::bond_at(int row, int col, LinkType t) const {
    int r = wrap(row, Ly);
    int c = wrap(col, Lx);
    Sublattice bs = Sublattice::B;
    int bsite = 2 * (r * Lx + c) + static_cast<int>(bs);
    // All three naming-scheme bonds touch B(r,c).
    int idx = site_bonds_[static_cast<size_t>(bsite)][static_cast<int>(t)];
    if (idx < 0) return std::nullopt;
    return idx;
}

std::optional<int> HoneycombLattice::bond_of_site(int s, LinkType t) const {
    if (s < 0 || s >= n_sites()) throw LookupError("site index out of range: " + std::to_string(s));
    int idx = site_bonds_[static_cast<size_t>(s)][static_cast<int>(t)];
    if (idx < 0) return std::nullopt;
    return idx;
}

std::optional<int> HoneycombLattice::neighbor(int s, LinkType t) const {
    auto b = bond_of_site(s, t);
    if (!b) return std::nullopt;
    const Bond& bd = bonds[static_cast<size_t>(*b)];
    return bd.a.index == s ? bd.b.index : bd.a.index;
}

std::vector<int> HoneycombLattice::plaquettes_of_site(int s) const {
    std::vector<int> out;
    for (const Plaquette& p : plaquettes)
        for (const Site& ps : p.sites)
            if (ps.index == s) {
                out.push_back(p.label);
                break;
            }
    return out;
}

HoneycombLattice build_lattice(int Lx, int Ly, Boundary boundary) {
    if (Lx < 2 || Ly < 2)
        throw SizeError("honeycomb extents must satisfy Lx, Ly >= 2 (got " +
                        std::to_string(Lx) + "x" + std::to_string(Ly) + ")");

    HoneycombLattice lat;
    lat.Lx = Lx;
    lat.Ly = Ly;
    lat.boundary = boundary;

    const bool torus = boundary == Boundary::Torus;

    lat.sites.resize(static_cast<size_t>(2 * Lx * Ly));
    for (int r = 0; r < Ly; ++r)
        for (int c = 0; c < Lx; ++c)
            for (int s = 0; s < 2; ++s) {
                int idx = 2 * (r * Lx + c) + s;
                lat.sites[static_cast<size_t>(idx)] =
                    Site{r, c, static_cast<Sublattice>(s), idx};
            }

    lat.site_bonds_.assign(lat.sites.size(), {-1, -1, -1});

    auto add_bond = [&](int ar, int ac, int br, int bc, LinkType t) {
        const Site& sa = lat.site(ar, ac, Sublattice::A);
        const Site& sb = lat.site(br, bc, Sublattice::B);
        int idx = lat.n_bonds();
        lat.bonds.push_back(Bond{sa, sb, t, idx});
        lat.site_bonds_[static_cast<size_t>(sa.index)][static_cast<int>(t)] = idx;
        lat.site_bonds_[static_cast<size_t>(sb.index)][static_cast<int>(t)] = idx;
    };

    // Bond naming: z(r,c) = A(r,c)-B(r,c); x(r,c) = B(r,c)-A(r,c+1);
    // y(r,c) = B(r,c)-A(r+1,c). Insertion order is cell-major, x,y,z.
    for (int r = 0; r < Ly; ++r)
        for (int c = 0; c < Lx; ++c) {
            if (torus || c + 1 < Lx) add_bond(r, c + 1, r, c, LinkType::X);
            if (torus || r + 1 < Ly) add_bond(r + 1, c, r, c, LinkType::Y);
            add_bond(r, c, r, c, LinkType::Z);
        }

    // Plaquette (r,c) walks A(r,c), B(r,c), A(r,c+1), B(r-1,c+1),
    // A(r-1,c+1), B(r-1,c); on open boundaries it exists only when the
    // wrapped cells are real.
    for (int r = 0; r < Ly; ++r)
        for (int c = 0; c < Lx; ++c) {
            if (!torus && (r == 0 || c + 1 >= Lx)) continue;
            Plaquette p;
            p.row = r;
            p.col = c;
            p.label = static_cast<int>(lat.plaquettes.size());
            p.sites = {lat.site(r, c, Sublattice::A),     lat.site(r, c, Sublattice::B),
                       lat.site(r, c + 1, Sublattice::A), lat.site(r - 1, c + 1, Sublattice::B),
                       lat.site(r - 1, c + 1, Sublattice::A), lat.site(r - 1, c, Sublattice::B)};
            auto need = [&](int rr, int cc, LinkType t) {
                auto b = lat.bond_at(rr, cc, t);
                if (!b) throw NumericError("internal: plaquette boundary bond missing");
                return *b;
            };
            p.bonds = {need(r, c, LinkType::Z),          need(r, c, LinkType::X),
                       need(r - 1, c + 1, LinkType::Y),  need(r - 1, c + 1, LinkType::Z),
                       need(r - 1, c, LinkType::X),      need(r - 1, c, LinkType::Y)};
            lat.plaquettes.push_back(p);
        }

    return lat;
}

const std::array<Site, 6>& plaquette_sites(const HoneycombLattice& lat, int p) {
    if (p < 0 || p >= lat.n_plaquettes())
        throw LookupError("unknown plaquette label: " + std::to_string(p));
    return lat.plaquettes[static_cast<size_t>(p)].sites;
}

std::vector<Bond> bonds_of_type(const HoneycombLattice& lat, LinkType t) {
    std::vector<Bond> out;
    for (const Bond& b : lat.bonds)
        if (b.type == t) out.push_back(b);
    return out;
}

const char* to_string(LinkType t) {
    switch (t) {
        case LinkType::X: return "x";
        case LinkType::Y: return "y";
        case LinkType::Z: return "z";
    }
    return "?";
}

const char* to_string(Boundary b) {
    return b == Boundary::Torus ? "torus" : "open";
}

const char* to_string(Sublattice s) { return s == Sublattice::A ? "A" : "B"; }

}  // namespace kitaev
