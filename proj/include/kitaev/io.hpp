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

#include <json.hpp>

#include <string>

#include <kitaev/braid.hpp>
#include <kitaev/lattice.hpp>
#include <kitaev/majorana.hpp>
#include <kitaev/spin_ed.hpp>

namespace kitaev {

inline constexpr const char* kVersion = "0.1.0";

/// Format with 12 significant digits (reproducibility diffs).
std::string format_g12(double v);

/// Round-trip a double through the 12-significant-digit text form so
/// serialized numbers are byte-stable across runs.
double round12(double v);

nlohmann::json lattice_to_json(const HoneycombLattice& lat);

nlohmann::json eigen_result_to_json(const EigenResult& res, bool dump_vectors = false);

nlohmann::json wp_profile_to_json(const WpProfile& prof);

nlohmann::json script_to_json(const ProtocolScript& script);
ProtocolScript script_from_json(const nlohmann::json& j);

/// Braid report with the non-Abelian prediction (|phase| = pi/2 after
/// one loop) annotated side by side with the measured value; verdict is
/// CONFIRMED when they agree within `phase_match_tol` radians,
/// DEVIATION otherwise.
nlohmann::json braid_report_to_json(const BraidReport& rep, double phase_match_tol = 0.2);

nlohmann::json gap_sweep_to_json(const std::vector<std::pair<int, double>>& sweep);

/// Simplex sweep over Jx+Jy+Jz=1 with the given step; one CSV row per
/// point: Jx,Jy,Jz,phase,gap (gap from an L x L vortex-free sector).
std::string phase_diagram_csv(double step, int gap_size);

std::string gap_sweep_csv(const std::vector<std::pair<int, double>>& sweep);

}  // namespace kitaev
