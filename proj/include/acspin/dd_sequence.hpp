// Copyright 2026 The acspin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "acspin/rotation_group.hpp"

namespace acspin {

/// Error Hamiltonian families a sequence may declare as correctable.
enum class NoiseFamily {
  disorder,         // sum_i delta_i e_i . j_i, arbitrary axes
  dipolar_rwa,      // sum Delta_ik [3 j_iz j_kz - j_i . j_k]
  dipolar_general,  // same with arbitrary pair axes
  rotation_fde,     // finite-duration error of a rotation: m . j_i and 3 j_i . M j_k - j_i . j_k, tr M = 1
};

std::string to_string(NoiseFamily f);
NoiseFamily family_from_string(const std::string& s);

/// Random member of a family on n spins, normalized to unit operator norm.
CMatrix sample_family(NoiseFamily f, int n, std::uint64_t seed);

struct DDSequence {
  std::string name;
  std::vector<std::string> labels;    // one per generator, e.g. "a", "b"
  std::vector<AxisAngle> generators;  // pulse rotations
  std::vector<int> pulse_order;       // generator index of each pulse
  std::vector<Mat3> group;            // decoupling group, identity first
  std::vector<NoiseFamily> families;  // declared correctable families
  std::string source_hash;            // FNV-1a of the file the sequence came from

  int pulse_count() const { return static_cast<int>(pulse_order.size()); }
};

/// Hierholzer walk over the Cayley graph (vertex g, edge g -> R_lambda g),
/// starting and ending at the identity. Returns generator indices. Rejects
/// generators that do not generate `group`.
std::vector<int> eulerian_order(std::span<const Mat3> group, std::span<const Mat3> generators);

/// Builds the group and an Eulerian pulse order for the given generators.
DDSequence make_sequence(std::string name, std::vector<AxisAngle> generators, std::vector<NoiseFamily> families);

/// max over sampled family members of |Pi_G(H)| / |H|.
double verify_decoupling(const DDSequence& seq, NoiseFamily family, int n_spins = 4, int samples = 8,
                         std::uint64_t seed = 1);

struct SequenceCheck {
  bool closed = false;      // pulses compose to the identity rotation
  bool eulerian = false;    // every Cayley edge used exactly once
  bool order_ok = false;    // pulse count = |G| x generator count
  std::vector<std::pair<NoiseFamily, double>> residuals;
  bool ok = false;
  std::string message;
};

inline constexpr double kDecouplingTol = 1e-10;

SequenceCheck validate_sequence(const DDSequence& seq, int n_spins = 4);

std::uint64_t fnv1a64(const std::string& text);

std::string sequence_to_json(const DDSequence& seq);
/// Parses and validates; rejects sequences failing validate_sequence.
DDSequence parse_sequence(const std::string& text);
DDSequence load_sequence(const std::string& path);

enum class AxisSet {
  cube,         // coordinate axes, face and body diagonals
  tilted_cube,  // the same set for a cube whose body diagonal lies along z
};

/// Enumerates generator pairs drawn from the axis set with angles pi, 2pi/3
/// and pi/2, keeping those whose group has the requested order and that pass
/// validation for every requested family. Results come in a fixed order.
std::vector<DDSequence> search_sequences(const std::string& name, std::size_t group_order, AxisSet axes,
                                         const std::vector<NoiseFamily>& families, std::size_t max_results = 1);

}  // namespace acspin
