// Copyright 2026 The hexmon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HEXMON_LATTICE_H
#define HEXMON_LATTICE_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hexmon/pauli.h"

namespace hexmon {

enum class BondColor : std::uint8_t { kX = 0, kY = 1, kZ = 2 };

char color_letter(BondColor color);

enum class Sublattice : std::uint8_t { kA = 0, kB = 1 };

struct Bond {
  std::size_t a;  // A-sublattice site
  std::size_t b;  // B-sublattice site
  BondColor color;
};

/// Hexagon sites in V order: walking counterclockwise from the A site of the
/// plaquette's z-bond, (0,1) span a z-bond, (2,3) an x-bond and (4,5) a y-bond.
struct Plaquette {
  std::array<std::size_t, 6> sites;
};

/// Letter assignment used for V. kStandard is the physical one; kRotated shifts
/// the letters by one site and exists only so the self-check can be mutation tested.
enum class PlaquetteConvention { kStandard, kRotated };

struct Region {
  BitVector qubits;
  std::string label;

  std::size_t size() const { return qubits.popcount(); }
};

struct Point2 {
  double x;
  double y;
};

/// L x L honeycomb torus with 2L^2 qubits. Unit cell (i, j) holds sites
/// A = 2(iL + j) and B = 2(iL + j) + 1, so cylinders of constant i are
/// contiguous in qubit order. Bonds from A(i,j): x to B(i,j), y to B(i-1,j),
/// z to B(i,j-1), so cylinder cuts at constant i cross y-bonds only and each
/// {K_z, V} chain winds once around the cut direction.
/// Bond index = color * L^2 + cell.
class HoneycombLattice {
 public:
  static HoneycombLattice build(std::size_t linear_size,
                                PlaquetteConvention convention = PlaquetteConvention::kStandard);

  std::size_t linear_size() const { return L_; }
  std::size_t num_cells() const { return L_ * L_; }
  std::size_t num_qubits() const { return 2 * L_ * L_; }
  PlaquetteConvention convention() const { return convention_; }

  std::size_t site(std::size_t i, std::size_t j, Sublattice s) const;
  std::size_t cell_i(std::size_t site) const { return site / 2 / L_; }
  std::size_t cell_j(std::size_t site) const { return site / 2 % L_; }
  Sublattice sublattice(std::size_t site) const { return site % 2 ? Sublattice::kB : Sublattice::kA; }
  /// Real-space position with a1 = (1, 0), a2 = (1/2, sqrt(3)/2).
  Point2 position(std::size_t site) const;

  const std::vector<Bond>& bonds() const { return bonds_; }
  std::span<const Bond> bonds_of_color(BondColor color) const;
  const std::vector<Plaquette>& plaquettes() const { return plaquettes_; }
  /// The bond of the given color touching `site`.
  std::size_t bond_at(std::size_t site, BondColor color) const;

  /// Plain-text site, bond and plaquette listing.
  std::string dump() const;

 private:
  std::size_t L_ = 0;
  PlaquetteConvention convention_ = PlaquetteConvention::kStandard;
  std::vector<Bond> bonds_;
  std::vector<Plaquette> plaquettes_;
  std::vector<std::array<std::size_t, 3>> site_bonds_;
};

PauliOperator bond_check(const HoneycombLattice& lattice, const Bond& bond);
/// Conserved Wilson loop: on each hexagon site, the letter of its outward bond.
PauliOperator plaquette_W(const HoneycombLattice& lattice, std::size_t q);
/// Six-spin interaction Z1 Z2 X3 X4 Y5 Y6 in the plaquette's site order.
PauliOperator plaquette_V(const HoneycombLattice& lattice, std::size_t q);

/// All sites with unit-cell coordinate i < l.
Region cylinder_region(const HoneycombLattice& lattice, std::size_t l);
/// Four width-L/4 cylinders A, B, C, D in cyclic order. Requires L % 4 == 0.
std::array<Region, 4> tmi_regions(const HoneycombLattice& lattice);
/// Kitaev-Preskill disk of diameter floor(L/2) centred on a hexagon, cut
/// into three 120-degree sectors A, B, C.
std::array<Region, 3> tee_regions(const HoneycombLattice& lattice);

std::string dump_regions(std::span<const Region> regions);

enum class OperatorType : std::uint8_t { kKx = 0, kKy = 1, kKz = 2, kV = 3 };

const char* operator_type_name(OperatorType type);

struct FrustrationGraph {
  struct Node {
    OperatorType type;
    std::size_t index;  // bond index within its color, or plaquette index
  };
  std::vector<Node> nodes;
  std::vector<std::vector<std::size_t>> adjacency;

  std::size_t num_edges() const;
  std::size_t num_components() const;
  bool is_bipartite() const;
  std::string dump() const;
};

/// Nodes are the selected operator instances; an edge joins each anticommuting pair.
FrustrationGraph frustration_graph(const HoneycombLattice& lattice, std::span<const OperatorType> include);

}  // namespace hexmon

#endif  // HEXMON_LATTICE_H
