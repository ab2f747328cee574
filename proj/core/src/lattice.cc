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

#include "hexmon/lattice.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace hexmon {

char color_letter(BondColor color) {
  switch (color) {
    case BondColor::kX:
      return 'X';
    case BondColor::kY:
      return 'Y';
    case BondColor::kZ:
      return 'Z';
  }
  return '?';
}

HoneycombLattice HoneycombLattice::build(std::size_t linear_size, PlaquetteConvention convention) {
  if (linear_size < 2) {
    throw std::invalid_argument("HoneycombLattice: linear size must be at least 2, got " +
                                std::to_string(linear_size));
  }
  HoneycombLattice lat;
  lat.L_ = linear_size;
  lat.convention_ = convention;
  const std::size_t L = linear_size;
  auto wrap = [L](std::size_t v, int delta) { return (v + L + static_cast<std::size_t>(L + delta)) % L; };

  lat.bonds_.resize(3 * L * L);
  lat.site_bonds_.assign(2 * L * L, {0, 0, 0});
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = 0; j < L; ++j) {
      const std::size_t cell = i * L + j;
      const std::size_t a = lat.site(i, j, Sublattice::kA);
      const std::array<std::pair<BondColor, std::size_t>, 3> partners = {{
          {BondColor::kX, lat.site(i, j, Sublattice::kB)},
          {BondColor::kY, lat.site(wrap(i, -1), j, Sublattice::kB)},
          {BondColor::kZ, lat.site(i, wrap(j, -1), Sublattice::kB)},
      }};
      for (const auto& [color, b] : partners) {
        const std::size_t index = static_cast<std::size_t>(color) * L * L + cell;
        lat.bonds_[index] = {a, b, color};
        lat.site_bonds_[a][static_cast<std::size_t>(color)] = index;
        lat.site_bonds_[b][static_cast<std::size_t>(color)] = index;
      }
    }
  }

  lat.plaquettes_.resize(L * L);
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = 0; j < L; ++j) {
      const std::size_t ip = wrap(i, 1);
      const std::size_t jm = wrap(j, -1);
      lat.plaquettes_[i * L + j].sites = {
          lat.site(i, j, Sublattice::kA),   lat.site(i, jm, Sublattice::kB),  lat.site(ip, jm, Sublattice::kA),
          lat.site(ip, jm, Sublattice::kB), lat.site(ip, j, Sublattice::kA),  lat.site(i, j, Sublattice::kB),
      };
    }
  }
  return lat;
}

std::size_t HoneycombLattice::site(std::size_t i, std::size_t j, Sublattice s) const {
  return 2 * (i * L_ + j) + static_cast<std::size_t>(s);
}

Point2 HoneycombLattice::position(std::size_t s) const {
  const double i = static_cast<double>(cell_i(s));
  const double j = static_cast<double>(cell_j(s));
  Point2 p{i + 0.5 * j, 0.5 * std::numbers::sqrt3 * j};
  if (sublattice(s) == Sublattice::kB) {
    p.x += 0.5;
    p.y += std::numbers::sqrt3 / 6.0;
  }
  return p;
}

std::span<const Bond> HoneycombLattice::bonds_of_color(BondColor color) const {
  const std::size_t per_color = L_ * L_;
  return std::span<const Bond>(bonds_).subspan(static_cast<std::size_t>(color) * per_color, per_color);
}

std::size_t HoneycombLattice::bond_at(std::size_t s, BondColor color) const {
  return site_bonds_.at(s)[static_cast<std::size_t>(color)];
}

std::string HoneycombLattice::dump() const {
  std::ostringstream out;
  out.precision(17);
  out << "# hexmon honeycomb lattice L=" << L_ << " qubits=" << num_qubits() << '\n';
  for (std::size_t s = 0; s < num_qubits(); ++s) {
    const Point2 p = position(s);
    out << "site " << s << ' ' << cell_i(s) << ' ' << cell_j(s) << ' '
        << (sublattice(s) == Sublattice::kA ? 'A' : 'B') << ' ' << p.x << ' ' << p.y << '\n';
  }
  for (std::size_t b = 0; b < bonds_.size(); ++b) {
    out << "bond " << b << ' ' << bonds_[b].a << ' ' << bonds_[b].b << ' '
        << static_cast<char>(color_letter(bonds_[b].color) - 'A' + 'a') << '\n';
  }
  for (std::size_t q = 0; q < plaquettes_.size(); ++q) {
    out << "plaquette " << q;
    for (const auto s : plaquettes_[q].sites) {
      out << ' ' << s;
    }
    out << '\n';
  }
  return out.str();
}

PauliOperator bond_check(const HoneycombLattice& lattice, const Bond& bond) {
  const char letter = color_letter(bond.color);
  PauliOperator op(lattice.num_qubits());
  op.set_letter(bond.a, letter);
  op.set_letter(bond.b, letter);
  return op;
}

PauliOperator plaquette_W(const HoneycombLattice& lattice, std::size_t q) {
  if (q >= lattice.plaquettes().size()) {
    throw std::out_of_range("plaquette_W: plaquette " + std::to_string(q) + " out of range");
  }
  const auto& sites = lattice.plaquettes()[q].sites;
  PauliOperator op(lattice.num_qubits());
  for (std::size_t k = 0; k < 6; ++k) {
    const std::size_t s = sites[k];
    const std::size_t prev = sites[(k + 5) % 6];
    const std::size_t next = sites[(k + 1) % 6];
    for (const BondColor color : {BondColor::kX, BondColor::kY, BondColor::kZ}) {
      const Bond& bond = lattice.bonds()[lattice.bond_at(s, color)];
      const std::size_t other = bond.a == s ? bond.b : bond.a;
      if (other != prev && other != next) {
        op.set_letter(s, color_letter(color));
      }
    }
  }
  return op;
}

PauliOperator plaquette_V(const HoneycombLattice& lattice, std::size_t q) {
  if (q >= lattice.plaquettes().size()) {
    throw std::out_of_range("plaquette_V: plaquette " + std::to_string(q) + " out of range");
  }
  static constexpr char kStandard[] = "ZZXXYY";
  static constexpr char kRotated[] = "YZZXXY";
  const char* letters = lattice.convention() == PlaquetteConvention::kStandard ? kStandard : kRotated;
  const auto& sites = lattice.plaquettes()[q].sites;
  PauliOperator op(lattice.num_qubits());
  for (std::size_t k = 0; k < 6; ++k) {
    op.set_letter(sites[k], letters[k]);
  }
  return op;
}

namespace {

Region cells_with_i_in(const HoneycombLattice& lattice, std::size_t begin, std::size_t end, std::string label) {
  Region region{BitVector(lattice.num_qubits()), std::move(label)};
  for (std::size_t s = 0; s < lattice.num_qubits(); ++s) {
    const std::size_t i = lattice.cell_i(s);
    if (i >= begin && i < end) {
      region.qubits.set(s, true);
    }
  }
  return region;
}

}  // namespace

Region cylinder_region(const HoneycombLattice& lattice, std::size_t l) {
  if (l > lattice.linear_size()) {
    throw std::out_of_range("cylinder_region: width " + std::to_string(l) + " exceeds L=" +
                            std::to_string(lattice.linear_size()));
  }
  return cells_with_i_in(lattice, 0, l, "cylinder_" + std::to_string(l));
}

std::array<Region, 4> tmi_regions(const HoneycombLattice& lattice) {
  const std::size_t L = lattice.linear_size();
  if (L % 4 != 0) {
    throw std::invalid_argument("tmi_regions: L must be divisible by 4, got " + std::to_string(L));
  }
  const std::size_t w = L / 4;
  return {cells_with_i_in(lattice, 0, w, "A"), cells_with_i_in(lattice, w, 2 * w, "B"),
          cells_with_i_in(lattice, 2 * w, 3 * w, "C"), cells_with_i_in(lattice, 3 * w, L, "D")};
}

std::array<Region, 3> tee_regions(const HoneycombLattice& lattice) {
  const std::size_t L = lattice.linear_size();
  const double Ld = static_cast<double>(L);
  const double radius = static_cast<double>(L / 2) / 2.0;
  // Centre of the hexagon of cell (L/2, L/2).
  const std::size_t c = L / 2;
  const Point2 centre{static_cast<double>(c) + 0.5 * static_cast<double>(c) + 0.5,
                      0.5 * std::numbers::sqrt3 * static_cast<double>(c) - std::numbers::sqrt3 / 6.0};

  std::array<Region, 3> sectors = {Region{BitVector(lattice.num_qubits()), "A"},
                                   Region{BitVector(lattice.num_qubits()), "B"},
                                   Region{BitVector(lattice.num_qubits()), "C"}};
  for (std::size_t s = 0; s < lattice.num_qubits(); ++s) {
    const Point2 p = lattice.position(s);
    const double dx = p.x - centre.x;
    const double dy = p.y - centre.y;
    // Minimum image in the oblique frame: v along a2, u along a1.
    double v = dy / (0.5 * std::numbers::sqrt3);
    double u = dx - 0.5 * v;
    u -= Ld * std::round(u / Ld);
    v -= Ld * std::round(v / Ld);
    const double x = u + 0.5 * v;
    const double y = 0.5 * std::numbers::sqrt3 * v;
    if (std::hypot(x, y) >= radius) {
      continue;
    }
    double angle = std::atan2(y, x);
    if (angle < 0) {
      angle += 2 * std::numbers::pi;
    }
    const auto sector = std::min<std::size_t>(2, static_cast<std::size_t>(angle / (2 * std::numbers::pi / 3)));
    sectors[sector].qubits.set(s, true);
  }
  for (const auto& region : sectors) {
    std::size_t full_cells = 0;
    for (std::size_t s = 0; s < lattice.num_qubits(); s += 2) {
      if (region.qubits.get(s) && region.qubits.get(s + 1)) {
        ++full_cells;
      }
    }
    if (full_cells < 2) {
      throw std::invalid_argument("tee_regions: L=" + std::to_string(L) +
                                  " is too small for a three-sector disk with bulk in each sector");
    }
  }
  return sectors;
}

std::string dump_regions(std::span<const Region> regions) {
  std::ostringstream out;
  for (const auto& region : regions) {
    out << "region " << region.label << ' ' << region.size() << ':';
    for (const auto s : region.qubits.ones()) {
      out << ' ' << s;
    }
    out << '\n';
  }
  return out.str();
}

const char* operator_type_name(OperatorType type) {
  switch (type) {
    case OperatorType::kKx:
      return "Kx";
    case OperatorType::kKy:
      return "Ky";
    case OperatorType::kKz:
      return "Kz";
    case OperatorType::kV:
      return "V";
  }
  return "?";
}

std::size_t FrustrationGraph::num_edges() const {
  std::size_t twice = 0;
  for (const auto& nbrs : adjacency) {
    twice += nbrs.size();
  }
  return twice / 2;
}

namespace {

// Two-coloring by BFS; returns component count and whether every component is bipartite.
std::pair<std::size_t, bool> color_components(const FrustrationGraph& g) {
  std::vector<int> side(g.nodes.size(), -1);
  std::size_t components = 0;
  bool bipartite = true;
  std::vector<std::size_t> queue;
  for (std::size_t start = 0; start < g.nodes.size(); ++start) {
    if (side[start] >= 0) {
      continue;
    }
    ++components;
    side[start] = 0;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      for (const std::size_t v : g.adjacency[u]) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          bipartite = false;
        }
      }
    }
  }
  return {components, bipartite};
}

}  // namespace

std::size_t FrustrationGraph::num_components() const { return color_components(*this).first; }

bool FrustrationGraph::is_bipartite() const { return color_components(*this).second; }

std::string FrustrationGraph::dump() const {
  std::ostringstream out;
  out << "# frustration graph nodes=" << nodes.size() << " edges=" << num_edges() << '\n';
  for (std::size_t u = 0; u < nodes.size(); ++u) {
    out << "node " << u << ' ' << operator_type_name(nodes[u].type) << ' ' << nodes[u].index << '\n';
  }
  for (std::size_t u = 0; u < nodes.size(); ++u) {
    for (const std::size_t v : adjacency[u]) {
      if (u < v) {
        out << "edge " << u << ' ' << v << '\n';
      }
    }
  }
  return out.str();
}

FrustrationGraph frustration_graph(const HoneycombLattice& lattice, std::span<const OperatorType> include) {
  FrustrationGraph graph;
  std::vector<PauliOperator> ops;
  std::vector<bool> seen(4, false);
  for (const OperatorType type : include) {
    if (seen[static_cast<std::size_t>(type)]) {
      continue;
    }
    seen[static_cast<std::size_t>(type)] = true;
    if (type == OperatorType::kV) {
      for (std::size_t q = 0; q < lattice.plaquettes().size(); ++q) {
        graph.nodes.push_back({type, q});
        ops.push_back(plaquette_V(lattice, q));
      }
    } else {
      const auto bonds = lattice.bonds_of_color(static_cast<BondColor>(static_cast<std::uint8_t>(type)));
      for (std::size_t b = 0; b < bonds.size(); ++b) {
        graph.nodes.push_back({type, b});
        ops.push_back(bond_check(lattice, bonds[b]));
      }
    }
  }
  // Only operators that share a site can anticommute.
  std::vector<std::vector<std::size_t>> at_site(lattice.num_qubits());
  for (std::size_t u = 0; u < ops.size(); ++u) {
    for (const std::size_t s : ops[u].support()) {
      at_site[s].push_back(u);
    }
  }
  graph.adjacency.assign(ops.size(), {});
  for (std::size_t u = 0; u < ops.size(); ++u) {
    std::vector<std::size_t> candidates;
    for (const std::size_t s : ops[u].support()) {
      candidates.insert(candidates.end(), at_site[s].begin(), at_site[s].end());
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const std::size_t v : candidates) {
      if (v != u && anticommutes(ops[u], ops[v])) {
        graph.adjacency[u].push_back(v);
      }
    }
  }
  return graph;
}

}  // namespace hexmon
