#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "starcox/group.hpp"
#include "starcox/star.hpp"

namespace starcox {

enum class OrbitClass { Regular, TwoOrbit };
std::string to_string(OrbitClass c);

/// (subgroup order, (order(x r1), order(r1 y))) for a cell stabilizer <x, r1, y>.
struct CellSignature {
  std::uint64_t order = 0;
  std::pair<std::uint64_t, std::uint64_t> products{};
  bool operator==(const CellSignature&) const = default;
};

struct PolytopeStats {
  int ring = 2;
  std::uint64_t group_order = 0;
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  std::uint64_t subfacets = 0;
  std::uint64_t cells_p = 0;
  std::uint64_t cells_q = 0;
  CellSignature signature_p;
  CellSignature signature_q;
  OrbitClass orbit_class = OrbitClass::TwoOrbit;
};

/// Stabilizer indices (omitted generators) for a ringing: vertex, edge,
/// subfacet, cell P, cell Q.
struct Ringing {
  std::vector<int> vertex, edge, subfacet, cell_p, cell_q;
};
Ringing ringing(int ring);

/// Counts are indices of distinguished subgroups in the predicted |G^p|.
PolytopeStats face_counts(const StarParams& params, int ring, std::uint64_t cap = kDefaultCap);
OrbitClass orbit_class(const StarParams& params, int ring, std::uint64_t cap = kDefaultCap);

struct IncidenceReport {
  bool edges_ok = false;             // every edge meets 2 cells of each family
  std::uint64_t edge_cells_p = 0;    // cells per edge when uniform, else 0
  std::uint64_t edge_cells_q = 0;
  std::uint64_t vertex_cells_p = 0;  // cells per vertex when uniform, else 0
  std::uint64_t vertex_cells_q = 0;
  std::uint64_t edges = 0, vertices = 0, cells_p = 0, cells_q = 0;  // coset counts
};

/// Materializes right cosets of G^p and checks incidences by intersection.
/// Throws OverCapError if G^p exceeds the cap.
IncidenceReport edge_alternation_check(const StarParams& params, int ring,
                                       std::uint64_t cap = kDefaultCap);

/// Stable JSON object and an aligned text table.
std::string to_json(const PolytopeStats& s);
std::string to_table(const PolytopeStats& s);

}  // namespace starcox
