#include "starcox/polytope.hpp"

#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "starcox/cgroup.hpp"
#include "starcox/classify.hpp"

namespace starcox {

std::string to_string(OrbitClass c) { return c == OrbitClass::Regular ? "Regular" : "TwoOrbit"; }

Ringing ringing(int ring) {
  if (ring == 2) return {{2}, {1}, {0, 3}, {3}, {0}};
  if (ring == 0) return {{0}, {1}, {2, 3}, {3}, {2}};
  throw std::invalid_argument("ring must be 0 or 2");
}

namespace {

std::uint64_t index_in(std::uint64_t order, std::uint64_t sub) {
  if (sub == 0 || order % sub != 0)
    throw std::logic_error("subgroup order " + std::to_string(sub) + " does not divide " +
                           std::to_string(order));
  return order / sub;
}

CellSignature signature(const FieldCtx& f, const Generators& r, int omit, std::uint64_t order) {
  int others[2], n = 0;
  for (int i = 0; i < 4; ++i)
    if (i != omit && i != 1) others[n++] = i;
  const std::uint64_t cap = std::uint64_t{f.q()} * f.q() * f.q() * f.q();
  return {order,
          {element_order(f, mat_mul(f, r[others[0]], r[1]), cap),
           element_order(f, mat_mul(f, r[1], r[others[1]]), cap)}};
}

// Right coset labels Hg for every element of G, in G's element order.
std::vector<std::uint32_t> coset_labels(const FieldCtx& f, const ElementSet& g, const ElementSet& h,
                                        std::uint64_t& count) {
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> label(g.size(), kUnset);
  count = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (label[i] != kUnset) continue;
    for (const Mat4& x : h.elements()) label[*g.index_of(mat_mul(f, x, g[i]))] = static_cast<std::uint32_t>(count);
    ++count;
  }
  return label;
}

// Distinct cell labels met by each face; returns the common count, or 0
// if faces disagree.
std::uint64_t uniform_incidence(const std::vector<std::uint32_t>& face, std::uint64_t faces,
                                const std::vector<std::uint32_t>& cell) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::size_t i = 0; i < face.size(); ++i) pairs.emplace(face[i], cell[i]);
  std::vector<std::uint64_t> per(faces, 0);
  for (const auto& pr : pairs) ++per[pr.first];
  for (auto c : per)
    if (c != per.front()) return 0;
  return per.empty() ? 0 : per.front();
}

}  // namespace

PolytopeStats face_counts(const StarParams& params, int ring, std::uint64_t cap) {
  const Ringing rg = ringing(ring);
  const ReducedGenerators red = reduced_generators(params);
  const FieldCtx& f = red.field;
  auto sub = [&](const std::vector<int>& omit) { return distinguished(f, red.gens, omit, cap).order(); };

  PolytopeStats s;
  s.ring = ring;
  s.group_order = static_cast<std::uint64_t>(classify_rank4(params).predicted_order);
  s.vertices = index_in(s.group_order, sub(rg.vertex));
  s.edges = index_in(s.group_order, sub(rg.edge));
  s.subfacets = index_in(s.group_order, sub(rg.subfacet));
  const std::uint64_t hp = sub(rg.cell_p), hq = sub(rg.cell_q);
  s.cells_p = index_in(s.group_order, hp);
  s.cells_q = index_in(s.group_order, hq);
  s.signature_p = signature(f, red.gens, rg.cell_p.front(), hp);
  s.signature_q = signature(f, red.gens, rg.cell_q.front(), hq);
  s.orbit_class = s.signature_p == s.signature_q ? OrbitClass::Regular : OrbitClass::TwoOrbit;
  return s;
}

OrbitClass orbit_class(const StarParams& params, int ring, std::uint64_t cap) {
  return face_counts(params, ring, cap).orbit_class;
}

IncidenceReport edge_alternation_check(const StarParams& params, int ring, std::uint64_t cap) {
  const Ringing rg = ringing(ring);
  const ReducedGenerators red = reduced_generators(params);
  const FieldCtx& f = red.field;
  const GroupHandle g = enumerate(f, {red.gens.begin(), red.gens.end()}, cap);
  auto labels = [&](const std::vector<int>& omit, std::uint64_t& count) {
    const GroupHandle h = distinguished(f, red.gens, omit, cap);
    return coset_labels(f, g.elements(), h.elements(), count);
  };

  IncidenceReport rep;
  const auto edge = labels(rg.edge, rep.edges);
  const auto vert = labels(rg.vertex, rep.vertices);
  const auto cp = labels(rg.cell_p, rep.cells_p);
  const auto cq = labels(rg.cell_q, rep.cells_q);
  rep.edge_cells_p = uniform_incidence(edge, rep.edges, cp);
  rep.edge_cells_q = uniform_incidence(edge, rep.edges, cq);
  rep.vertex_cells_p = uniform_incidence(vert, rep.vertices, cp);
  rep.vertex_cells_q = uniform_incidence(vert, rep.vertices, cq);
  rep.edges_ok = rep.edge_cells_p == 2 && rep.edge_cells_q == 2;
  return rep;
}

std::string to_json(const PolytopeStats& s) {
  nlohmann::ordered_json j;
  j["ring"] = s.ring;
  j["vertices"] = s.vertices;
  j["edges"] = s.edges;
  j["subfacets"] = s.subfacets;
  j["cellsP"] = s.cells_p;
  j["cellsQ"] = s.cells_q;
  j["orbitClass"] = to_string(s.orbit_class);
  j["orbitClassMethod"] = "cell-signature surrogate";
  j["groupOrder"] = s.group_order;
  auto sig = [](const CellSignature& c) {
    return nlohmann::ordered_json::array({c.order, {c.products.first, c.products.second}});
  };
  j["signatureP"] = sig(s.signature_p);
  j["signatureQ"] = sig(s.signature_q);
  return j.dump();
}

std::string to_table(const PolytopeStats& s) {
  std::ostringstream os;
  auto row = [&](const std::string& k, const std::string& v) {
    os << std::left << std::setw(12) << k << std::right << std::setw(14) << v << '\n';
  };
  auto sig = [](const CellSignature& c) {
    return "(" + std::to_string(c.order) + ",(" + std::to_string(c.products.first) + "," +
           std::to_string(c.products.second) + "))";
  };
  row("ring", std::to_string(s.ring));
  row("|G|", std::to_string(s.group_order));
  row("vertices", std::to_string(s.vertices));
  row("edges", std::to_string(s.edges));
  row("subfacets", std::to_string(s.subfacets));
  row("cellsP", std::to_string(s.cells_p));
  row("cellsQ", std::to_string(s.cells_q));
  row("sigP", sig(s.signature_p));
  row("sigQ", sig(s.signature_q));
  row("orbitClass", to_string(s.orbit_class) + " (cell-signature surrogate)");
  return os.str();
}

}  // namespace starcox
