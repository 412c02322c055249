#include <doctest.h>

#include "starcox/polytope.hpp"
#include "support.hpp"

using namespace testing;

TEST_SUITE("polytope") {
  TEST_CASE("ring 2 at the even prime") {
    const PolytopeStats s = face_counts(params(3, "2"), 2);
    CHECK(s.vertices == 16);
    CHECK(s.edges == 120);
    CHECK(s.subfacets == 160);
    CHECK(s.cells_p == 16);
    CHECK(s.cells_q == 40);
    CHECK(s.signature_p == CellSignature{60, {5, 3}});
    CHECK(s.signature_q == CellSignature{24, {3, 3}});
    CHECK(s.orbit_class == OrbitClass::TwoOrbit);

    const IncidenceReport inc = edge_alternation_check(params(3, "2"), 2);
    CHECK(inc.edges_ok);
    CHECK(inc.vertex_cells_p == 6);
    CHECK(inc.vertex_cells_q == 10);
    CHECK(inc.edges == 120);
    CHECK(inc.vertices == 16);
  }

  TEST_CASE("ring 0 modulo sqrt5") {
    const PolytopeStats s = face_counts(params(3, "-1+2t"), 0);
    CHECK(s.vertices == 650);
    CHECK(s.edges == 1950);
    CHECK(s.subfacets == 1560);
    CHECK(s.cells_p + s.cells_q == 260);
    CHECK(s.orbit_class == OrbitClass::Regular);
    const IncidenceReport inc = edge_alternation_check(params(3, "-1+2t"), 0);
    CHECK(inc.edges_ok);
    CHECK(inc.edge_cells_p + inc.edge_cells_q == 4);
    CHECK(inc.cells_p == 130);
  }

  TEST_CASE("count times stabilizer is the group order") {
    for (const char* t : {"2", "-1+2t", "3+1t"})
      for (int k : {3, 4, 6})
        for (int ring : {0, 2}) {
          const PolytopeStats s = face_counts(params(k, t), ring);
          CHECK(s.cells_p * s.signature_p.order == s.group_order);
          CHECK(s.cells_q * s.signature_q.order == s.group_order);
          CHECK(s.edges == s.group_order / 8);
        }
  }

  TEST_CASE("k = 4 ring 0 is two-orbit for odd primes") {
    for (const char* t : {"-1+2t", "3", "3+1t"}) CHECK(orbit_class(params(4, t), 0) == OrbitClass::TwoOrbit);
  }

  TEST_CASE("output formats") {
    const PolytopeStats s = face_counts(params(3, "2"), 2);
    const std::string j = to_json(s);
    CHECK(j.rfind(R"({"ring":2,"vertices":16,"edges":120,"subfacets":160,"cellsP":16,"cellsQ":40,"orbitClass":"TwoOrbit")", 0) == 0);
    CHECK(j.find("surrogate") != std::string::npos);
    CHECK(to_table(s).find("surrogate") != std::string::npos);
    CHECK_THROWS_AS(face_counts(params(3, "2"), 1), std::invalid_argument);
  }
}
