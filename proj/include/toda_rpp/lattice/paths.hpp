#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "toda_rpp/lattice/lattice.hpp"
#include "toda_rpp/toda/solution.hpp"

namespace toda_rpp {

/// Which field weighs a vertical edge, and at which site.
struct EdgeRule {
  enum class Kind { A, B } kind = Kind::A;
  int s = 0;
  int t = 0;
  int n = 0;
};

/// Rule (a) applies when the diagonal through the north endpoint enters L at
/// a west boundary point.
bool rule_a_applies(const RegularLattice& L, Point north);
/// Rule (b) applies when the diagonal through the south endpoint enters L at
/// a north boundary point at distance m >= 1.
bool rule_b_applies(const RegularLattice& L, Point north);

/// Rule for the vertical edge from north to (north.i + 1, north.j).
/// Throws DomainError if an endpoint is outside L, WeightError if no rule fires.
EdgeRule vertical_edge_rule(const RegularLattice& L, Point north);

/// Weight of the unit edge between p and q (in either order).
/// Horizontal edges weigh 1.
Scalar edge_weight(const RegularLattice& L, const TodaSolution& sol, Point p, Point q);

struct LatticePath {
  Point start;
  std::string steps;  // 'N': i -> i-1, 'E': j -> j+1

  Point end() const;
  std::vector<Point> points() const;
  nlohmann::json to_json() const;
  static LatticePath from_json(const nlohmann::json& j);
  friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

using PathTuple = std::vector<LatticePath>;
nlohmann::json to_json(const PathTuple& tuple);

/// Product of the edge weights along P. Throws DomainError if P leaves L.
Scalar path_weight(const RegularLattice& L, const TodaSolution& sol, const LatticePath& path);

/// Sum of path weights over all north/east paths from -> to, by dynamic programming.
Scalar g_sum(const RegularLattice& L, const TodaSolution& sol, Point from, Point to);
/// Same sum by listing every path.
Scalar g_sum_enumerated(const RegularLattice& L, const TodaSolution& sol, Point from, Point to);

/// Every north/east path from -> to inside L.
std::vector<LatticePath> enumerate_paths(const RegularLattice& L, Point from, Point to);

/// Vertex-disjoint tuples P_0..P_{n-1}, P_k from (s+k, y(s)+k) to (x(t)+k, t+k).
void for_each_ni_tuple(const RegularLattice& L, int s, int t, int n, const std::function<void(const PathTuple&)>& visit);
std::vector<PathTuple> enum_ni_tuples(const RegularLattice& L, int s, int t, int n);

/// Sum over the same tuples of the product of path weights.
Scalar ni_tuple_sum(const RegularLattice& L, const TodaSolution& sol, int s, int t, int n);

}  // namespace toda_rpp
