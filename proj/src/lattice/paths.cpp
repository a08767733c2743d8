#include "toda_rpp/lattice/paths.hpp"

#include <map>
#include <set>

#include "toda_rpp/errors.hpp"

namespace toda_rpp {

namespace {

void require_in(const RegularLattice& L, Point p) {
  if (!L.contains(p)) throw DomainError(to_string(p) + " is not in the lattice");
}

}  // namespace

bool rule_a_applies(const RegularLattice& L, Point north) {
  return boundary_class(L, diagonal_entry(L, north).entry).west;
}

bool rule_b_applies(const RegularLattice& L, Point north) {
  DiagonalEntry d = diagonal_entry(L, {north.i + 1, north.j});
  return d.distance >= 1 && boundary_class(L, d.entry).north;
}

EdgeRule vertical_edge_rule(const RegularLattice& L, Point north) {
  require_in(L, north);
  const Point south{north.i + 1, north.j};
  require_in(L, south);
  DiagonalEntry upper = diagonal_entry(L, north);
  if (boundary_class(L, upper.entry).west) return EdgeRule{EdgeRule::Kind::A, upper.entry.i, upper.entry.j, upper.distance};
  DiagonalEntry lower = diagonal_entry(L, south);
  if (lower.distance >= 1 && boundary_class(L, lower.entry).north) {
    return EdgeRule{EdgeRule::Kind::B, lower.entry.i, lower.entry.j, lower.distance};
  }
  throw WeightError("no weight rule applies to the edge below " + to_string(north));
}

Scalar edge_weight(const RegularLattice& L, const TodaSolution& sol, Point p, Point q) {
  require_in(L, p);
  require_in(L, q);
  if (p.i == q.i && (p.j - q.j == 1 || q.j - p.j == 1)) return Scalar(1);
  if (p.j != q.j || (p.i - q.i != 1 && q.i - p.i != 1)) throw DomainError(to_string(p) + "-" + to_string(q) + " is not a unit edge");
  EdgeRule rule = vertical_edge_rule(L, p.i < q.i ? p : q);
  return rule.kind == EdgeRule::Kind::A ? sol.a(rule.s, rule.t, rule.n) : sol.b(rule.s, rule.t, rule.n);
}

Point LatticePath::end() const {
  Point p = start;
  for (char c : steps) {
    if (c == 'N') {
      --p.i;
    } else if (c == 'E') {
      ++p.j;
    } else {
      throw DomainError(std::string("bad step '") + c + "'");
    }
  }
  return p;
}

std::vector<Point> LatticePath::points() const {
  std::vector<Point> out{start};
  Point p = start;
  for (char c : steps) {
    if (c == 'N') {
      --p.i;
    } else if (c == 'E') {
      ++p.j;
    } else {
      throw DomainError(std::string("bad step '") + c + "'");
    }
    out.push_back(p);
  }
  return out;
}

nlohmann::json LatticePath::to_json() const { return {{"start", {start.i, start.j}}, {"steps", steps}}; }

LatticePath LatticePath::from_json(const nlohmann::json& j) {
  return LatticePath{{j.at("start").at(0).get<int>(), j.at("start").at(1).get<int>()}, j.at("steps").get<std::string>()};
}

nlohmann::json to_json(const PathTuple& tuple) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : tuple) out.push_back(p.to_json());
  return out;
}

Scalar path_weight(const RegularLattice& L, const TodaSolution& sol, const LatticePath& path) {
  std::vector<Point> pts = path.points();
  for (Point p : pts) require_in(L, p);
  std::vector<Scalar> factors;
  for (std::size_t k = 0; k < path.steps.size(); ++k) {
    if (path.steps[k] == 'N') factors.push_back(edge_weight(L, sol, pts[k], pts[k + 1]));
  }
  return product(factors);
}

Scalar g_sum(const RegularLattice& L, const TodaSolution& sol, Point from, Point to) {
  require_in(L, from);
  require_in(L, to);
  if (to.i > from.i || to.j < from.j) return Scalar();
  const int rows = from.i - to.i + 1;
  const int cols = to.j - from.j + 1;
  // g[a][b] is the sum over paths from `from` to (from.i - a, from.j + b).
  std::vector<std::vector<Scalar>> g(rows, std::vector<Scalar>(cols));
  for (int a = 0; a < rows; ++a) {
    for (int b = 0; b < cols; ++b) {
      const Point p{from.i - a, from.j + b};
      if (!L.contains(p)) continue;
      Scalar acc = (a == 0 && b == 0) ? Scalar(1) : Scalar();
      if (b > 0 && L.contains({p.i, p.j - 1})) acc += g[a][b - 1];
      if (a > 0 && L.contains({p.i + 1, p.j}) && !g[a - 1][b].is_zero()) {
        acc += g[a - 1][b] * edge_weight(L, sol, p, {p.i + 1, p.j});
      }
      g[a][b] = std::move(acc);
    }
  }
  return g[rows - 1][cols - 1];
}

namespace {

void paths_rec(const RegularLattice& L, Point p, Point to, std::string& steps, const std::set<Point>* blocked,
               const std::function<void(const std::string&)>& visit) {
  if (p == to) {
    visit(steps);
    return;
  }
  if (p.i > to.i) {
    Point n{p.i - 1, p.j};
    if (L.contains(n) && (blocked == nullptr || !blocked->count(n))) {
      steps.push_back('N');
      paths_rec(L, n, to, steps, blocked, visit);
      steps.pop_back();
    }
  }
  if (p.j < to.j) {
    Point e{p.i, p.j + 1};
    if (L.contains(e) && (blocked == nullptr || !blocked->count(e))) {
      steps.push_back('E');
      paths_rec(L, e, to, steps, blocked, visit);
      steps.pop_back();
    }
  }
}

}  // namespace

std::vector<LatticePath> enumerate_paths(const RegularLattice& L, Point from, Point to) {
  require_in(L, from);
  require_in(L, to);
  std::vector<LatticePath> out;
  std::string steps;
  paths_rec(L, from, to, steps, nullptr, [&](const std::string& s) { out.push_back(LatticePath{from, s}); });
  return out;
}

Scalar g_sum_enumerated(const RegularLattice& L, const TodaSolution& sol, Point from, Point to) {
  std::vector<Scalar> weights;
  for (const auto& path : enumerate_paths(L, from, to)) weights.push_back(path_weight(L, sol, path));
  return sum(weights);
}

void for_each_ni_tuple(const RegularLattice& L, int s, int t, int n, const std::function<void(const PathTuple&)>& visit) {
  if (n < 0) throw DomainError("negative tuple size");
  require_in(L, {s, t});
  PathTuple tuple;
  if (n == 0) {
    visit(tuple);
    return;
  }
  const int ys = y_of(L, s);
  const int xt = x_of(L, t);
  for (int k = 0; k < n; ++k) {
    Point from{s + k, ys + k}, to{xt + k, t + k};
    if (from.i > L.i_bot() || to.j > L.j_max()) {
      throw WindowError("path " + std::to_string(k) + " endpoints leave the lattice window");
    }
    require_in(L, from);
    require_in(L, to);
  }
  std::set<Point> used;
  std::function<void(int)> place = [&](int k) {
    if (k == n) {
      visit(tuple);
      return;
    }
    Point from{s + k, ys + k}, to{xt + k, t + k};
    if (used.count(from)) return;
    std::string steps;
    paths_rec(L, from, to, steps, &used, [&](const std::string& st) {
      LatticePath path{from, st};
      std::vector<Point> pts = path.points();
      for (Point p : pts) used.insert(p);
      tuple.push_back(std::move(path));
      place(k + 1);
      tuple.pop_back();
      for (Point p : pts) used.erase(p);
    });
  };
  place(0);
}

std::vector<PathTuple> enum_ni_tuples(const RegularLattice& L, int s, int t, int n) {
  std::vector<PathTuple> out;
  for_each_ni_tuple(L, s, t, n, [&](const PathTuple& tuple) { out.push_back(tuple); });
  return out;
}

Scalar ni_tuple_sum(const RegularLattice& L, const TodaSolution& sol, int s, int t, int n) {
  std::map<std::pair<Point, std::string>, Scalar> weight_cache;
  std::vector<Scalar> terms;
  for_each_ni_tuple(L, s, t, n, [&](const PathTuple& tuple) {
    std::vector<Scalar> factors;
    for (const auto& path : tuple) {
      auto key = std::make_pair(path.start, path.steps);
      auto it = weight_cache.find(key);
      if (it == weight_cache.end()) it = weight_cache.emplace(key, path_weight(L, sol, path)).first;
      factors.push_back(it->second);
    }
    terms.push_back(product(factors));
  });
  return sum(terms);
}

}  // namespace toda_rpp
