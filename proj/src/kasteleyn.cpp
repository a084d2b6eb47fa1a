#include "kas3/kasteleyn.hpp"

#include <numeric>

namespace kas3 {

namespace tnames {
std::string v(int side, std::size_t j) { return "v(" + std::to_string(side) + "," + std::to_string(j) + ")"; }
std::string v_prime(int side, std::size_t j) {
  return "v'(" + std::to_string(side) + "," + std::to_string(j) + ")";
}
std::string w(int cls, std::size_t e) { return "w(" + std::to_string(cls) + ",e" + std::to_string(e) + ")"; }
std::string w0(int side, std::size_t j) {
  return "w(0," + std::to_string(side) + "," + std::to_string(j) + ")";
}
std::string edge(std::size_t e) { return "e" + std::to_string(e); }
std::string tri_ab(std::size_t e) { return edge(e) + ".ab"; }
std::string tri_w(std::size_t e) { return edge(e) + ".w"; }
std::string tri_r(std::size_t e) { return edge(e) + ".r"; }
std::string tri_c(std::size_t e) { return edge(e) + ".c"; }
}  // namespace tnames

namespace {

struct TriangleByVertices {
  Id id;
  std::array<Id, 3> vertices;
};

Id pair_id(const Id& a, const Id& b) { return a < b ? a + "|" + b : b + "|" + a; }

}  // namespace

TSkeleton build_T_skeleton(const BipartiteGraph& g) {
  using namespace tnames;
  if (g.left != g.right) throw PreconditionError("T(G) needs equal sides");
  const std::size_t n = g.left;
  const std::size_t edge_count = g.edges.size();

  TSkeleton s;
  s.graph = g;
  s.m = 2 * n + edge_count;
  for (std::size_t e = 1; e <= edge_count; ++e) {
    s.order[0].push_back(w(0, e));
    s.order[1].push_back(w(1, e));
    s.order[2].push_back(w(2, e));
  }
  for (std::size_t j = 1; j <= n; ++j) s.order[0].push_back(w0(1, j));
  for (std::size_t j = 1; j <= n; ++j) s.order[0].push_back(w0(2, j));
  for (std::size_t j = 1; j <= n; ++j) s.order[1].push_back(v(1, j));
  for (std::size_t j = 1; j <= n; ++j) s.order[1].push_back(v_prime(1, j));
  for (std::size_t j = 1; j <= n; ++j) s.order[2].push_back(v_prime(2, j));
  for (std::size_t j = 1; j <= n; ++j) s.order[2].push_back(v(2, j));
  if (n % 2 == 1) {
    std::swap(s.order[1][s.m - 1], s.order[1][s.m - 2]);
    std::swap(s.order[2][s.m - 1], s.order[2][s.m - 2]);
  }

  std::vector<Id> vertices;
  for (int c = 0; c < 3; ++c)
    for (const auto& name : s.order[c]) {
      vertices.push_back(name);
      s.classes.classes[name] = c + 1;
    }

  std::vector<TriangleByVertices> tris;
  for (std::size_t k = 0; k < edge_count; ++k) {
    const std::size_t e = k + 1, a = g.edges[k].first + 1, b = g.edges[k].second + 1;
    tris.push_back({tri_ab(e), {v(1, a), v(2, b), w(0, e)}});
    tris.push_back({tri_w(e), {w(0, e), w(1, e), w(2, e)}});
    tris.push_back({tri_r(e), {w0(1, a), v_prime(2, a), w(1, e)}});
    tris.push_back({tri_c(e), {w0(2, b), v_prime(1, b), w(2, e)}});
  }
  std::map<Id, EdgeSpec> edges;
  std::vector<TriangleSpec> triangles;
  for (const auto& t : tris) {
    const auto& [x, y, z] = t.vertices;
    TriangleSpec spec{t.id, {pair_id(x, y), pair_id(y, z), pair_id(x, z)}};
    edges.emplace(pair_id(x, y), EdgeSpec{pair_id(x, y), std::make_pair(x, y)});
    edges.emplace(pair_id(y, z), EdgeSpec{pair_id(y, z), std::make_pair(y, z)});
    edges.emplace(pair_id(x, z), EdgeSpec{pair_id(x, z), std::make_pair(x, z)});
    triangles.push_back(std::move(spec));
  }
  std::vector<EdgeSpec> edge_list;
  for (auto& [id, spec] : edges) edge_list.push_back(std::move(spec));
  s.config = TriangularConfiguration(std::move(vertices), std::move(edge_list), std::move(triangles));
  require_valid(s.config);
  return s;
}

Matching strong_matching_image(const TSkeleton& skeleton,
                               const std::vector<std::uint32_t>& matching) {
  using namespace tnames;
  std::vector<Id> ids;
  for (std::size_t k = 0; k < skeleton.graph.edges.size(); ++k) {
    const auto [a, b] = skeleton.graph.edges[k];
    const std::size_t e = k + 1;
    if (a < matching.size() && matching[a] == b) {
      ids.push_back(tri_ab(e));
      ids.push_back(tri_r(e));
      ids.push_back(tri_c(e));
    } else {
      ids.push_back(tri_w(e));
    }
  }
  return Matching::from(std::move(ids));
}

CheckReport g1_structure_check(const TSkeleton& skeleton, const BipartiteGraph& g1) {
  using namespace tnames;
  const std::size_t n = skeleton.graph.left;
  const std::size_t left = skeleton.order[0].size();
  const std::size_t total = left + skeleton.order[1].size();
  if (g1.left != left || g1.right != skeleton.order[1].size())
    return {false, "G1 sides do not match |W0|, |W1|"};

  auto name_of = [&](std::size_t x) {
    return x < left ? skeleton.order[0][x] : skeleton.order[1][x - left];
  };
  std::vector<std::vector<std::size_t>> adj(total);
  std::vector<std::size_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : g1.edges) {
    adj[a].push_back(left + b);
    adj[left + b].push_back(a);
    parent[find(a)] = find(left + b);
  }
  std::map<std::size_t, std::vector<std::size_t>> components;
  for (std::size_t x = 0; x < total; ++x) components[find(x)].push_back(x);

  std::vector<std::size_t> row_degree(n, 0), col_degree(n, 0);
  for (const auto& [a, b] : skeleton.graph.edges) {
    ++row_degree[a];
    ++col_degree[b];
  }
  // name -> (kind, j): 0 = v(1,j), 1 = w(0,1,j), 2 = v'(1,j), 3 = w(0,2,j)
  std::map<Id, std::pair<int, std::size_t>> special;
  for (std::size_t j = 1; j <= n; ++j) {
    special[v(1, j)] = {0, j};
    special[w0(1, j)] = {1, j};
    special[v_prime(1, j)] = {2, j};
    special[w0(2, j)] = {3, j};
  }

  std::size_t thetas = 0, singles = 0, isolated = 0;
  for (const auto& [root, members] : components) {
    std::size_t edge_ends = 0;
    for (std::size_t x : members) edge_ends += adj[x].size();
    const std::size_t edge_total = edge_ends / 2;
    if (members.size() == 1) {
      auto it = special.find(name_of(members[0]));
      const bool ok = it != special.end() &&
                      (it->second.first < 2 ? row_degree[it->second.second - 1]
                                            : col_degree[it->second.second - 1]) == 0;
      if (!ok) return {false, "unexpected isolated vertex " + name_of(members[0])};
      ++isolated;
      continue;
    }
    if (members.size() == 2 && edge_total == 1) {
      auto x = special.find(name_of(members[0])), y = special.find(name_of(members[1]));
      if (x != special.end() && y != special.end() && x->second.second == y->second.second &&
          ((x->second.first == 2 && y->second.first == 3) ||
           (x->second.first == 3 && y->second.first == 2))) {
        ++singles;
        continue;
      }
    }
    std::optional<std::size_t> hub_v, hub_w;
    for (std::size_t x : members) {
      auto it = special.find(name_of(x));
      if (it == special.end()) continue;
      if (it->second.first == 0) hub_v = x;
      if (it->second.first == 1) hub_w = x;
    }
    if (!hub_v || !hub_w || special[name_of(*hub_v)].second != special[name_of(*hub_w)].second)
      return {false, "component without a v(1,j)/w(0,1,j) pair"};
    const std::size_t d = row_degree[special[name_of(*hub_v)].second - 1];
    bool ok = adj[*hub_v].size() == d && adj[*hub_w].size() == d &&
              members.size() == 2 + 2 * d && edge_total == 3 * d;
    for (std::size_t x : members) {
      if (x == *hub_v || x == *hub_w) continue;
      std::size_t hub_links = 0;
      for (std::size_t y : adj[x]) hub_links += (y == *hub_v || y == *hub_w);
      ok = ok && adj[x].size() == 2 && hub_links == 1;
    }
    if (!ok) return {false, "component at " + name_of(*hub_v) + " is not a union of length-3 paths"};
    ++thetas;
  }
  return {true, std::to_string(thetas) + " path bundle(s), " + std::to_string(singles) +
                    " single edge(s), " + std::to_string(isolated) + " isolated vertex(es)"};
}

}  // namespace kas3
