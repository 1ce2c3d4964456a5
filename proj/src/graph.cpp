#include "egt/graph.hpp"

#include <algorithm>
#include <queue>

namespace egt {

void Graph::init(int nn) {
  require(nn >= 0, "vertex count must be nonnegative");
  n = nn;
  edges.clear();
  inc.assign(n, {});
  terminal.assign(n, 0);
}

int Graph::add_vertex() {
  inc.emplace_back();
  terminal.push_back(0);
  return n++;
}

int Graph::add_edge(int u, int v) {
  require(valid_vertex(u) && valid_vertex(v), "edge endpoint out of range");
  require(u != v, "self-loops are not supported");
  int id = m();
  edges.emplace_back(u, v);
  inc[u].push_back(id);
  inc[v].push_back(id);
  return id;
}

int Graph::degree(int v) const {
  require(valid_vertex(v), "vertex out of range");
  return static_cast<int>(inc[v].size());
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n; v++) d = std::max(d, static_cast<int>(inc[v].size()));
  return d;
}

int Graph::other(int e, int v) const {
  const auto& [a, b] = edges[e];
  ensure(a == v || b == v, "other(): vertex not on edge");
  return a == v ? b : a;
}

void Graph::set_terminal(int v, bool on) {
  require(valid_vertex(v), "terminal vertex out of range");
  terminal[v] = on ? 1 : 0;
}

bool Graph::is_terminal(int v) const { return valid_vertex(v) && terminal[v]; }

std::vector<int> Graph::terminals() const {
  std::vector<int> t;
  for (int v = 0; v < n; v++)
    if (terminal[v]) t.push_back(v);
  return t;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  out.reserve(inc[v].size());
  for (int e : inc[v]) out.push_back(other(e, v));
  return sorted_unique(std::move(out));
}

bool Graph::has_edge(int u, int v) const { return find_edge(u, v) >= 0; }

int Graph::edge_multiplicity(int u, int v) const {
  int c = 0;
  for (int e : inc[u])
    if (other(e, u) == v) c++;
  return c;
}

int Graph::find_edge(int u, int v) const {
  require(valid_vertex(u) && valid_vertex(v), "vertex out of range");
  for (int e : inc[u])
    if (other(e, u) == v) return e;
  return -1;
}

int grid_vertex(int g, int i, int j) {
  require(i >= 1 && i <= g && j >= 1 && j <= g, "grid coordinate out of range");
  return (i - 1) * g + (j - 1);
}

Graph make_grid(int g) {
  require(g >= 1, "grid side must be positive");
  Graph gr(g * g);
  for (int i = 1; i <= g; i++)
    for (int j = 1; j < g; j++)
      gr.add_edge(grid_vertex(g, i, j), grid_vertex(g, i, j + 1));
  for (int j = 1; j <= g; j++)
    for (int i = 1; i < g; i++)
      gr.add_edge(grid_vertex(g, i, j), grid_vertex(g, i + 1, j));
  return gr;
}

std::vector<int> sorted_unique(std::vector<int> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<char> vertex_mask(const Graph& g, const std::vector<int>& vs) {
  std::vector<char> mask(g.n, 0);
  for (int v : vs) {
    require(g.valid_vertex(v), "vertex out of range");
    mask[v] = 1;
  }
  return mask;
}

Cluster::Cluster(const Graph& gr, std::vector<int> mem)
    : g(&gr), members(sorted_unique(std::move(mem))) {
  for (int v : members) require(gr.valid_vertex(v), "cluster member out of range");
}

bool Cluster::contains(int v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

BoundaryInfo boundary(const Graph& g, const std::vector<int>& members) {
  auto mask = vertex_mask(g, members);
  BoundaryInfo b;
  for (int e = 0; e < g.m(); e++) {
    auto [u, v] = g.edges[e];
    if (mask[u] == mask[v]) continue;
    b.out_edges.push_back(e);
    b.gamma.push_back(mask[u] ? u : v);
  }
  b.gamma = sorted_unique(std::move(b.gamma));
  return b;
}

BoundaryInfo boundary(const Cluster& c) {
  ensure(c.g != nullptr, "cluster has no host graph");
  return boundary(*c.g, c.members);
}

std::vector<int> gamma_prime(const Graph& g, const std::vector<int>& members) {
  auto gp = boundary(g, members).gamma;
  for (int v : members)
    if (g.is_terminal(v)) gp.push_back(v);
  return sorted_unique(std::move(gp));
}

std::vector<std::vector<int>> induced_components(const Graph& g,
                                                 const std::vector<int>& members) {
  auto mask = vertex_mask(g, members);
  std::vector<char> seen(g.n, 0);
  std::vector<std::vector<int>> comps;
  for (int s : members) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> bfs;
    bfs.push(s);
    seen[s] = 1;
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      comp.push_back(v);
      for (int e : g.inc[v]) {
        int w = g.other(e, v);
        if (mask[w] && !seen[w]) {
          seen[w] = 1;
          bfs.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool induced_connected(const Graph& g, const std::vector<int>& members) {
  if (members.empty()) return false;
  return induced_components(g, members).size() == 1;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& members) {
  InducedSubgraph s;
  s.to_host = sorted_unique(members);
  s.from_host.assign(g.n, -1);
  for (size_t i = 0; i < s.to_host.size(); i++) {
    require(g.valid_vertex(s.to_host[i]), "member out of range");
    s.from_host[s.to_host[i]] = static_cast<int>(i);
  }
  s.g.init(static_cast<int>(s.to_host.size()));
  for (int e = 0; e < g.m(); e++) {
    auto [u, v] = g.edges[e];
    if (s.from_host[u] >= 0 && s.from_host[v] >= 0) {
      s.g.add_edge(s.from_host[u], s.from_host[v]);
      s.edge_to_host.push_back(e);
    }
  }
  for (size_t i = 0; i < s.to_host.size(); i++)
    if (g.is_terminal(s.to_host[i])) s.g.set_terminal(static_cast<int>(i));
  return s;
}

std::vector<int> PathFamily::first_vertices() const {
  std::vector<int> out;
  for (const auto& p : paths) {
    ensure(!p.empty(), "empty path in family");
    out.push_back(p.front());
  }
  return out;
}

std::vector<int> PathFamily::last_vertices() const {
  std::vector<int> out;
  for (const auto& p : paths) {
    ensure(!p.empty(), "empty path in family");
    out.push_back(p.back());
  }
  return out;
}

namespace {

std::string check_one_path(const Graph& g, const std::vector<int>& p, size_t idx) {
  std::string tag = "path " + std::to_string(idx);
  if (p.empty()) return tag + " is empty";
  std::vector<char> on(g.n, 0);
  for (size_t i = 0; i < p.size(); i++) {
    if (!g.valid_vertex(p[i])) return tag + ": vertex out of range";
    if (on[p[i]]) return tag + " revisits vertex " + std::to_string(p[i]);
    on[p[i]] = 1;
    if (i + 1 < p.size() && !g.has_edge(p[i], p[i + 1]))
      return tag + ": no edge " + std::to_string(p[i]) + "-" + std::to_string(p[i + 1]);
  }
  return {};
}

}  // namespace

std::string check_path_family(const Graph& g, const PathFamily& f) {
  for (size_t i = 0; i < f.paths.size(); i++) {
    auto err = check_one_path(g, f.paths[i], i);
    if (!err.empty()) return err;
  }
  if (!f.internal_disjoint_from.empty()) {
    auto mask = vertex_mask(g, f.internal_disjoint_from);
    for (size_t i = 0; i < f.paths.size(); i++) {
      const auto& p = f.paths[i];
      for (size_t j = 1; j + 1 < p.size(); j++)
        if (mask[p[j]])
          return "path " + std::to_string(i) + " passes through excluded vertex " +
                 std::to_string(p[j]);
    }
  }
  if (f.kind == Disjointness::node) {
    std::vector<int> owner(g.n, -1);
    for (size_t i = 0; i < f.paths.size(); i++)
      for (int v : f.paths[i]) {
        if (owner[v] >= 0)
          return "paths " + std::to_string(owner[v]) + " and " + std::to_string(i) +
                 " share vertex " + std::to_string(v);
        owner[v] = static_cast<int>(i);
      }
    return {};
  }
  // Edge / congestion: count uses of each unordered vertex pair against its
  // multiplicity in the multigraph.
  int limit = f.kind == Disjointness::edge ? 1 : f.eta;
  if (limit < 1) return "congestion bound must be positive";
  std::vector<std::vector<std::pair<int, int>>> used(g.n);  // v -> (neighbor, count)
  auto bump = [&](int u, int v) -> int {
    if (u > v) std::swap(u, v);
    for (auto& [w, c] : used[u])
      if (w == v) return ++c;
    used[u].emplace_back(v, 1);
    return 1;
  };
  for (size_t i = 0; i < f.paths.size(); i++) {
    const auto& p = f.paths[i];
    for (size_t j = 0; j + 1 < p.size(); j++) {
      int u = p[j], v = p[j + 1];
      int uses = bump(u, v);
      if (uses > limit * g.edge_multiplicity(u, v))
        return "edge " + std::to_string(u) + "-" + std::to_string(v) +
               " used beyond its capacity (path " + std::to_string(i) + ")";
    }
  }
  return {};
}

VerifyReport verify_minor_model(const Graph& g, const MinorModel& m) {
  auto fail = [](std::string why) { return VerifyReport{false, std::move(why)}; };
  const Graph& h = m.pattern;
  if (static_cast<int>(m.branch_sets.size()) != h.n)
    return fail("branch set count does not match pattern vertex count");
  if (static_cast<int>(m.edge_paths.size()) != h.m())
    return fail("edge path count does not match pattern edge count");
  for (int e = 0; e < h.m(); e++) {
    auto [a, b] = h.edges[e];
    if (a == b) return fail("pattern has a self-loop");
    for (int e2 = e + 1; e2 < h.m(); e2++) {
      auto [c, d] = h.edges[e2];
      if ((a == c && b == d) || (a == d && b == c))
        return fail("pattern has parallel edges");
    }
  }

  std::vector<int> in_set(g.n, -1);  // host vertex -> pattern vertex
  for (int v = 0; v < h.n; v++) {
    const auto& bs = m.branch_sets[v];
    if (bs.empty()) return fail("branch set " + std::to_string(v) + " is empty");
    for (int x : bs) {
      if (!g.valid_vertex(x))
        return fail("branch set " + std::to_string(v) + " has vertex out of range");
      if (in_set[x] == v)
        return fail("branch set " + std::to_string(v) + " repeats vertex " +
                    std::to_string(x));
      if (in_set[x] >= 0)
        return fail("disjointness: branch sets " + std::to_string(in_set[x]) + " and " +
                    std::to_string(v) + " share vertex " + std::to_string(x));
      in_set[x] = v;
    }
    if (!induced_connected(g, sorted_unique(bs)))
      return fail("branch set " + std::to_string(v) + " is not connected");
  }

  std::vector<int> inner_owner(g.n, -1);
  for (int e = 0; e < h.m(); e++) {
    auto [a, b] = h.edges[e];
    const auto& p = m.edge_paths[e];
    std::string tag = "edge path " + std::to_string(e);
    auto err = check_one_path(g, p, e);
    if (!err.empty()) return fail(err);
    int s = in_set[p.front()], t = in_set[p.back()];
    if (!((s == a && t == b) || (s == b && t == a)))
      return fail(tag + " does not connect branch sets " + std::to_string(a) + " and " +
                  std::to_string(b));
    for (size_t j = 1; j + 1 < p.size(); j++) {
      int x = p[j];
      if (in_set[x] >= 0)
        return fail(tag + " passes through branch set " + std::to_string(in_set[x]));
      if (inner_owner[x] >= 0)
        return fail("disjointness: edge paths " + std::to_string(inner_owner[x]) +
                    " and " + std::to_string(e) + " share inner vertex " +
                    std::to_string(x));
      inner_owner[x] = e;
    }
  }
  return {};
}

}  // namespace egt
