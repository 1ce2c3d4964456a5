#include "egt/oracles.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <queue>

namespace egt {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  Clock::time_point end;
  explicit Deadline(double seconds)
      : end(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(seconds))) {}
  bool expired() const { return Clock::now() > end; }
  void check() const {
    if (expired()) throw error("oracle time budget exceeded");
  }
};

int popcount(unsigned x) { return std::popcount(x); }

// Plain adjacency-matrix max-flow, small and self-contained on purpose.
struct MatFlow {
  int n;
  std::vector<std::vector<long long>> cap;
  explicit MatFlow(int nn) : n(nn), cap(nn, std::vector<long long>(nn, 0)) {}
  void add_undirected(int u, int v, long long c) {
    cap[u][v] += c;
    cap[v][u] += c;
  }
  void add_arc(int u, int v, long long c) { cap[u][v] += c; }
  long long run(int s, int t, long long need) {
    long long total = 0;
    std::vector<int> par(n);
    while (total < need) {
      std::fill(par.begin(), par.end(), -1);
      par[s] = s;
      std::queue<int> q;
      q.push(s);
      while (!q.empty() && par[t] < 0) {
        int v = q.front();
        q.pop();
        for (int u = 0; u < n; u++)
          if (par[u] < 0 && cap[v][u] > 0) {
            par[u] = v;
            q.push(u);
          }
      }
      if (par[t] < 0) break;
      long long aug = need - total;
      for (int v = t; v != s; v = par[v]) aug = std::min(aug, cap[par[v]][v]);
      for (int v = t; v != s; v = par[v]) {
        cap[par[v]][v] -= aug;
        cap[v][par[v]] += aug;
      }
      total += aug;
    }
    return total;
  }
};

struct SimpleAdjacency {
  int n = 0;
  std::vector<std::vector<int>> mult;  // deduped neighbor multiplicities

  explicit SimpleAdjacency(const Graph& g) : n(g.n), mult(g.n, std::vector<int>(g.n, 0)) {
    for (auto [u, v] : g.edges) {
      mult[u][v]++;
      mult[v][u]++;
    }
  }
};

// Routes the selected pair with edge congestion 1/alpha: scaled so each
// source sends num(alpha) units over edges of capacity den(alpha).
bool route_fractional(const SimpleAdjacency& a, const std::vector<int>& from,
                      const std::vector<int>& to, const Rational& alpha) {
  long long p = to_ll(numerator(alpha)), q = to_ll(denominator(alpha));
  MatFlow f(a.n + 2);
  int s = a.n, t = a.n + 1;
  for (int u = 0; u < a.n; u++)
    for (int v = u + 1; v < a.n; v++)
      if (a.mult[u][v]) f.add_undirected(u, v, q * a.mult[u][v]);
  for (int v : from) f.add_arc(s, v, p);
  for (int v : to) f.add_arc(v, t, p);
  long long need = p * static_cast<long long>(from.size());
  return f.run(s, t, need) == need;
}

bool route_node_disjoint(const SimpleAdjacency& a, const std::vector<int>& from,
                         const std::vector<int>& to) {
  // v -> (v, v+n) split with unit vertex capacity.
  MatFlow f(2 * a.n + 2);
  int s = 2 * a.n, t = 2 * a.n + 1;
  for (int v = 0; v < a.n; v++) f.add_arc(v, v + a.n, 1);
  for (int u = 0; u < a.n; u++)
    for (int v = 0; v < a.n; v++)
      if (u != v && a.mult[u][v]) f.add_arc(u + a.n, v, 1);
  for (int v : from) f.add_arc(s, v, 1);
  for (int v : to) f.add_arc(v + a.n, t, 1);
  long long need = static_cast<long long>(from.size());
  return f.run(s, t, need) == need;
}

std::vector<int> pick(const std::vector<int>& pool, unsigned mask) {
  std::vector<int> out;
  for (int i = 0; mask; i++, mask >>= 1)
    if (mask & 1) out.push_back(pool[i]);
  return out;
}

// Tests every disjoint equal-sized pair drawn from one pool (sizes capped by
// limit when positive), each unordered pair exactly once.
bool all_pairs_ok(const SimpleAdjacency& a, const std::vector<int>& pool, long long limit,
                  bool node_mode, const Rational& alpha, const Deadline& dl) {
  int t = static_cast<int>(pool.size());
  if (t <= 1) return true;
  std::atomic<bool> bad{false}, late{false};
  unsigned full = (1u << t) - 1;
#pragma omp parallel for schedule(dynamic, 64)
  for (unsigned m1 = 1; m1 <= full; m1++) {
    if (bad.load(std::memory_order_relaxed) || late.load(std::memory_order_relaxed))
      continue;
    if (dl.expired()) {
      late.store(true, std::memory_order_relaxed);
      continue;
    }
    int s1 = popcount(m1);
    if (limit > 0 && s1 > limit) continue;
    unsigned comp = full & ~m1;
    unsigned low1 = m1 & (~m1 + 1);
    for (unsigned m2 = comp; m2; m2 = (m2 - 1) & comp) {
      if (popcount(m2) != s1) continue;
      if ((m2 & (~m2 + 1)) < low1) continue;  // symmetric pair, tested from the other side
      auto from = pick(pool, m1);
      auto to = pick(pool, m2);
      bool ok = node_mode ? route_node_disjoint(a, from, to)
                          : route_fractional(a, from, to, alpha);
      if (!ok) {
        bad.store(true, std::memory_order_relaxed);
        break;
      }
    }
  }
  if (late.load()) throw error("oracle time budget exceeded");
  return !bad.load();
}

bool all_cross_pairs_ok(const SimpleAdjacency& a, const std::vector<int>& pool1,
                        const std::vector<int>& pool2, bool node_mode, const Rational& alpha,
                        const Deadline& dl) {
  int t1 = static_cast<int>(pool1.size());
  int t2 = static_cast<int>(pool2.size());
  if (t1 == 0 || t2 == 0) return true;
  std::atomic<bool> bad{false}, late{false};
#pragma omp parallel for schedule(dynamic, 16)
  for (unsigned m1 = 1; m1 < (1u << t1); m1++) {
    if (bad.load(std::memory_order_relaxed) || late.load(std::memory_order_relaxed))
      continue;
    if (dl.expired()) {
      late.store(true, std::memory_order_relaxed);
      continue;
    }
    int s1 = popcount(m1);
    auto from = pick(pool1, m1);
    for (unsigned m2 = 1; m2 < (1u << t2); m2++) {
      if (popcount(m2) != s1) continue;
      auto to = pick(pool2, m2);
      bool ok = node_mode ? route_node_disjoint(a, from, to)
                          : route_fractional(a, from, to, alpha);
      if (!ok) {
        bad.store(true, std::memory_order_relaxed);
        break;
      }
    }
  }
  if (late.load()) throw error("oracle time budget exceeded");
  return !bad.load();
}

// Local copy of the boundary computation so this module does not lean on the
// code it is supposed to check.
std::vector<int> own_boundary(const Graph& g, const std::vector<char>& in) {
  std::vector<int> gamma;
  for (auto [u, v] : g.edges) {
    if (in[u] && !in[v]) gamma.push_back(u);
    if (in[v] && !in[u]) gamma.push_back(v);
  }
  std::sort(gamma.begin(), gamma.end());
  gamma.erase(std::unique(gamma.begin(), gamma.end()), gamma.end());
  return gamma;
}

}  // namespace

bool brute_well_linked(const LinkednessQuery& q, const OracleBudget& b) {
  require(q.g != nullptr, "query has no graph");
  require(q.alpha > 0 && q.alpha <= 1, "alpha must be in (0,1]");
  Deadline dl(b.time_cap_seconds);

  const Graph* host = q.g;
  Graph sub;
  std::vector<int> T = q.T;
  LinkKind kind = q.kind;
  if (kind == LinkKind::bandwidth || kind == LinkKind::k_bandwidth) {
    std::vector<char> in(host->n, 0);
    for (int v : q.cluster) {
      require(host->valid_vertex(v), "cluster vertex out of range");
      in[v] = 1;
    }
    auto gamma = own_boundary(*host, in);
    std::vector<int> keep;
    for (int v = 0; v < host->n; v++)
      if (in[v]) keep.push_back(v);
    std::vector<int> local(host->n, -1);
    sub.init(static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); i++) local[keep[i]] = static_cast<int>(i);
    for (auto [u, v] : host->edges)
      if (local[u] >= 0 && local[v] >= 0) sub.add_edge(local[u], local[v]);
    T.clear();
    for (int v : gamma) T.push_back(local[v]);
    host = &sub;
    kind = (q.kind == LinkKind::bandwidth) ? LinkKind::alpha : LinkKind::k_alpha;
  }

  require(host->n <= b.max_vertices, "oracle budget: too many vertices");
  SimpleAdjacency adj(*host);

  switch (kind) {
    case LinkKind::alpha:
    case LinkKind::k_alpha:
    case LinkKind::node: {
      require(static_cast<int>(T.size()) <= b.max_terminals,
              "oracle budget: too many terminals");
      for (int v : T) require(host->valid_vertex(v), "terminal out of range");
      long long limit = kind == LinkKind::k_alpha ? to_ll(q.kprime) : 0;
      if (kind == LinkKind::k_alpha) require(limit >= 1, "kprime must be positive");
      return all_pairs_ok(adj, T, limit, kind == LinkKind::node, q.alpha, dl);
    }
    case LinkKind::pair_linked:
    case LinkKind::pair_node_linked: {
      require(static_cast<int>(q.T.size() + q.T2.size()) <= b.max_terminals,
              "oracle budget: too many terminals");
      auto common = set_intersect(sorted_unique(q.T), sorted_unique(q.T2));
      require(common.empty(), "pair sides must be disjoint");
      return all_cross_pairs_ok(adj, q.T, q.T2, kind == LinkKind::pair_node_linked,
                                q.alpha, dl);
    }
    default:
      throw internal_error("unhandled linkedness kind");
  }
}

int brute_treewidth(const Graph& g, const OracleBudget& b) {
  require(g.n >= 1, "treewidth of the empty graph is undefined");
  require(g.n <= b.max_vertices, "oracle budget: too many vertices");
  require(g.n <= 22, "subset DP supports at most 22 vertices");
  int n = g.n;
  std::vector<unsigned> adj(n, 0);
  for (auto [u, v] : g.edges) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  // reach_degree(W, v): vertices outside W+{v} seen from v through W.
  auto reach_degree = [&](unsigned W, int v) {
    unsigned seen = 1u << v;
    unsigned frontier = adj[v];
    unsigned inside = frontier & W;
    while (inside) {
      unsigned next = 0;
      while (inside) {
        int u = std::countr_zero(inside);
        inside &= inside - 1;
        if (seen & (1u << u)) continue;
        seen |= 1u << u;
        next |= adj[u];
      }
      frontier |= next;
      inside = next & W & ~seen;
    }
    return popcount(frontier & ~W & ~(1u << v));
  };
  std::vector<signed char> f(1u << n, 0);
  for (unsigned S = 1; S < (1u << n); S++) {
    int best = n;
    for (unsigned rest = S; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      unsigned W = S & ~(1u << v);
      int cand = std::max<int>(f[W], reach_degree(W, v));
      best = std::min(best, cand);
    }
    f[S] = static_cast<signed char>(best);
  }
  return f[(1u << n) - 1];
}

namespace {

struct MinorSearch {
  const Graph& host;
  int hn;
  unsigned full;
  std::vector<unsigned> adj;
  std::vector<int> order;                 // pattern vertices in placement order
  std::vector<std::vector<int>> earlier;  // per position: earlier positions adjacent in pattern
  std::vector<unsigned> chosen;           // branch set mask per position
  unsigned used = 0;
  Deadline dl;

  MinorSearch(const Graph& g, const Graph& pattern, double cap)
      : host(g), hn(g.n), full((1u << g.n) - 1), adj(g.n, 0), dl(cap) {
    for (auto [u, v] : g.edges) {
      adj[u] |= 1u << v;
      adj[v] |= 1u << u;
    }
    // Place pattern vertices in BFS order so nearly every new branch set is
    // pinned against an already-placed neighbor.
    int pn = pattern.n;
    std::vector<int> pos(pn, -1);
    for (int root = 0; root < pn; root++) {
      if (pos[root] >= 0) continue;
      std::queue<int> bfs;
      bfs.push(root);
      pos[root] = static_cast<int>(order.size());
      order.push_back(root);
      while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int u : pattern.neighbors(v))
          if (pos[u] < 0) {
            pos[u] = static_cast<int>(order.size());
            order.push_back(u);
            bfs.push(u);
          }
      }
    }
    earlier.assign(pn, {});
    for (auto [u, v] : pattern.edges) {
      int a = pos[u], b = pos[v];
      if (a > b) std::swap(a, b);
      earlier[b].push_back(a);
    }
    for (auto& e : earlier) e = sorted_unique(std::move(e));
    chosen.assign(pn, 0);
  }

  unsigned neighborhood(unsigned set) const {
    unsigned nb = 0;
    for (unsigned rest = set; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      nb |= adj[v];
    }
    return nb & ~set;
  }

  bool place(int p) {
    if (p == static_cast<int>(order.size())) return true;
    dl.check();
    int max_size = hn - popcount(used) - (static_cast<int>(order.size()) - p - 1);
    if (max_size < 1) return false;
    unsigned avail = full & ~used;
    unsigned banned = 0;
    for (unsigned rest = avail; rest;) {
      int seed = std::countr_zero(rest);
      rest &= rest - 1;
      if (grow(p, 1u << seed, banned, max_size)) return true;
      banned |= 1u << seed;
    }
    return false;
  }

  bool grow(int p, unsigned cur, unsigned banned, int max_size) {
    bool pinned = true;
    unsigned nb = neighborhood(cur);
    for (int q : earlier[p])
      if (!(nb & chosen[q])) {
        pinned = false;
        break;
      }
    if (pinned) {
      chosen[p] = cur;
      used |= cur;
      if (place(p + 1)) return true;
      used &= ~cur;
    }
    if (popcount(cur) == max_size) return false;
    unsigned cand = nb & ~used & ~banned;
    for (unsigned rest = cand; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (grow(p, cur | (1u << v), banned, max_size)) return true;
      banned |= 1u << v;
    }
    return false;
  }
};

}  // namespace

std::optional<MinorModel> brute_minor_test(const Graph& g, const Graph& pattern,
                                           const OracleBudget& b) {
  require(pattern.n >= 1, "pattern must be nonempty");
  require(pattern.n <= b.max_pattern_size, "oracle budget: pattern too large");
  require(g.n <= b.max_vertices, "oracle budget: host too large");
  require(g.n <= 24, "exhaustive minor search supports at most 24 host vertices");
  for (int e = 0; e < pattern.m(); e++) {
    auto [u, v] = pattern.edges[e];
    require(u != v, "pattern has a self-loop");
    require(pattern.edge_multiplicity(u, v) == 1, "pattern has parallel edges");
  }
  if (pattern.n > g.n || pattern.m() > g.m()) return std::nullopt;

  // Minors never increase treewidth; a cheap exact computation on both sides
  // kills most negative instances before the exponential search.
  if (g.n <= 16 && pattern.n <= 16) {
    OracleBudget wide = b;
    wide.max_vertices = 16;
    if (brute_treewidth(g, wide) < brute_treewidth(pattern, wide)) return std::nullopt;
  }

  MinorSearch search(g, pattern, b.time_cap_seconds);
  if (!search.place(0)) return std::nullopt;

  MinorModel m;
  m.pattern = pattern;
  m.branch_sets.assign(pattern.n, {});
  for (size_t p = 0; p < search.order.size(); p++) {
    unsigned set = search.chosen[p];
    auto& bs = m.branch_sets[search.order[p]];
    for (unsigned rest = set; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      bs.push_back(v);
    }
  }
  std::vector<unsigned> by_vertex(pattern.n, 0);
  for (size_t p = 0; p < search.order.size(); p++)
    by_vertex[search.order[p]] = search.chosen[p];
  for (int e = 0; e < pattern.m(); e++) {
    auto [a, bb] = pattern.edges[e];
    int pu = -1, pv = -1;
    for (auto [u, v] : g.edges) {
      if ((by_vertex[a] >> u & 1) && (by_vertex[bb] >> v & 1)) {
        pu = u;
        pv = v;
        break;
      }
      if ((by_vertex[a] >> v & 1) && (by_vertex[bb] >> u & 1)) {
        pu = v;
        pv = u;
        break;
      }
    }
    ensure(pu >= 0, "search produced a model missing a pattern edge");
    m.edge_paths.push_back({pu, pv});
  }
  return m;
}

namespace {

struct CutSearch {
  const std::vector<int>& cluster;
  std::vector<std::pair<int, int>> local_edges;
  std::vector<char> is_anchor;  // by local index
  long long need_num, need_den;  // side passes iff side_anchors*den >= num
  long long total_anchors;

  bool found = false;
  long long best_value = 0, best_min_side = 0;
  std::vector<char> best_assign, assign;

  void descend(int i, long long cut, long long ancA, long long ancB) {
    int c = static_cast<int>(cluster.size());
    if (i == c) {
      if (ancA * need_den < need_num || ancB * need_den < need_num) return;
      long long min_side = std::min(ancA, ancB);
      if (found) {
        if (cut > best_value) return;
        if (cut == best_value && min_side > best_min_side) return;
        if (cut == best_value && min_side == best_min_side &&
            !std::lexicographical_compare(assign.begin(), assign.end(),
                                          best_assign.begin(), best_assign.end()))
          return;
      }
      found = true;
      best_value = cut;
      best_min_side = min_side;
      best_assign = assign;
      return;
    }
    for (char side : {0, 1}) {
      if (i == 0 && side == 1) continue;  // the first vertex anchors side A
      assign[i] = side;
      long long extra = 0;
      for (auto [u, v] : local_edges)
        if (v == i && assign[u] != side) extra++;
      long long na = ancA, nb = ancB;
      if (is_anchor[i]) (side == 0 ? na : nb)++;
      descend(i + 1, cut + extra, na, nb);
    }
  }
};

}  // namespace

BruteCut brute_min_balanced_cut(const Graph& g, const std::vector<int>& cluster_in,
                                const std::vector<int>& anchors_in, const Rational& rho,
                                const OracleBudget& b) {
  auto cluster = sorted_unique(cluster_in);
  auto anchors = sorted_unique(anchors_in);
  require(!cluster.empty(), "cluster must be nonempty");
  require(static_cast<int>(cluster.size()) <= b.max_vertices,
          "oracle budget: cluster too large");
  require(cluster.size() <= 24, "exhaustive cut search supports at most 24 vertices");
  require(rho > 0 && rho <= Rational(1, 2), "rho must be in (0, 1/2]");
  std::vector<int> local(g.n, -1);
  for (size_t i = 0; i < cluster.size(); i++) {
    require(g.valid_vertex(cluster[i]), "cluster vertex out of range");
    local[cluster[i]] = static_cast<int>(i);
  }
  CutSearch cs{cluster, {}, std::vector<char>(cluster.size(), 0), 0, 0, 0};
  for (int a : anchors) {
    require(g.valid_vertex(a) && local[a] >= 0, "anchor outside cluster");
    cs.is_anchor[local[a]] = 1;
  }
  for (auto [u, v] : g.edges)
    if (local[u] >= 0 && local[v] >= 0) {
      int lu = local[u], lv = local[v];
      if (lu > lv) std::swap(lu, lv);
      cs.local_edges.emplace_back(lu, lv);
    }
  cs.total_anchors = static_cast<long long>(anchors.size());
  // side_anchors >= rho * |anchors|
  cs.need_num = to_ll(numerator(rho)) * cs.total_anchors;
  cs.need_den = to_ll(denominator(rho));
  cs.assign.assign(cluster.size(), 0);
  cs.descend(0, 0, 0, 0);
  if (!cs.found) throw error("no rho-balanced cut exists for these anchors");
  BruteCut out;
  out.value = cs.best_value;
  for (size_t i = 0; i < cluster.size(); i++)
    (cs.best_assign[i] == 0 ? out.A : out.B).push_back(cluster[i]);
  return out;
}

int max_node_well_linked_size(const Graph& g, const OracleBudget& b) {
  require(g.n >= 1, "graph must be nonempty");
  require(g.n <= b.max_vertices, "oracle budget: too many vertices");
  for (int k = std::min(g.n, b.max_terminals); k >= 2; k--) {
    std::vector<int> sel(k);
    // Enumerate k-subsets by combination stepping.
    for (int i = 0; i < k; i++) sel[i] = i;
    while (true) {
      LinkednessQuery q;
      q.g = &g;
      q.T = sel;
      q.kind = LinkKind::node;
      if (brute_well_linked(q, b)) return k;
      int i = k - 1;
      while (i >= 0 && sel[i] == g.n - k + i) i--;
      if (i < 0) break;
      sel[i]++;
      for (int j = i + 1; j < k; j++) sel[j] = sel[j - 1] + 1;
    }
  }
  return 1;
}

}  // namespace egt
