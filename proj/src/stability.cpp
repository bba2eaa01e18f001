#include "jacstrat/stability.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <queue>
#include <set>

namespace jacstrat {

namespace {

std::uint64_t full_vertex_mask(const CurveGraph& g) {
  const int v = g.vertex_count();
  return v >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << v) - 1;
}

void require_vector_size(std::size_t got, const CurveGraph& g, const char* what) {
  if (got != static_cast<std::size_t>(g.vertex_count()))
    throw ValidationError(std::string(what) + ": expected one entry per vertex (" +
                          std::to_string(g.vertex_count()) + "), got " + std::to_string(got));
}

void require_sum_matches(const NormalizedMultidegree& e, const GeneratingSubgraph& sub) {
  long long sum = 0;
  for (long long x : e.values) sum += x;
  const long long edges = sub.edge_count();
  if (sum != edges)
    throw SumMismatchError("normalized multidegree sums to " + std::to_string(sum) +
                           ", subgraph has " + std::to_string(edges) + " edges");
}

void require_vertex_cap(const CurveGraph& g, int max_vertices, const char* what) {
  if (g.vertex_count() > max_vertices)
    throw CapExceededError(std::string(what) + ": " + std::to_string(g.vertex_count()) +
                           " vertices exceeds cap " + std::to_string(max_vertices));
}

struct CutStats {
  long long e_d = 0;
  long long internal = 0;
  long long crossing = 0;
};

CutStats cut_stats(const NormalizedMultidegree& e, const GeneratingSubgraph& sub,
                   std::uint64_t d_mask) {
  CutStats s;
  const CurveGraph& g = *sub.graph;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if ((d_mask >> v) & 1u) s.e_d += e.values[v];
  }
  for (int ei = 0; ei < g.edge_count(); ++ei) {
    if (!sub.keeps(ei)) continue;
    const Edge& ed = g.edge(ei);
    const bool a = (d_mask >> ed.first) & 1u;
    const bool b = (d_mask >> ed.second) & 1u;
    if (a && b)
      ++s.internal;
    else if (a || b)
      ++s.crossing;
  }
  return s;
}

// Shared scan skeleton for the two inequality checks. `within` restricts
// the subcurves D to proper nonempty subsets of that vertex set.
template <typename Test>
Classification scan_subcurves(const GeneratingSubgraph& sub, std::uint64_t within, Test test) {
  Classification result;
  std::optional<std::uint64_t> equality;
  if (std::popcount(within) <= 1) return result;  // no proper nonempty subcurve
  // Enumerate proper nonempty submasks of `within` in ascending order.
  std::vector<std::uint64_t> masks;
  for (std::uint64_t d = (within - 1) & within; d != 0; d = (d - 1) & within) masks.push_back(d);
  std::sort(masks.begin(), masks.end());
  for (std::uint64_t d : masks) {
    const int cmp = test(d);  // <0 violated, 0 equality, >0 strict
    if (cmp < 0) return {Verdict::Unstable, d};
    if (cmp == 0 && !equality) equality = d;
  }
  if (equality) return {Verdict::StrictlySemistable, equality};
  return result;
}

// True iff every vertex of `verts` reaches and is reached by verts[0]
// along the oriented non-loop edges in `arc_edges`.
bool strongly_connected(const CurveGraph& g, const std::vector<int>& verts,
                        const std::vector<std::pair<int, int>>& arcs) {
  if (verts.size() <= 1) return true;
  std::vector<int> slot(g.vertex_count(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) slot[verts[i]] = static_cast<int>(i);
  const int n = static_cast<int>(verts.size());
  std::vector<std::vector<int>> fwd(n), bwd(n);
  for (const auto& [tail, head] : arcs) {
    fwd[slot[tail]].push_back(slot[head]);
    bwd[slot[head]].push_back(slot[tail]);
  }
  const auto reaches_all = [n](const std::vector<std::vector<int>>& adj) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : adj[u]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n;
  };
  return reaches_all(fwd) && reaches_all(bwd);
}

// Non-loop bridges of the component spanned by `verts` and `edge_ids`.
// Parallel copies shield each other, so only the edge id used to enter a
// vertex is barred from serving as the return path.
bool has_bridge(const CurveGraph& g, const std::vector<int>& verts,
                const std::vector<int>& edge_ids) {
  std::vector<int> slot(g.vertex_count(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) slot[verts[i]] = static_cast<int>(i);
  const int n = static_cast<int>(verts.size());
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge id)
  for (int e : edge_ids) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) continue;
    adj[slot[ed.first]].push_back({slot[ed.second], e});
    adj[slot[ed.second]].push_back({slot[ed.first], e});
  }
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  bool found = false;
  // Iterative DFS; (vertex, incoming edge id, next adjacency index).
  std::vector<std::array<int, 3>> frame;
  for (int root = 0; root < n && !found; ++root) {
    if (disc[root] >= 0) continue;
    frame.push_back({root, -1, 0});
    disc[root] = low[root] = timer++;
    while (!frame.empty() && !found) {
      auto& [u, in_edge, idx] = frame.back();
      if (idx < static_cast<int>(adj[u].size())) {
        const auto [w, eid] = adj[u][idx++];
        if (eid == in_edge) continue;
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          frame.push_back({w, eid, 0});
        } else {
          low[u] = std::min(low[u], disc[w]);
        }
      } else {
        const int done = u;
        frame.pop_back();
        if (!frame.empty()) {
          const int parent = frame.back()[0];
          low[parent] = std::min(low[parent], low[done]);
          if (low[done] > disc[parent]) found = true;
        }
      }
    }
    frame.clear();
  }
  return found;
}

// Distinct indegree vectors (in component-local coordinates) of stable
// orientations of one connected component.
std::vector<std::vector<long long>> component_stable_set(const CurveGraph& g,
                                                         const std::vector<int>& verts,
                                                         const std::vector<int>& edge_ids) {
  std::vector<int> loops_at(verts.size(), 0);
  std::vector<int> slot(g.vertex_count(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) slot[verts[i]] = static_cast<int>(i);
  std::vector<int> nonloop;
  for (int e : edge_ids) {
    if (g.edge(e).is_loop())
      ++loops_at[slot[g.edge(e).first]];
    else
      nonloop.push_back(e);
  }

  std::vector<long long> base(verts.size(), 0);
  for (std::size_t i = 0; i < verts.size(); ++i) base[i] = loops_at[i];

  if (verts.size() == 1) return {base};  // no cuts to violate
  if (has_bridge(g, verts, edge_ids)) return {};  // a bridge cut is always one-directional

  std::set<std::vector<long long>> found;
  const int m = static_cast<int>(nonloop.size());
  std::vector<std::pair<int, int>> arcs(m);
  for (std::uint64_t dirs = 0; dirs < (std::uint64_t{1} << m); ++dirs) {
    std::vector<long long> deg = base;
    for (int i = 0; i < m; ++i) {
      const Edge& ed = g.edge(nonloop[i]);
      const bool back = (dirs >> i) & 1u;
      const int tail = back ? ed.second : ed.first;
      const int head = back ? ed.first : ed.second;
      arcs[i] = {tail, head};
      ++deg[slot[head]];
    }
    if (strongly_connected(g, verts, arcs)) found.insert(deg);
  }
  return {found.begin(), found.end()};
}

std::vector<std::vector<long long>> stable_sets_product(const GeneratingSubgraph& sub,
                                                        bool require_connected) {
  const CurveGraph& g = *sub.graph;
  const auto comps = connected_components(sub);
  if (require_connected && comps.size() > 1) return {};

  std::vector<std::vector<int>> comp_edges(comps.size());
  std::vector<int> comp_of(g.vertex_count(), -1);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (sub.keeps(e)) comp_edges[comp_of[g.edge(e).first]].push_back(e);
  }

  std::vector<std::vector<long long>> acc = {std::vector<long long>(g.vertex_count(), 0)};
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const auto locals = component_stable_set(g, comps[c], comp_edges[c]);
    if (locals.empty()) return {};
    std::vector<std::vector<long long>> next;
    next.reserve(acc.size() * locals.size());
    for (const auto& partial : acc) {
      for (const auto& local : locals) {
        std::vector<long long> merged = partial;
        for (std::size_t i = 0; i < comps[c].size(); ++i) merged[comps[c][i]] = local[i];
        next.push_back(std::move(merged));
      }
    }
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end());
  return acc;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Stable:
      return "stable";
    case Verdict::StrictlySemistable:
      return "strictly_semistable";
    case Verdict::Unstable:
      return "unstable";
  }
  return "unknown";
}

NormalizedMultidegree normalize(const Multidegree& d, const CurveGraph& g) {
  require_vector_size(d.values.size(), g, "multidegree");
  NormalizedMultidegree e;
  e.values.resize(d.values.size());
  for (std::size_t i = 0; i < d.values.size(); ++i)
    e.values[i] = d.values[i] - (g.vertex(static_cast<int>(i)).genus - 1);
  return e;
}

Multidegree denormalize(const NormalizedMultidegree& e, const CurveGraph& g) {
  require_vector_size(e.values.size(), g, "normalized multidegree");
  Multidegree d;
  d.values.resize(e.values.size());
  for (std::size_t i = 0; i < e.values.size(); ++i)
    d.values[i] = e.values[i] + (g.vertex(static_cast<int>(i)).genus - 1);
  return d;
}

int Orientation::head(const CurveGraph& g, int e) const {
  const Edge& ed = g.edge(e);
  return ((backward >> e) & 1u) ? ed.first : ed.second;
}

int Orientation::tail(const CurveGraph& g, int e) const {
  const Edge& ed = g.edge(e);
  return ((backward >> e) & 1u) ? ed.second : ed.first;
}

std::vector<long long> Orientation::indegrees(const CurveGraph& g) const {
  std::vector<long long> deg(g.vertex_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    if ((edges >> e) & 1u) ++deg[head(g, e)];  // a loop adds one at its vertex
  }
  return deg;
}

Orientation Orientation::reversed(const CurveGraph& g) const {
  Orientation r{edges, 0};
  for (int e = 0; e < g.edge_count(); ++e) {
    if (((edges >> e) & 1u) && !g.edge(e).is_loop())
      r.backward |= (~backward >> e & 1u) << e;
  }
  return r;
}

Classification check_abs(const NormalizedMultidegree& e, const GeneratingSubgraph& sub,
                         int max_vertices) {
  const CurveGraph& g = *sub.graph;
  require_vector_size(e.values.size(), g, "normalized multidegree");
  require_sum_matches(e, sub);
  require_vertex_cap(g, max_vertices, "check_abs");
  // Condition: |e_D - edges(D) - cross/2| <= cross/2, doubled to stay in
  // integers; strict for stable.
  return scan_subcurves(sub, full_vertex_mask(g), [&](std::uint64_t d) {
    const CutStats s = cut_stats(e, sub, d);
    const long long lhs = std::llabs(2 * (s.e_d - s.internal) - s.crossing);
    if (lhs > s.crossing) return -1;
    return lhs == s.crossing ? 0 : 1;
  });
}

Classification check_abs(const NormalizedMultidegree& e, const CurveGraph& g, int max_vertices) {
  return check_abs(e, GeneratingSubgraph::full(g), max_vertices);
}

Classification check_edges(const NormalizedMultidegree& e, const GeneratingSubgraph& sub,
                           int max_vertices) {
  const CurveGraph& g = *sub.graph;
  require_vector_size(e.values.size(), g, "normalized multidegree");
  require_sum_matches(e, sub);
  require_vertex_cap(g, max_vertices, "check_edges");
  return scan_subcurves(sub, full_vertex_mask(g), [&](std::uint64_t d) {
    const CutStats s = cut_stats(e, sub, d);
    const long long slack = s.internal + s.crossing - s.e_d;
    if (slack < 0) return -1;
    return slack == 0 ? 0 : 1;
  });
}

Classification check_edges(const NormalizedMultidegree& e, const CurveGraph& g, int max_vertices) {
  return check_edges(e, GeneratingSubgraph::full(g), max_vertices);
}

Classification check_componentwise(const NormalizedMultidegree& e, const GeneratingSubgraph& sub) {
  const CurveGraph& g = *sub.graph;
  require_vector_size(e.values.size(), g, "normalized multidegree");
  require_sum_matches(e, sub);

  Classification out;
  for (const auto& comp : connected_components(sub)) {
    std::uint64_t comp_mask = 0;
    long long comp_sum = 0;
    for (int v : comp) {
      comp_mask |= std::uint64_t{1} << v;
      comp_sum += e.values[v];
    }
    long long comp_edges = 0;
    for (int ei = 0; ei < g.edge_count(); ++ei) {
      if (sub.keeps(ei) && ((comp_mask >> g.edge(ei).first) & 1u)) ++comp_edges;
    }
    if (comp_sum != comp_edges) return {Verdict::Unstable, comp_mask};
    const Classification local = scan_subcurves(sub, comp_mask, [&](std::uint64_t d) {
      const CutStats s = cut_stats(e, sub, d);
      const long long lhs = std::llabs(2 * (s.e_d - s.internal) - s.crossing);
      if (lhs > s.crossing) return -1;
      return lhs == s.crossing ? 0 : 1;
    });
    if (local.verdict == Verdict::Unstable) return local;
    if (local.verdict == Verdict::StrictlySemistable && out.verdict == Verdict::Stable) out = local;
  }
  return out;
}

std::optional<Orientation> realize_orientation(const NormalizedMultidegree& e,
                                               const GeneratingSubgraph& sub) {
  const CurveGraph& g = *sub.graph;
  require_vector_size(e.values.size(), g, "normalized multidegree");
  require_sum_matches(e, sub);

  const int v = g.vertex_count();
  std::vector<long long> demand(v, 0);
  std::vector<int> nonloop;
  for (int ei = 0; ei < g.edge_count(); ++ei) {
    if (!sub.keeps(ei)) continue;
    if (g.edge(ei).is_loop())
      --demand[g.edge(ei).first];  // loops are forced and use up indegree
    else
      nonloop.push_back(ei);
  }
  for (int i = 0; i < v; ++i) demand[i] += e.values[i];
  for (int i = 0; i < v; ++i) {
    if (demand[i] < 0) return std::nullopt;
  }

  // Unit-capacity flow: source -> edge node -> endpoint -> sink. Small
  // enough that plain BFS augmentation is fine and fully deterministic.
  const int m = static_cast<int>(nonloop.size());
  const int source = 0, sink = 1;
  const int edge_base = 2, vertex_base = 2 + m;
  const int nodes = 2 + m + v;
  struct Arc {
    int to;
    long long cap;
    int rev;
  };
  std::vector<std::vector<Arc>> net(nodes);
  const auto add_arc = [&net](int from, int to, long long cap) {
    net[from].push_back({to, cap, static_cast<int>(net[to].size())});
    net[to].push_back({from, 0, static_cast<int>(net[from].size()) - 1});
  };
  for (int i = 0; i < m; ++i) {
    const Edge& ed = g.edge(nonloop[i]);
    add_arc(source, edge_base + i, 1);
    add_arc(edge_base + i, vertex_base + ed.first, 1);
    add_arc(edge_base + i, vertex_base + ed.second, 1);
  }
  for (int i = 0; i < v; ++i) {
    if (demand[i] > 0) add_arc(vertex_base + i, sink, demand[i]);
  }

  long long flow = 0;
  while (true) {
    std::vector<std::pair<int, int>> parent(nodes, {-1, -1});  // (node, arc index)
    std::queue<int> q;
    q.push(source);
    parent[source] = {source, -1};
    while (!q.empty() && parent[sink].first < 0) {
      const int u = q.front();
      q.pop();
      for (std::size_t a = 0; a < net[u].size(); ++a) {
        const Arc& arc = net[u][a];
        if (arc.cap > 0 && parent[arc.to].first < 0) {
          parent[arc.to] = {u, static_cast<int>(a)};
          q.push(arc.to);
        }
      }
    }
    if (parent[sink].first < 0) break;
    for (int u = sink; u != source;) {
      const auto [p, a] = parent[u];
      net[p][a].cap -= 1;
      net[u][net[p][a].rev].cap += 1;
      u = p;
    }
    ++flow;
  }
  if (flow != m) return std::nullopt;

  Orientation o{sub.kept, 0};
  for (int i = 0; i < m; ++i) {
    const Edge& ed = g.edge(nonloop[i]);
    // The saturated endpoint arc tells us where the edge points.
    for (const Arc& arc : net[edge_base + i]) {
      if (arc.to >= vertex_base && arc.cap == 0) {
        const int head = arc.to - vertex_base;
        if (head == ed.first && !ed.is_loop()) o.backward |= std::uint64_t{1} << nonloop[i];
        break;
      }
    }
  }
  return o;
}

bool is_stable_orientation(const Orientation& o, const GeneratingSubgraph& sub, int max_vertices) {
  const CurveGraph& g = *sub.graph;
  require_vertex_cap(g, max_vertices, "is_stable_orientation");
  const int v = g.vertex_count();
  if (v <= 1) return true;  // no proper nonempty subcurve to cut
  const std::uint64_t all = full_vertex_mask(g);
  for (std::uint64_t d = 1; d < all; ++d) {
    int in = 0, out = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (!sub.keeps(e) || g.edge(e).is_loop()) continue;
      const bool head_in = (d >> o.head(g, e)) & 1u;
      const bool tail_in = (d >> o.tail(g, e)) & 1u;
      if (head_in == tail_in) continue;
      if (head_in)
        ++in;
      else
        ++out;
    }
    if (in == 0 || out == 0) return false;  // one-directional (or empty) cut
  }
  return true;
}

bool is_stable_orientation_componentwise(const Orientation& o, const GeneratingSubgraph& sub) {
  // Equivalent formulation: every kept edge lies on a directed cycle,
  // i.e. joins two vertices of the same strongly connected piece.
  const CurveGraph& g = *sub.graph;
  for (const auto& comp : connected_components(sub)) {
    std::vector<std::pair<int, int>> arcs;
    std::uint64_t comp_mask = 0;
    for (int v : comp) comp_mask |= std::uint64_t{1} << v;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (!sub.keeps(e) || g.edge(e).is_loop()) continue;
      if ((comp_mask >> g.edge(e).first) & 1u) arcs.push_back({o.tail(g, e), o.head(g, e)});
    }
    if (!strongly_connected(g, comp, arcs)) return false;
  }
  return true;
}

std::vector<std::vector<long long>> stable_multidegrees(const GeneratingSubgraph& sub) {
  if (sub.graph->vertex_count() == 0) return {std::vector<long long>{}};
  return stable_sets_product(sub, /*require_connected=*/true);
}

std::vector<std::vector<long long>> componentwise_stable_multidegrees(
    const GeneratingSubgraph& sub) {
  return stable_sets_product(sub, /*require_connected=*/false);
}

std::vector<std::vector<long long>> stable_multidegrees_by_filter(const GeneratingSubgraph& sub) {
  const CurveGraph& g = *sub.graph;
  const int v = g.vertex_count();
  if (v == 0) return {std::vector<long long>{}};

  std::vector<int> bound(v, 0);  // incidence inside the subgraph, loops once
  long long total = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!sub.keeps(e)) continue;
    ++total;
    const Edge& ed = g.edge(e);
    ++bound[ed.first];
    if (!ed.is_loop()) ++bound[ed.second];
  }

  std::vector<std::vector<long long>> out;
  std::vector<long long> e_vec(v, 0);
  const auto recurse = [&](auto&& self, int idx, long long remaining) -> void {
    if (idx == v - 1) {
      if (remaining < 0 || remaining > bound[idx]) return;
      e_vec[idx] = remaining;
      NormalizedMultidegree e{e_vec};
      if (check_abs(e, sub, 64).verdict == Verdict::Stable) out.push_back(e_vec);
      return;
    }
    for (long long x = 0; x <= bound[idx] && x <= remaining; ++x) {
      e_vec[idx] = x;
      self(self, idx + 1, remaining - x);
    }
  };
  recurse(recurse, 0, total);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace jacstrat
