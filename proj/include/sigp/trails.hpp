#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sigp/bipartite.hpp"
#include "sigp/parallel.hpp"

namespace sigp {

// Thrown when a trail search exceeds its node-expansion budget.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(std::uint64_t cap)
      : std::runtime_error("trail search exceeded the expansion cap of " +
                           std::to_string(cap)) {}
};

inline constexpr std::uint64_t kDefaultExpansionCap = 100'000'000;

// Walk along pairwise-distinct edges; vertices may repeat. Classes alternate.
struct Trail {
  VertexClass start_class;
  std::vector<int> vertices;  // ids; vertices[i] lies in class parity(i)

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }

  VertexClass class_at(std::size_t i) const {
    return i % 2 == 0 ? start_class : other_class(start_class);
  }

  Vertex vertex_at(std::size_t i) const { return Vertex{class_at(i), vertices[i]}; }

  friend bool operator==(const Trail&, const Trail&) = default;
};

// c_s / r_s over all admissible endpoint pairs; only nonzero counts are kept.
struct RudinReport {
  int s = 0;
  VertexClass start_class = VertexClass::Column;
  std::map<std::pair<int, int>, std::uint64_t> counts;  // (v0 id, vs id) -> count
  std::uint64_t sup = 0;
  std::optional<std::pair<int, int>> witness;
};

namespace detail {

// Depth-first search over unused edges from v0; calls sink(terminal dense
// index, path) at depth s. Charges one expansion per arc considered.
template <typename Sink>
void trail_dfs(const BipartiteSet& g, VertexClass start, int v0_index, int s,
               std::atomic<std::uint64_t>& expansions, std::uint64_t cap,
               Sink&& sink) {
  std::vector<char> used(g.edge_count(), 0);
  std::vector<int> path;   // dense indices, alternating classes
  path.reserve(static_cast<std::size_t>(s) + 1);
  path.push_back(v0_index);

  auto step = [&](auto&& self, VertexClass cls, int at, int depth) -> void {
    if (depth == s) {
      sink(at, path);
      return;
    }
    for (const auto& arc : g.arcs(cls, at)) {
      if (expansions.fetch_add(1, std::memory_order_relaxed) + 1 > cap)
        throw ResourceLimitError(cap);
      if (used[static_cast<std::size_t>(arc.edge)]) continue;
      used[static_cast<std::size_t>(arc.edge)] = 1;
      path.push_back(arc.to);
      self(self, other_class(cls), arc.to, depth + 1);
      path.pop_back();
      used[static_cast<std::size_t>(arc.edge)] = 0;
    }
  };
  step(step, start, v0_index, 0);
}

inline VertexClass terminal_class(VertexClass start, int s) {
  return s % 2 == 0 ? start : other_class(start);
}

inline void check_trail_args(Vertex v0, int s, VertexClass start) {
  if (s < 1) throw std::invalid_argument("trails: length must be >= 1");
  if (v0.cls != start)
    throw std::invalid_argument(std::string("trails: v0 is a ") + to_string(v0.cls) +
                                " vertex but the search starts in the " +
                                to_string(start) + " class");
}

}  // namespace detail

// Exact number of length-s trails from v0 to vs (Rudin number c_s or r_s
// according to start_class). A vs whose class disagrees with the parity of s
// yields 0; a v0 outside start_class is an error.
inline std::uint64_t count_trails(const BipartiteSet& g, Vertex v0, Vertex vs, int s,
                                  VertexClass start_class,
                                  std::uint64_t cap = kDefaultExpansionCap) {
  detail::check_trail_args(v0, s, start_class);
  if (vs.cls != detail::terminal_class(start_class, s)) return 0;
  int from = g.index_of(v0);
  int to = g.index_of(vs);
  if (from < 0 || to < 0) return 0;
  std::uint64_t count = 0;
  std::atomic<std::uint64_t> expansions{0};
  detail::trail_dfs(g, start_class, from, s, expansions, cap,
                    [&](int terminal, const std::vector<int>&) {
                      if (terminal == to) ++count;
                    });
  return count;
}

// Same search returning the witnesses themselves.
inline std::vector<Trail> enumerate_trails(const BipartiteSet& g, Vertex v0, Vertex vs,
                                           int s, VertexClass start_class,
                                           std::uint64_t cap = kDefaultExpansionCap) {
  detail::check_trail_args(v0, s, start_class);
  std::vector<Trail> out;
  if (vs.cls != detail::terminal_class(start_class, s)) return out;
  int from = g.index_of(v0);
  int to = g.index_of(vs);
  if (from < 0 || to < 0) return out;
  std::atomic<std::uint64_t> expansions{0};
  detail::trail_dfs(g, start_class, from, s, expansions, cap,
                    [&](int terminal, const std::vector<int>& path) {
                      if (terminal != to) return;
                      Trail t{start_class, {}};
                      t.vertices.reserve(path.size());
                      for (std::size_t i = 0; i < path.size(); ++i)
                        t.vertices.push_back(g.vertex_at(t.class_at(i), path[i]).id);
                      out.push_back(std::move(t));
                    });
  return out;
}

// Rudin numbers over every admissible (v0, vs) pair, their supremum and an
// argmax witness (lexicographically smallest on ties). v0 pairs may be
// evaluated in parallel; the merge is order-independent.
inline RudinReport rudin_sup(const BipartiteSet& g, int s, VertexClass start_class,
                             int workers = 1,
                             std::uint64_t cap = kDefaultExpansionCap) {
  if (s < 1) throw std::invalid_argument("trails: length must be >= 1");
  RudinReport report;
  report.s = s;
  report.start_class = start_class;

  const auto& starts = start_class == VertexClass::Row ? g.rows() : g.cols();
  VertexClass end_class = detail::terminal_class(start_class, s);
  std::atomic<std::uint64_t> expansions{0};

  std::vector<std::map<int, std::uint64_t>> per_start(starts.size());
  parallel_for_index(starts.size(), workers, [&](std::size_t i) {
    int from = g.index_of(Vertex{start_class, starts[i]});
    detail::trail_dfs(g, start_class, from, s, expansions, cap,
                      [&](int terminal, const std::vector<int>&) {
                        ++per_start[i][g.vertex_at(end_class, terminal).id];
                      });
  });

  // Keys arrive in increasing lexicographic order, so the first count that
  // strictly beats the running sup is the tie-broken witness.
  for (std::size_t i = 0; i < starts.size(); ++i) {
    for (const auto& [vs_id, count] : per_start[i]) {
      std::pair<int, int> key{starts[i], vs_id};
      report.counts[key] = count;
      if (count > report.sup) {
        report.sup = count;
        report.witness = key;
      }
    }
  }
  return report;
}

// Closed trail on p pairwise-distinct edges, if any. The search anchors each
// candidate at its lexicographically smallest participating vertex, so a
// given graph always yields the same witness. p must be even and >= 4.
inline std::optional<std::vector<Vertex>> find_circuit(
    const BipartiteSet& g, int p, std::uint64_t cap = kDefaultExpansionCap) {
  if (p % 2 != 0 || p < 4)
    throw std::invalid_argument("circuits: length must be even and >= 4");

  std::vector<Vertex> anchors;
  for (int r : g.rows()) anchors.push_back(row_vertex(r));
  for (int c : g.cols()) anchors.push_back(col_vertex(c));
  std::sort(anchors.begin(), anchors.end());

  std::vector<char> used(g.edge_count(), 0);
  std::atomic<std::uint64_t> expansions{0};
  std::vector<Vertex> path;

  for (Vertex anchor : anchors) {
    if (g.degree(anchor) < 2) continue;
    int a_index = g.index_of(anchor);
    path.assign(1, anchor);
    bool found = false;

    auto step = [&](auto&& self, VertexClass cls, int at, int depth) -> bool {
      for (const auto& arc : g.arcs(cls, at)) {
        if (expansions.fetch_add(1, std::memory_order_relaxed) + 1 > cap)
          throw ResourceLimitError(cap);
        if (used[static_cast<std::size_t>(arc.edge)]) continue;
        Vertex next = g.vertex_at(other_class(cls), arc.to);
        if (next < anchor) continue;  // anchor is the minimum of the circuit
        if (depth + 1 == p) {
          if (arc.to != a_index) continue;
          path.push_back(next);
          return true;
        }
        used[static_cast<std::size_t>(arc.edge)] = 1;
        path.push_back(next);
        if (self(self, other_class(cls), arc.to, depth + 1)) return true;
        path.pop_back();
        used[static_cast<std::size_t>(arc.edge)] = 0;
      }
      return false;
    };
    found = step(step, anchor.cls, a_index, 0);
    if (found) return path;
  }
  return std::nullopt;
}

inline bool has_circuit(const BipartiteSet& g, int p,
                        std::uint64_t cap = kDefaultExpansionCap) {
  return find_circuit(g, p, cap).has_value();
}

}  // namespace sigp
