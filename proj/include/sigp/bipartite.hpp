#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sigp {

enum class VertexClass { Row, Column };

inline VertexClass other_class(VertexClass c) {
  return c == VertexClass::Row ? VertexClass::Column : VertexClass::Row;
}

inline const char* to_string(VertexClass c) {
  return c == VertexClass::Row ? "row" : "column";
}

// A vertex carries its class: rows and columns are disjoint id spaces.
struct Vertex {
  VertexClass cls;
  int id;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex& a, const Vertex& b) {
    if (a.cls != b.cls) return a.cls <=> b.cls;
    return a.id <=> b.id;
  }
};

inline Vertex row_vertex(int id) { return Vertex{VertexClass::Row, id}; }
inline Vertex col_vertex(int id) { return Vertex{VertexClass::Column, id}; }

// Matrix coordinate (row id, column id); doubles as a bipartite edge.
using Edge = std::pair<int, int>;

// A finite set of matrix coordinates I, viewed as a bipartite graph on
// R ⊔ C. Immutable after construction; safe to share across threads.
class BipartiteSet {
 public:
  BipartiteSet() = default;

  // Builds the set of distinct pairs; vertex classes are the projections
  // plus any explicitly declared (possibly isolated) vertices.
  static BipartiteSet from_edge_list(const std::vector<Edge>& pairs,
                                     const std::vector<int>& declared_rows = {},
                                     const std::vector<int>& declared_cols = {}) {
    for (const auto& [r, c] : pairs) {
      if (r < 0 || c < 0)
        throw std::invalid_argument("bipartite: negative vertex id in edge (" +
                                    std::to_string(r) + ", " + std::to_string(c) + ")");
    }
    for (int r : declared_rows)
      if (r < 0) throw std::invalid_argument("bipartite: negative declared row id");
    for (int c : declared_cols)
      if (c < 0) throw std::invalid_argument("bipartite: negative declared column id");

    BipartiteSet g;
    g.edges_ = pairs;
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    g.rows_ = declared_rows;
    g.cols_ = declared_cols;
    for (const auto& [r, c] : g.edges_) {
      g.rows_.push_back(r);
      g.cols_.push_back(c);
    }
    sort_unique(g.rows_);
    sort_unique(g.cols_);
    g.build_adjacency();
    return g;
  }

  const std::vector<int>& rows() const { return rows_; }
  const std::vector<int>& cols() const { return cols_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  int max_row_id() const { return rows_.empty() ? -1 : rows_.back(); }
  int max_col_id() const { return cols_.empty() ? -1 : cols_.back(); }

  bool has_vertex(Vertex v) const {
    const auto& ids = v.cls == VertexClass::Row ? rows_ : cols_;
    return std::binary_search(ids.begin(), ids.end(), v.id);
  }

  bool has_edge(int r, int c) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge{r, c});
  }

  // Number of incident edges; unknown vertex is an error.
  std::size_t degree(Vertex v) const {
    int idx = index_of(v);
    if (idx < 0)
      throw std::invalid_argument(std::string("bipartite: unknown ") + to_string(v.cls) +
                                  " vertex " + std::to_string(v.id));
    return v.cls == VertexClass::Row ? row_adj_[idx].size() : col_adj_[idx].size();
  }

  // I' = I ∩ R'×C', with R'∪C' the declared vertex set of the result.
  BipartiteSet induced_subgraph(const std::vector<int>& sub_rows,
                                const std::vector<int>& sub_cols) const {
    for (int r : sub_rows)
      if (!has_vertex(row_vertex(r)))
        throw std::invalid_argument("bipartite: induced subgraph names unknown row " +
                                    std::to_string(r));
    for (int c : sub_cols)
      if (!has_vertex(col_vertex(c)))
        throw std::invalid_argument("bipartite: induced subgraph names unknown column " +
                                    std::to_string(c));
    std::vector<int> rs = sub_rows, cs = sub_cols;
    sort_unique(rs);
    sort_unique(cs);
    std::vector<Edge> kept;
    for (const auto& [r, c] : edges_)
      if (std::binary_search(rs.begin(), rs.end(), r) &&
          std::binary_search(cs.begin(), cs.end(), c))
        kept.push_back({r, c});
    return from_edge_list(kept, rs, cs);
  }

  // The transposed set I* = {(c, r) : (r, c) ∈ I}.
  BipartiteSet transposed() const {
    std::vector<Edge> flipped;
    flipped.reserve(edges_.size());
    for (const auto& [r, c] : edges_) flipped.push_back({c, r});
    return from_edge_list(flipped, cols_, rows_);
  }

  friend bool operator==(const BipartiteSet& a, const BipartiteSet& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.edges_ == b.edges_;
  }

  // --- dense-index view used by the trail search ---------------------------

  // Position of v's id within its class (or -1).
  int index_of(Vertex v) const {
    const auto& ids = v.cls == VertexClass::Row ? rows_ : cols_;
    auto it = std::lower_bound(ids.begin(), ids.end(), v.id);
    if (it == ids.end() || *it != v.id) return -1;
    return static_cast<int>(it - ids.begin());
  }

  Vertex vertex_at(VertexClass cls, int index) const {
    const auto& ids = cls == VertexClass::Row ? rows_ : cols_;
    return Vertex{cls, ids[static_cast<std::size_t>(index)]};
  }

  struct Arc {
    int to;        // dense index of the opposite endpoint
    int edge;      // index into edges()
  };

  // Arcs leaving the index-th vertex of the given class, ordered by the
  // opposite endpoint's id.
  const std::vector<Arc>& arcs(VertexClass cls, int index) const {
    return cls == VertexClass::Row ? row_adj_[static_cast<std::size_t>(index)]
                                   : col_adj_[static_cast<std::size_t>(index)];
  }

 private:
  static void sort_unique(std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  void build_adjacency() {
    row_adj_.assign(rows_.size(), {});
    col_adj_.assign(cols_.size(), {});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      int ri = index_of(row_vertex(edges_[e].first));
      int ci = index_of(col_vertex(edges_[e].second));
      row_adj_[static_cast<std::size_t>(ri)].push_back({ci, static_cast<int>(e)});
      col_adj_[static_cast<std::size_t>(ci)].push_back({ri, static_cast<int>(e)});
    }
    auto by_target = [](const Arc& a, const Arc& b) { return a.to < b.to; };
    for (auto& l : row_adj_) std::sort(l.begin(), l.end(), by_target);
    for (auto& l : col_adj_) std::sort(l.begin(), l.end(), by_target);
  }

  std::vector<int> rows_;
  std::vector<int> cols_;
  std::vector<Edge> edges_;  // sorted, unique
  std::vector<std::vector<Arc>> row_adj_;
  std::vector<std::vector<Arc>> col_adj_;
};

}  // namespace sigp
