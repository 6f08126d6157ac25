#ifndef EQL_QUIVER_HPP
#define EQL_QUIVER_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace eql {

// Directed multigraph (V, E, s, t).  Vertices and edges are referred to
// by their ids; ids are small non-negative integers chosen by the caller.
class Quiver {
 public:
  struct Edge {
    int id;
    int source;
    int target;
  };

  Quiver() = default;
  Quiver(std::vector<int> vertices, std::vector<Edge> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) vindex_[vertices_[i]] = i;
    for (const auto& e : edges_) {
      if (!vindex_.count(e.source) || !vindex_.count(e.target))
        throw std::invalid_argument("edge endpoint is not a vertex");
      if (eindex_.count(e.id)) throw std::invalid_argument("duplicate edge id");
      eindex_[e.id] = &e - edges_.data();
    }
  }

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(int v) const { return vindex_.count(v) != 0; }
  std::size_t vertex_index(int v) const {
    auto it = vindex_.find(v);
    if (it == vindex_.end()) throw std::invalid_argument("unknown vertex id " + std::to_string(v));
    return it->second;
  }
  const Edge& edge(int id) const {
    auto it = eindex_.find(id);
    if (it == eindex_.end()) throw std::invalid_argument("unknown edge id " + std::to_string(id));
    return edges_[it->second];
  }

  // E_{a,b}: edge ids from a to b, in id order.
  std::vector<int> edges_between(int a, int b) const {
    std::vector<int> out;
    for (const auto& e : edges_)
      if (e.source == a && e.target == b) out.push_back(e.id);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<int> edges_from(int a) const {
    std::vector<int> out;
    for (const auto& e : edges_)
      if (e.source == a) out.push_back(e.id);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<int> vertices_;
  std::vector<Edge> edges_;
  std::map<int, std::size_t> vindex_;
  std::map<int, std::size_t> eindex_;
};

// Dimension vector m_i >= 0 on the vertex set.
class DimVector {
 public:
  DimVector() = default;
  DimVector(const Quiver& q, std::map<int, int> entries) : entries_(std::move(entries)) {
    for (int v : q.vertices())
      if (!entries_.count(v)) throw std::invalid_argument("dimension vector misses a vertex");
    if (entries_.size() != q.vertices().size())
      throw std::invalid_argument("dimension vector has extra vertices");
    for (auto& [v, m] : entries_)
      if (m < 0) throw std::invalid_argument("negative dimension");
  }

  int at(int v) const { return entries_.at(v); }
  const std::map<int, int>& entries() const { return entries_; }
  int total() const {
    int t = 0;
    for (auto& [v, m] : entries_) t += m;
    return t;
  }
  bool is_zero() const { return total() == 0; }

 private:
  std::map<int, int> entries_;
};

// Composable edge word; the empty word is the trivial path at a vertex.
struct PathWord {
  std::vector<int> edges;   // edge ids, applied left to right along the path
  int trivial_vertex = -1;  // meaningful only when edges is empty

  static PathWord trivial(int v) { return PathWord{{}, v}; }
  static PathWord of(std::vector<int> es) { return PathWord{std::move(es), -1}; }

  std::size_t length() const { return edges.size(); }

  int source(const Quiver& q) const {
    return edges.empty() ? trivial_vertex : q.edge(edges.front()).source;
  }
  int target(const Quiver& q) const {
    return edges.empty() ? trivial_vertex : q.edge(edges.back()).target;
  }

  bool composable(const Quiver& q) const {
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
      if (q.edge(edges[i]).target != q.edge(edges[i + 1]).source) return false;
    return true;
  }

  // Global word order: length, then lexicographic on edge ids; trivial
  // paths ordered by vertex id.
  friend bool operator<(const PathWord& a, const PathWord& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    if (a.edges.empty()) return a.trivial_vertex < b.trivial_vertex;
    return a.edges < b.edges;
  }
  friend bool operator==(const PathWord& a, const PathWord& b) {
    if (a.edges.empty() != b.edges.empty()) return false;
    if (a.edges.empty()) return a.trivial_vertex == b.trivial_vertex;
    return a.edges == b.edges;
  }
};

// All composable words from a to b of length <= max_len, in the global
// word order.  Includes the trivial path iff a == b.
inline std::vector<PathWord> enumerate_paths(const Quiver& q, int a, int b, int max_len) {
  q.vertex_index(a);
  q.vertex_index(b);
  std::vector<PathWord> out;
  if (a == b && max_len >= 0) out.push_back(PathWord::trivial(a));
  // frontier of words ending at each vertex, extended edge by edge
  std::vector<std::pair<std::vector<int>, int>> frontier = {{{}, a}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::pair<std::vector<int>, int>> next;
    for (const auto& [word, end] : frontier) {
      for (int eid : q.edges_from(end)) {
        auto w = word;
        w.push_back(eid);
        next.push_back({std::move(w), q.edge(eid).target});
      }
    }
    for (const auto& [word, end] : next)
      if (end == b) out.push_back(PathWord::of(word));
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace eql

#endif
