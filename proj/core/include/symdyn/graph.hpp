#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "symdyn/int_matrix.hpp"
#include "symdyn/word.hpp"

namespace symdyn {

struct Edge {
  std::size_t id = 0;
  std::size_t from = 0;
  std::size_t to = 0;
  Symbol label;  // empty for unlabeled graphs
};

// Finite directed multigraph. Edge ids are assigned in construction order and
// survive trimming; vertex indices are positions in `vertices`.
class Graph {
 public:
  std::size_t add_vertex(std::string name);
  std::size_t add_edge(std::size_t from, std::size_t to, Symbol label = {});

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<std::size_t> find_vertex(const std::string& name) const;
  bool labeled() const;

  // Subgraph on the given vertices (in the given order), keeping edge ids.
  Graph induced(const std::vector<std::size_t>& keep) const;

  std::vector<std::vector<std::size_t>> out_edges() const;
  std::vector<std::vector<std::size_t>> in_edges() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::size_t next_edge_id_ = 0;
};

using DirectedGraph = Graph;
using LabeledGraph = Graph;

IntMatrix adjacency(const Graph& g);
Graph graph_from_adjacency(const IntMatrix& a);

// Removes stranded vertices until every vertex has in- and out-edges.
Graph essentialize(const Graph& g);

// Component index per vertex, numbered by smallest member vertex.
std::vector<std::size_t> scc_index(const Graph& g);
// Components that carry at least one edge, ordered by smallest vertex index.
std::vector<Graph> scc_decompose(const Graph& g);

bool is_strongly_connected(const Graph& g);
// Essential part non-empty and strongly connected.
bool is_irreducible(const Graph& g);
bool is_right_resolving(const Graph& g);

}  // namespace symdyn
