#include "symdyn/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "symdyn/error.hpp"

namespace symdyn {

std::size_t Graph::add_vertex(std::string name) {
  vertices_.push_back(std::move(name));
  return vertices_.size() - 1;
}

std::size_t Graph::add_edge(std::size_t from, std::size_t to, Symbol label) {
  if (from >= vertices_.size() || to >= vertices_.size()) throw InputError("edge endpoint out of range");
  edges_.push_back({next_edge_id_, from, to, std::move(label)});
  return next_edge_id_++;
}

std::optional<std::size_t> Graph::find_vertex(const std::string& name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool Graph::labeled() const {
  return !edges_.empty() && std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return !e.label.empty(); });
}

Graph Graph::induced(const std::vector<std::size_t>& keep) const {
  std::vector<std::size_t> map(vertices_.size(), SIZE_MAX);
  Graph out;
  for (std::size_t v : keep) map[v] = out.add_vertex(vertices_[v]);
  for (const auto& e : edges_) {
    if (map[e.from] == SIZE_MAX || map[e.to] == SIZE_MAX) continue;
    out.edges_.push_back({e.id, map[e.from], map[e.to], e.label});
  }
  out.next_edge_id_ = next_edge_id_;
  return out;
}

std::vector<std::vector<std::size_t>> Graph::out_edges() const {
  std::vector<std::vector<std::size_t>> out(vertices_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) out[edges_[i].from].push_back(i);
  return out;
}

std::vector<std::vector<std::size_t>> Graph::in_edges() const {
  std::vector<std::vector<std::size_t>> in(vertices_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) in[edges_[i].to].push_back(i);
  return in;
}

IntMatrix adjacency(const Graph& g) {
  IntMatrix a(g.vertex_count(), g.vertex_count());
  for (const auto& e : g.edges()) a(e.from, e.to) += 1;
  return a;
}

Graph graph_from_adjacency(const IntMatrix& a) {
  if (!a.is_square()) throw InputError("adjacency matrix must be square");
  if (!a.is_nonnegative()) throw InputError("adjacency matrix must be nonnegative");
  Graph g;
  for (std::size_t i = 0; i < a.rows(); ++i) g.add_vertex("V" + std::to_string(i + 1));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).fits_ulong_p()) throw InputError("adjacency entry too large for a graph");
      for (unsigned long k = 0; k < a(i, j).get_ui(); ++k) g.add_edge(i, j);
    }
  return g;
}

Graph essentialize(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> indeg(n, 0), outdeg(n, 0);
  for (const auto& e : g.edges()) {
    ++outdeg[e.from];
    ++indeg[e.to];
  }
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0 || outdeg[v] == 0) {
      alive[v] = false;
      stack.push_back(v);
    }
  auto outs = g.out_edges();
  auto ins = g.in_edges();
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t ei : outs[v]) {
      std::size_t w = g.edges()[ei].to;
      if (alive[w] && --indeg[w] == 0) {
        alive[w] = false;
        stack.push_back(w);
      }
    }
    for (std::size_t ei : ins[v]) {
      std::size_t u = g.edges()[ei].from;
      if (alive[u] && --outdeg[u] == 0) {
        alive[u] = false;
        stack.push_back(u);
      }
    }
  }
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < n; ++v)
    if (alive[v]) keep.push_back(v);
  return g.induced(keep);
}

std::vector<std::size_t> scc_index(const Graph& g) {
  // Iterative Tarjan.
  const std::size_t n = g.vertex_count();
  auto outs = g.out_edges();
  std::vector<std::size_t> index(n, SIZE_MAX), low(n, 0), comp(n, SIZE_MAX);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t counter = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != SIZE_MAX) continue;
    std::vector<std::pair<std::size_t, std::size_t>> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      if (pos < outs[v].size()) {
        std::size_t w = g.edges()[outs[v][pos++]].to;
        if (index[w] == SIZE_MAX) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      std::size_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        std::vector<std::size_t> members;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          members.push_back(w);
        } while (w != done);
        components.push_back(std::move(members));
      }
    }
  }
  std::sort(components.begin(), components.end(), [](const auto& a, const auto& b) {
    return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
  });
  for (std::size_t c = 0; c < components.size(); ++c)
    for (std::size_t v : components[c]) comp[v] = c;
  return comp;
}

std::vector<Graph> scc_decompose(const Graph& g) {
  auto comp = scc_index(g);
  std::size_t count = 0;
  for (std::size_t c : comp) count = std::max(count, c + 1);
  std::vector<std::vector<std::size_t>> members(count);
  for (std::size_t v = 0; v < comp.size(); ++v) members[comp[v]].push_back(v);
  std::vector<bool> has_edge(count, false);
  for (const auto& e : g.edges())
    if (comp[e.from] == comp[e.to]) has_edge[comp[e.from]] = true;
  std::vector<Graph> out;
  for (std::size_t c = 0; c < count; ++c)
    if (has_edge[c]) out.push_back(g.induced(members[c]));
  return out;
}

bool is_strongly_connected(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  auto comp = scc_index(g);
  return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

bool is_irreducible(const Graph& g) {
  Graph e = essentialize(g);
  return e.edge_count() > 0 && is_strongly_connected(e);
}

bool is_right_resolving(const Graph& g) {
  std::set<std::pair<std::size_t, Symbol>> seen;
  for (const auto& e : g.edges())
    if (!seen.emplace(e.from, e.label).second) return false;
  return true;
}

}  // namespace symdyn
