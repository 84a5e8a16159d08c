#include "wrzero/model.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace wrzero {

bool vertex_less(const Vertex& a, const Vertex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = a.size() - 1; i >= 0; --i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return false;
}

bool vertex_eq(const Vertex& a, const Vertex& b) {
  return a.size() == b.size() && a == b;
}

std::string monomial_name(const Vertex& y) {
  std::string out;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (y(i) == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(i + 1);
    if (y(i) > 1) out += "^" + std::to_string(y(i));
  }
  return out.empty() ? "1" : out;
}

PolySystem make_poly_system(int n, std::vector<Vertex> sources, RatMatrix net) {
  if (n <= 0) throw std::invalid_argument("system needs at least one variable");
  const size_t m = sources.size();
  if (m == 0) throw std::invalid_argument("system needs at least one monomial");
  if (net.rows() != n || static_cast<size_t>(net.cols()) != m) {
    throw std::invalid_argument("net direction matrix has wrong shape");
  }
  for (const Vertex& y : sources) {
    if (y.size() != n) throw std::invalid_argument("exponent vector has wrong length");
    if ((y.array() < 0).any()) throw std::invalid_argument("negative exponent");
  }

  std::vector<size_t> order(m);
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return vertex_less(sources[a], sources[b]); });

  PolySystem sys;
  sys.n = n;
  sys.net.resize(n, static_cast<Eigen::Index>(m));
  for (size_t k = 0; k < m; ++k) {
    sys.sources.push_back(sources[order[k]]);
    sys.net.col(static_cast<Eigen::Index>(k)) = net.col(static_cast<Eigen::Index>(order[k]));
  }
  for (size_t k = 0; k + 1 < m; ++k) {
    if (vertex_eq(sys.sources[k], sys.sources[k + 1])) {
      throw std::invalid_argument("duplicate monomial " + monomial_name(sys.sources[k]));
    }
  }
  for (Eigen::Index c = 0; c < sys.net.cols(); ++c) {
    bool nonzero = false;
    for (Eigen::Index r = 0; r < n; ++r) nonzero |= sys.net(r, c) != 0;
    if (!nonzero) {
      throw std::invalid_argument("zero net direction for " + monomial_name(sys.sources[c]));
    }
  }
  return sys;
}

bool operator==(const PolySystem& a, const PolySystem& b) {
  if (a.n != b.n || a.sources.size() != b.sources.size()) return false;
  for (size_t i = 0; i < a.sources.size(); ++i) {
    if (!vertex_eq(a.sources[i], b.sources[i])) return false;
  }
  return a.net == b.net;
}

WeightedEGraph make_graph(int n, std::vector<Vertex> vertices, std::vector<Edge> edges) {
  if (n <= 0) throw std::invalid_argument("graph needs at least one dimension");
  const size_t v = vertices.size();
  for (const Vertex& y : vertices) {
    if (y.size() != n) throw std::invalid_argument("vertex has wrong length");
    if ((y.array() < 0).any()) throw std::invalid_argument("negative vertex coordinate");
  }

  std::vector<int> order(v);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return vertex_less(vertices[a], vertices[b]); });
  std::vector<int> position(v);
  for (size_t k = 0; k < v; ++k) position[order[k]] = static_cast<int>(k);

  WeightedEGraph g;
  g.n = n;
  for (size_t k = 0; k < v; ++k) g.vertices.push_back(vertices[order[k]]);
  for (size_t k = 0; k + 1 < v; ++k) {
    if (vertex_eq(g.vertices[k], g.vertices[k + 1])) {
      throw std::invalid_argument("duplicate vertex " + monomial_name(g.vertices[k]));
    }
  }

  for (Edge e : edges) {
    if (e.from < 0 || e.to < 0 || static_cast<size_t>(e.from) >= v ||
        static_cast<size_t>(e.to) >= v) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    e.from = position[e.from];
    e.to = position[e.to];
    if (e.from == e.to) throw std::invalid_argument("self-loop");
    if (e.kappa <= 0) throw std::invalid_argument("edge weight must be positive");
    g.edges.push_back(e);
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.from, a.to) < std::pair(b.from, b.to);
  });
  for (size_t k = 0; k + 1 < g.edges.size(); ++k) {
    if (g.edges[k].from == g.edges[k + 1].from && g.edges[k].to == g.edges[k + 1].to) {
      throw std::invalid_argument("parallel edge");
    }
  }

  std::vector<bool> touched(v, false);
  for (const Edge& e : g.edges) touched[e.from] = touched[e.to] = true;
  for (size_t k = 0; k < v; ++k) {
    if (!touched[k]) {
      throw std::invalid_argument("isolated vertex " + monomial_name(g.vertices[k]));
    }
  }
  return g;
}

bool operator==(const WeightedEGraph& a, const WeightedEGraph& b) {
  if (a.n != b.n || a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size()) {
    return false;
  }
  for (size_t i = 0; i < a.vertices.size(); ++i) {
    if (!vertex_eq(a.vertices[i], b.vertices[i])) return false;
  }
  for (size_t i = 0; i < a.edges.size(); ++i) {
    if (a.edges[i].from != b.edges[i].from || a.edges[i].to != b.edges[i].to ||
        a.edges[i].kappa != b.edges[i].kappa) {
      return false;
    }
  }
  return true;
}

PolySystem associated_system(const WeightedEGraph& g) {
  std::vector<Vertex> sources;
  std::vector<RatVector> columns;
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    RatVector w = RatVector::Zero(g.n);
    bool is_source = false;
    for (const Edge& e : g.edges) {
      if (e.from != static_cast<int>(i)) continue;
      is_source = true;
      w += e.kappa * (to_rational(g.vertices[e.to]) - to_rational(g.vertices[i]));
    }
    if (!is_source) continue;
    bool nonzero = false;
    for (Eigen::Index r = 0; r < w.size(); ++r) nonzero |= w(r) != 0;
    if (!nonzero) continue;  // balanced outflow contributes no monomial
    sources.push_back(g.vertices[i]);
    columns.push_back(w);
  }
  if (sources.empty()) throw std::invalid_argument("graph generates the zero system");
  RatMatrix net(g.n, static_cast<Eigen::Index>(columns.size()));
  for (size_t c = 0; c < columns.size(); ++c) net.col(static_cast<Eigen::Index>(c)) = columns[c];
  return make_poly_system(g.n, std::move(sources), std::move(net));
}

bool dynamically_equivalent(const WeightedEGraph& a, const WeightedEGraph& b) {
  if (a.n != b.n) return false;
  auto net_map = [](const WeightedEGraph& g) {
    std::map<std::vector<int>, RatVector> net;
    for (size_t i = 0; i < g.vertices.size(); ++i) {
      RatVector w = RatVector::Zero(g.n);
      bool is_source = false;
      for (const Edge& e : g.edges) {
        if (e.from != static_cast<int>(i)) continue;
        is_source = true;
        w += e.kappa * (to_rational(g.vertices[e.to]) - to_rational(g.vertices[i]));
      }
      if (!is_source) continue;
      std::vector<int> key(g.vertices[i].data(), g.vertices[i].data() + g.n);
      net.emplace(std::move(key), std::move(w));
    }
    return net;
  };
  const auto na = net_map(a);
  const auto nb = net_map(b);
  const RatVector zero = RatVector::Zero(a.n);
  auto value = [&](const std::map<std::vector<int>, RatVector>& m,
                   const std::vector<int>& key) -> const RatVector& {
    auto it = m.find(key);
    return it == m.end() ? zero : it->second;
  };
  for (const auto& [key, w] : na) {
    if (w != value(nb, key)) return false;
  }
  for (const auto& [key, w] : nb) {
    if (w != value(na, key)) return false;
  }
  return true;
}

namespace {

ComponentPartition canonical_partition(std::vector<std::vector<int>> blocks) {
  for (auto& block : blocks) std::sort(block.begin(), block.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  return blocks;
}

// Tarjan's algorithm; SCC ids are later re-indexed via canonical_partition.
struct TarjanState {
  std::vector<std::vector<int>> adj;
  std::vector<int> index, low, scc_id;
  std::vector<bool> on_stack;
  std::vector<int> stack;
  int counter = 0;
  int sccs = 0;

  explicit TarjanState(std::vector<std::vector<int>> adjacency)
      : adj(std::move(adjacency)),
        index(adj.size(), -1),
        low(adj.size(), 0),
        scc_id(adj.size(), -1),
        on_stack(adj.size(), false) {}

  void visit(int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w : adj[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      while (true) {
        int w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        scc_id[w] = sccs;
        if (w == v) break;
      }
      ++sccs;
    }
  }
};

std::vector<std::vector<int>> adjacency(const WeightedEGraph& g) {
  std::vector<std::vector<int>> adj(g.vertices.size());
  for (const Edge& e : g.edges) adj[e.from].push_back(e.to);
  return adj;
}

}  // namespace

ComponentPartition connected_components(const WeightedEGraph& g) {
  const int v = static_cast<int>(g.vertices.size());
  std::vector<int> parent(v);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const Edge& e : g.edges) parent[find(e.from)] = find(e.to);

  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < v; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> blocks;
  for (auto& [root, members] : groups) blocks.push_back(std::move(members));
  return canonical_partition(std::move(blocks));
}

ComponentPartition strongly_connected_components(const WeightedEGraph& g) {
  TarjanState tarjan(adjacency(g));
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    if (tarjan.index[v] < 0) tarjan.visit(static_cast<int>(v));
  }
  std::vector<std::vector<int>> blocks(tarjan.sccs);
  for (size_t v = 0; v < g.vertices.size(); ++v) blocks[tarjan.scc_id[v]].push_back(static_cast<int>(v));
  return canonical_partition(std::move(blocks));
}

bool is_weakly_reversible(const WeightedEGraph& g) {
  TarjanState tarjan(adjacency(g));
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    if (tarjan.index[v] < 0) tarjan.visit(static_cast<int>(v));
  }
  for (const Edge& e : g.edges) {
    if (tarjan.scc_id[e.from] != tarjan.scc_id[e.to]) return false;
  }
  return true;
}

ComponentPartition terminal_sccs(const WeightedEGraph& g) {
  const ComponentPartition sccs = strongly_connected_components(g);
  std::vector<int> scc_of(g.vertices.size());
  for (size_t s = 0; s < sccs.size(); ++s) {
    for (int v : sccs[s]) scc_of[v] = static_cast<int>(s);
  }
  std::vector<bool> terminal(sccs.size(), true);
  for (const Edge& e : g.edges) {
    if (scc_of[e.from] != scc_of[e.to]) terminal[scc_of[e.from]] = false;
  }
  ComponentPartition result;
  for (size_t s = 0; s < sccs.size(); ++s) {
    if (terminal[s]) result.push_back(sccs[s]);
  }
  return result;  // already ordered by smallest member
}

DeficiencyInfo deficiency(const WeightedEGraph& g) {
  DeficiencyInfo info;
  const ComponentPartition components = connected_components(g);

  RatMatrix edge_vectors(g.n, static_cast<Eigen::Index>(g.edges.size()));
  for (size_t k = 0; k < g.edges.size(); ++k) {
    edge_vectors.col(static_cast<Eigen::Index>(k)) =
        to_rational(g.vertices[g.edges[k].to]) - to_rational(g.vertices[g.edges[k].from]);
  }
  info.total = static_cast<int>(g.vertices.size()) - static_cast<int>(components.size()) -
               static_cast<int>(rank(edge_vectors));

  for (const std::vector<int>& block : components) {
    RatMatrix diffs(g.n, static_cast<Eigen::Index>(block.size()) - 1);
    for (size_t k = 1; k < block.size(); ++k) {
      diffs.col(static_cast<Eigen::Index>(k - 1)) =
          to_rational(g.vertices[block[k]]) - to_rational(g.vertices[block[0]]);
    }
    info.per_component.push_back(static_cast<int>(block.size()) - 1 -
                                 static_cast<int>(rank(diffs)));
  }
  return info;
}

RatMatrix kirchhoff_matrix(const WeightedEGraph& g) {
  const Eigen::Index v = static_cast<Eigen::Index>(g.vertices.size());
  RatMatrix a = RatMatrix::Zero(v, v);
  for (const Edge& e : g.edges) {
    a(e.to, e.from) += e.kappa;
    a(e.from, e.from) -= e.kappa;
  }
  return a;
}

std::vector<RatVector> kirchhoff_kernel(const WeightedEGraph& g) {
  const RatMatrix a = kirchhoff_matrix(g);
  const ComponentPartition terminals = terminal_sccs(g);
  const Eigen::Index v = a.rows();

  std::vector<RatVector> basis;
  for (const std::vector<int>& block : terminals) {
    const Eigen::Index s = static_cast<Eigen::Index>(block.size());
    RatMatrix sub(s, s);
    for (Eigen::Index r = 0; r < s; ++r)
      for (Eigen::Index c = 0; c < s; ++c) sub(r, c) = a(block[r], block[c]);
    const std::vector<RatVector> sub_kernel = kernel_basis(sub);
    if (sub_kernel.size() != 1) throw std::logic_error("kernel support mismatch");

    RatVector lifted = RatVector::Zero(v);
    for (Eigen::Index r = 0; r < s; ++r) lifted(block[r]) = sub_kernel[0](r);
    // Verify support positivity and membership in the full kernel.
    for (Eigen::Index r = 0; r < s; ++r) {
      if (lifted(block[r]) <= 0) throw std::logic_error("kernel support mismatch");
    }
    RatVector product = a * lifted;
    for (Eigen::Index r = 0; r < v; ++r) {
      if (product(r) != 0) throw std::logic_error("kernel support mismatch");
    }
    basis.push_back(std::move(lifted));
  }

  if (static_cast<Eigen::Index>(basis.size()) != v - rank(a)) {
    throw std::logic_error("kernel support mismatch");
  }
  return basis;
}

double eval_monomial(const Vertex& y, const Eigen::VectorXd& x) {
  double value = 1.0;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    for (int e = 0; e < y(i); ++e) value *= x(i);
  }
  return value;
}

Eigen::VectorXd eval_rhs(const PolySystem& sys, const Eigen::VectorXd& x) {
  const Eigen::MatrixXd net = to_double(sys.net);
  Eigen::VectorXd monomials(static_cast<Eigen::Index>(sys.sources.size()));
  for (size_t i = 0; i < sys.sources.size(); ++i) {
    monomials(static_cast<Eigen::Index>(i)) = eval_monomial(sys.sources[i], x);
  }
  return net * monomials;
}

}  // namespace wrzero
