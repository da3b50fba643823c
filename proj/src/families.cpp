#include "ngeta/families.hpp"

#include <charconv>

#include "ngeta/error.hpp"

namespace ngeta {

namespace {

struct FamilyName {
  std::string_view name;
  Family family;
  std::size_t arity;
};

constexpr FamilyName kNames[] = {
    {"star", Family::star, 1},         {"s", Family::star, 1},
    {"complete", Family::complete, 1}, {"k", Family::complete, 1},
    {"path", Family::path, 1},         {"p", Family::path, 1},
    {"cycle", Family::cycle, 1},       {"c", Family::cycle, 1},
    {"double_star", Family::double_star, 2},
    {"r_graph", Family::r_graph, 2},   {"r", Family::r_graph, 2},
    {"u_graph", Family::u_graph, 1},   {"u", Family::u_graph, 1},
};

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::invalid_parameter, what); }

void require(bool ok, const FamilySpec& spec, std::string_view range) {
  if (!ok) invalid(spec.to_string() + ": parameters must satisfy " + std::string(range));
}

using Edges = std::vector<std::pair<Vertex, Vertex>>;

void add_clique(Edges& es, int first, int count) {
  for (int i = first; i < first + count; ++i) {
    for (int j = i + 1; j < first + count; ++j) es.emplace_back(i, j);
  }
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) invalid("family spec '" + std::string(text) + "' lacks ':'");
  const auto name = text.substr(0, colon);
  const FamilyName* found = nullptr;
  for (const auto& entry : kNames) {
    if (entry.name == name) found = &entry;
  }
  if (!found) invalid("unknown family '" + std::string(name) + "'");

  FamilySpec spec{found->family, {}};
  auto rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    const auto token = rest.substr(0, comma);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      invalid("bad integer '" + std::string(token) + "' in family spec '" + std::string(text) + "'");
    }
    spec.params.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (spec.params.size() != found->arity) {
    invalid("family '" + std::string(name) + "' takes " + std::to_string(found->arity) + " parameter(s)");
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string out;
  switch (family) {
    case Family::star: out = "star"; break;
    case Family::complete: out = "complete"; break;
    case Family::path: out = "path"; break;
    case Family::cycle: out = "cycle"; break;
    case Family::double_star: out = "double_star"; break;
    case Family::r_graph: out = "r_graph"; break;
    case Family::u_graph: out = "u_graph"; break;
  }
  for (std::size_t i = 0; i < params.size(); ++i) out += (i == 0 ? ":" : ",") + std::to_string(params[i]);
  return out;
}

Graph build(const FamilySpec& spec) {
  const auto& p = spec.params;
  const std::size_t arity = (spec.family == Family::double_star || spec.family == Family::r_graph) ? 2 : 1;
  if (p.size() != arity) invalid(spec.to_string() + ": wrong parameter count");
  Edges es;
  int n = 0;
  switch (spec.family) {
    case Family::star:
      n = p[0];
      require(n >= 1 && n <= kMaxOrder, spec, "1 <= n <= 32");
      for (int v = 1; v < n; ++v) es.emplace_back(0, v);
      break;
    case Family::complete:
      n = p[0];
      require(n >= 1 && n <= kMaxOrder, spec, "1 <= n <= 32");
      add_clique(es, 0, n);
      break;
    case Family::path:
      n = p[0];
      require(n >= 1 && n <= kMaxOrder, spec, "1 <= n <= 32");
      for (int v = 1; v < n; ++v) es.emplace_back(v - 1, v);
      break;
    case Family::cycle:
      n = p[0];
      require(n >= 3 && n <= kMaxOrder, spec, "3 <= n <= 32");
      for (int v = 1; v < n; ++v) es.emplace_back(v - 1, v);
      es.emplace_back(n - 1, 0);
      break;
    case Family::double_star: {
      const int t = p[0];
      const int s = p[1];
      require(t >= 1 && t <= s && t + s + 2 <= kMaxOrder, spec, "1 <= t <= s, t+s+2 <= 32");
      n = t + s + 2;
      es.emplace_back(0, 1);
      for (int i = 0; i < s; ++i) es.emplace_back(0, 2 + i);
      for (int i = 0; i < t; ++i) es.emplace_back(1, 2 + s + i);
      break;
    }
    case Family::r_graph: {
      n = p[0];
      const int k = p[1];
      require(n > 4 && n <= kMaxOrder && k >= 1 && k < n - 2, spec, "4 < n <= 32, 1 <= k < n-2");
      add_clique(es, 0, n - k);
      for (int v = n - k; v < n; ++v) es.emplace_back(0, v);
      break;
    }
    case Family::u_graph:
      n = p[0];
      require(n > 3 && n <= kMaxOrder, spec, "3 < n <= 32");
      add_clique(es, 0, 3);
      for (int v = 3; v < n; ++v) es.emplace_back(0, v);
      break;
  }
  return Graph::from_edges(n, es);
}

namespace {

void require_connected(const Graph& g, std::string_view what) {
  if (!is_connected(g)) throw Error(ErrorCode::disconnected_input, std::string(what) + " must be connected");
}

void require_vertex(const Graph& g, Vertex v, std::string_view what) {
  if (v < 0 || v >= g.order()) {
    throw Error(ErrorCode::precondition, std::string(what) + " is not a vertex of its graph");
  }
}

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

}  // namespace

MergeResult merge_with_k1(const Graph& g, Vertex u, const Graph& h, Vertex v) {
  require_connected(g, "g");
  require_connected(h, "h");
  require_vertex(g, u, "u");
  require_vertex(h, v, "v");
  const int a = g.order();
  const int b = h.order();
  if (a + b > kDefaultScanLimit) throw Error(ErrorCode::order_out_of_range, "merged order above scan limit");

  std::vector<Vertex> label(b);
  int next = a;
  for (int w = 0; w < b; ++w) label[w] = (w == v) ? u : next++;
  Edges es = g.edges();
  for (auto [x, y] : h.edges()) es.emplace_back(label[x], label[y]);

  MergeResult r{Graph::from_edges(a + b, es)};
  const Graph both = disjoint_union(g, h);
  r.eta_merged = eta(r.graph);
  r.eta_merged_bar = eta(complement(r.graph));
  r.eta_union = eta(both);
  r.eta_union_bar = eta(complement(both));
  r.eta_g = eta(g);
  r.eta_h = eta(h);
  r.rooted_g = eta_rooted(g, VertexSet::single(u));
  r.rooted_h = eta_rooted(h, VertexSet::single(v));

  if (r.eta_merged != r.eta_g + r.eta_h + (r.rooted_g - 1) * (r.rooted_h - 1)) {
    throw Error(ErrorCode::internal, "merge: eta(B u K1) disagrees with its closed form");
  }
  const std::int64_t loss = (pow2(g.degree(u)) - 1) * (pow2(h.degree(v)) - 1);
  if (static_cast<std::int64_t>(r.eta_merged_bar) != static_cast<std::int64_t>(r.eta_union_bar) - loss) {
    throw Error(ErrorCode::internal, "merge: eta of the complement disagrees with its closed form");
  }
  return r;
}

StretchResult stretch_pair(const Graph& g, Vertex v, int k) {
  require_connected(g, "g");
  require_vertex(g, v, "v");
  if (k < 1) throw Error(ErrorCode::invalid_parameter, "stretch length k must be >= 1");
  const int m = g.order();
  const int n = m + k + 1;
  if (n > kDefaultScanLimit) throw Error(ErrorCode::order_out_of_range, "stretched order above scan limit");

  Edges h_edges = g.edges();
  const Vertex c = m;
  h_edges.emplace_back(v, c);
  for (int i = 1; i <= k; ++i) h_edges.emplace_back(c, m + i);

  Edges k_edges = g.edges();
  for (int i = 0; i <= k; ++i) k_edges.emplace_back(v, m + i);

  StretchResult r{Graph::from_edges(n, h_edges), Graph::from_edges(n, k_edges)};
  r.order = n;
  r.r = complement(g).degree(v);
  r.rooted_v = eta_rooted(g, VertexSet::single(v));
  r.eta_difference = static_cast<std::int64_t>(eta(r.k)) - static_cast<std::int64_t>(eta(r.h));
  r.bar_difference =
      static_cast<std::int64_t>(eta(complement(r.k))) - static_cast<std::int64_t>(eta(complement(r.h)));

  if (r.eta_difference != (pow2(k) - 1) * (static_cast<std::int64_t>(r.rooted_v) - 1)) {
    throw Error(ErrorCode::internal, "stretch: eta(K)-eta(H) disagrees with its closed form");
  }
  // bar_difference = 2(2^k-1) + 2^-r (2^(n-k-1) - 2^(n-1)), scaled by 2^r.
  const std::int64_t tail = pow2(n - k - 1) - pow2(n - 1);
  if (tail % pow2(r.r) != 0) throw Error(ErrorCode::internal, "stretch: power-of-two division not exact");
  if (pow2(r.r) * r.bar_difference != pow2(r.r) * 2 * (pow2(k) - 1) + tail) {
    throw Error(ErrorCode::internal, "stretch: complement difference disagrees with its closed form");
  }
  if (r.r >= 2 && r.combined_difference() <= 0) {
    throw Error(ErrorCode::internal, "stretch: combined difference not positive although r >= 2");
  }
  return r;
}

}  // namespace ngeta
