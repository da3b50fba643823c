#include "ngeta/generators.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>

#include "ngeta/error.hpp"
#include "ngeta/graph6.hpp"

namespace ngeta {

namespace {

[[noreturn]] void out_of_range(const std::string& what) { throw Error(ErrorCode::order_out_of_range, what); }

}  // namespace

GraphClassSpec GraphClassSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::usage, "class spec '" + std::string(text) + "' lacks ':'");
  }
  const auto name = text.substr(0, colon);
  const auto arg = text.substr(colon + 1);
  if (name == "graph6" || name == "stream") {
    if (arg.empty()) throw Error(ErrorCode::usage, "stream class needs a path or '-'");
    return stream(std::string(arg));
  }
  int n = 0;
  const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
  if (arg.empty() || ec != std::errc() || ptr != arg.data() + arg.size()) {
    throw Error(ErrorCode::usage, "bad order in class spec '" + std::string(text) + "'");
  }
  GraphClassSpec spec;
  if (name == "labeled" || name == "all_labeled") {
    spec = labeled(n);
  } else if (name == "trees") {
    spec = trees(n);
  } else if (name == "unicyclic") {
    spec = unicyclic(n);
  } else {
    throw Error(ErrorCode::usage, "unknown graph class '" + std::string(name) + "'");
  }
  spec.validate();
  return spec;
}

void GraphClassSpec::validate() const {
  switch (kind) {
    case ClassKind::all_labeled:
      if (order < 1 || order > kMaxLabeledOrder) out_of_range("labeled class needs 1 <= n <= 8");
      break;
    case ClassKind::trees:
      if (order < 1 || order > kMaxTreeOrder) out_of_range("tree class needs 1 <= n <= 18");
      break;
    case ClassKind::unicyclic:
      if (order < kMinUnicyclicOrder || order > kMaxUnicyclicOrder) out_of_range("unicyclic class needs 4 <= n <= 10");
      break;
    case ClassKind::stream:
      break;
  }
}

std::string GraphClassSpec::to_string() const {
  switch (kind) {
    case ClassKind::all_labeled: return "labeled:" + std::to_string(order);
    case ClassKind::trees: return "trees:" + std::to_string(order);
    case ClassKind::unicyclic: return "unicyclic:" + std::to_string(order);
    case ClassKind::stream: return "graph6:" + source;
  }
  return {};
}

LabeledGraphs::LabeledGraphs(int n) : n_(n) {
  if (n < 1 || n > kMaxLabeledOrder) out_of_range("labeled graphs need 1 <= n <= 8");
}

// Level sequences: layout[i] is the depth of the i-th vertex in preorder.
namespace {

using Layout = std::vector<int>;

// Successor of a rooted-tree level sequence; p is the position to advance.
std::optional<Layout> next_rooted_tree(const Layout& pred, std::optional<std::size_t> p_hint = std::nullopt) {
  std::size_t p;
  if (p_hint) {
    p = *p_hint;
  } else {
    p = pred.size() - 1;
    while (pred[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  std::size_t q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  Layout result = pred;
  for (std::size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
  return result;
}

// Splits off the first subtree of the root: (that subtree re-leveled, the rest).
std::pair<Layout, Layout> split_tree(const Layout& layout) {
  std::size_t m = layout.size();
  bool one_found = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (one_found) {
        m = i;
        break;
      }
      one_found = true;
    }
  }
  Layout left;
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  Layout rest{0};
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
  return {left, rest};
}

// Returns the candidate if it is a canonical free-tree sequence, otherwise
// jumps ahead to the next one.
Layout next_tree(const Layout& candidate) {
  auto [left, rest] = split_tree(candidate);
  const int left_height = *std::max_element(left.begin(), left.end());
  const int rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size()) {
      valid = false;
    } else if (left.size() == rest.size() && left > rest) {
      valid = false;
    }
  }
  if (valid) return candidate;

  const std::size_t p = left.size();
  Layout jumped = *next_rooted_tree(candidate, p);
  if (candidate[p] > 2) {
    auto [new_left, new_rest] = split_tree(jumped);
    const int new_left_height = *std::max_element(new_left.begin(), new_left.end());
    const std::size_t len = static_cast<std::size_t>(new_left_height) + 1;
    for (std::size_t i = 0; i < len; ++i) jumped[jumped.size() - len + i] = static_cast<int>(i) + 1;
  }
  return jumped;
}

Graph layout_to_graph(const Layout& layout) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (!stack.empty()) {
      while (layout[stack.back()] >= layout[i]) stack.pop_back();
      edges.emplace_back(static_cast<Vertex>(stack.back()), static_cast<Vertex>(i));
    }
    stack.push_back(i);
  }
  return Graph::from_edges(static_cast<int>(layout.size()), edges);
}

}  // namespace

FreeTreeGenerator::FreeTreeGenerator(int n) : n_(n) {
  if (n < 1 || n > kMaxTreeOrder) out_of_range("free trees need 1 <= n <= 18");
  if (n >= 2) {
    // Start at the path rooted at its center.
    Layout start;
    for (int i = 0; i <= n / 2; ++i) start.push_back(i);
    for (int i = 1; i < (n + 1) / 2; ++i) start.push_back(i);
    layout_ = start;
  }
}

std::optional<Graph> FreeTreeGenerator::next() {
  if (n_ == 1) {
    if (started_) return std::nullopt;
    started_ = true;
    return Graph(1);
  }
  if (!layout_) return std::nullopt;
  if (started_) {
    layout_ = next_rooted_tree(*layout_);
    if (!layout_) return std::nullopt;
  }
  started_ = true;
  layout_ = next_tree(*layout_);
  return layout_to_graph(*layout_);
}

std::vector<Graph> free_trees(int n) {
  FreeTreeGenerator gen(n);
  std::vector<Graph> out;
  while (auto t = gen.next()) out.push_back(*t);
  return out;
}

std::vector<Graph> unicyclic_graphs(int n) {
  if (n < kMinUnicyclicOrder || n > kMaxUnicyclicOrder) out_of_range("unicyclic graphs need 4 <= n <= 10");
  std::map<CanonicalForm, Graph> classes;
  for (const Graph& tree : free_trees(n)) {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (tree.has_edge(u, v)) continue;
        const Graph g = tree.with_edge(u, v);
        classes.try_emplace(canonical_form(g), g);
      }
    }
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [form, g] : classes) out.push_back(g);
  return out;
}

std::optional<Graph> Graph6Reader::next() {
  std::string text;
  while (std::getline(in_, text)) {
    ++line_;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty() || text == kGraph6Header) continue;
    try {
      Graph g = parse_graph6(text);
      if (g.order() > cap_) {
        throw Error(ErrorCode::order_out_of_range,
                    "order " + std::to_string(g.order()) + " above cap " + std::to_string(cap_));
      }
      return g;
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line_) + ": " + e.what());
    }
  }
  return std::nullopt;
}

std::vector<Graph> stream_graph6(std::istream& in, int order_cap) {
  Graph6Reader reader(in, order_cap);
  std::vector<Graph> out;
  while (auto g = reader.next()) out.push_back(*g);
  return out;
}

GraphCollection GraphCollection::from_spec(const GraphClassSpec& spec, std::istream* stdin_stream) {
  spec.validate();
  switch (spec.kind) {
    case ClassKind::all_labeled:
      return GraphCollection(LabeledGraphs(spec.order));
    case ClassKind::trees:
      return GraphCollection(free_trees(spec.order));
    case ClassKind::unicyclic:
      return GraphCollection(unicyclic_graphs(spec.order));
    case ClassKind::stream:
      if (spec.source == "-") {
        if (!stdin_stream) throw Error(ErrorCode::usage, "no standard input available for graph6:-");
        return GraphCollection(stream_graph6(*stdin_stream));
      } else {
        std::ifstream file(spec.source);
        if (!file) throw Error(ErrorCode::usage, "cannot open '" + spec.source + "'");
        return GraphCollection(stream_graph6(file));
      }
  }
  throw Error(ErrorCode::usage, "unknown class kind");
}

GraphCollection GraphCollection::from_graphs(std::vector<Graph> graphs) {
  return GraphCollection(std::move(graphs));
}

std::uint64_t GraphCollection::size() const {
  if (const auto* labeled = std::get_if<LabeledGraphs>(&items_)) return labeled->size();
  return std::get<std::vector<Graph>>(items_).size();
}

Graph GraphCollection::at(std::uint64_t index) const {
  if (const auto* labeled = std::get_if<LabeledGraphs>(&items_)) return labeled->at(index);
  return std::get<std::vector<Graph>>(items_)[index];
}

}  // namespace ngeta
