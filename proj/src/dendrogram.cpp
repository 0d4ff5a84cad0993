#include "dendrogram.hpp"

#include <algorithm>
#include <unordered_set>

#include <json.hpp>

#include "errors.hpp"

namespace umk {

namespace {

using Node = Dendrogram::Node;

// Smallest leaf label in the subtree; the child ordering key.
const std::string& min_leaf(const Node& node) {
  if (node.is_leaf()) return node.leaf;
  const std::string* best = &min_leaf(node.children.front());
  for (std::size_t i = 1; i < node.children.size(); ++i) {
    const std::string& m = min_leaf(node.children[i]);
    if (m < *best) best = &m;
  }
  return *best;
}

Node build_node(const FiniteSpace& space, std::vector<std::size_t>& points) {
  if (points.size() == 1) return Node{Rat(0), {}, space.label(points.front())};

  int top = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      top = std::max(top, space.rank_at(points[i], points[j]));
    }
  }
  // Group by "distance strictly below the current level"; in an ultrametric
  // space this is an equivalence on the subset.
  std::vector<std::vector<std::size_t>> groups;
  std::vector<char> used(points.size(), 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (used[i]) continue;
    std::vector<std::size_t> group{points[i]};
    used[i] = 1;
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (!used[j] && space.rank_at(points[i], points[j]) < top) {
        group.push_back(points[j]);
        used[j] = 1;
      }
    }
    groups.push_back(std::move(group));
  }

  Node node;
  node.level = space.values()[top];
  for (auto& group : groups) node.children.push_back(build_node(space, group));
  std::sort(node.children.begin(), node.children.end(),
            [](const Node& a, const Node& b) { return min_leaf(a) < min_leaf(b); });
  return node;
}

void check_node(const Node& node, const Rat* parent_level, std::unordered_set<std::string>& seen) {
  if (node.is_leaf()) {
    if (node.leaf.empty()) throw StructureError("dendrogram leaf with empty label");
    if (!seen.insert(node.leaf).second) {
      throw StructureError("duplicate dendrogram leaf '" + node.leaf + "'");
    }
    return;
  }
  if (!node.leaf.empty()) throw StructureError("dendrogram node is both leaf and internal");
  if (node.children.size() < 2) {
    throw StructureError("internal dendrogram node with fewer than 2 children");
  }
  if (!node.level.is_positive()) throw StructureError("dendrogram level must be positive");
  if (parent_level && node.level >= *parent_level) {
    throw StructureError("dendrogram levels must strictly decrease toward the leaves");
  }
  for (const auto& child : node.children) check_node(child, &node.level, seen);
}

void collect_leaves(const Node& node, std::vector<std::string>& out) {
  if (node.is_leaf()) {
    out.push_back(node.leaf);
    return;
  }
  for (const auto& child : node.children) collect_leaves(child, out);
}

void fill_distances(const Node& node, const std::vector<std::string>& labels,
                    std::vector<Rat>& flat) {
  if (node.is_leaf()) return;
  const std::size_t n = labels.size();
  auto index = [&](const std::string& label) {
    return static_cast<std::size_t>(
        std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
  };
  std::vector<std::vector<std::string>> leaves(node.children.size());
  for (std::size_t c = 0; c < node.children.size(); ++c) {
    collect_leaves(node.children[c], leaves[c]);
    fill_distances(node.children[c], labels, flat);
  }
  for (std::size_t a = 0; a < leaves.size(); ++a) {
    for (std::size_t b = a + 1; b < leaves.size(); ++b) {
      for (const auto& x : leaves[a]) {
        for (const auto& y : leaves[b]) {
          const std::size_t i = index(x), j = index(y);
          flat[i * n + j] = node.level;
          flat[j * n + i] = node.level;
        }
      }
    }
  }
}

void newick_node(const Node& node, std::string& out) {
  if (node.is_leaf()) {
    out += node.leaf;
    return;
  }
  out += '(';
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (i) out += ',';
    newick_node(node.children[i], out);
  }
  out += "):";
  out += node.level.str();
}

nlohmann::json json_node(const Node& node) {
  if (node.is_leaf()) return nlohmann::json{{"leaf", node.leaf}};
  nlohmann::json children = nlohmann::json::array();
  for (const auto& child : node.children) children.push_back(json_node(child));
  return nlohmann::json{{"level", node.level.str()}, {"children", std::move(children)}};
}

Node node_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("dendrogram node must be a JSON object");
  if (j.contains("leaf")) {
    if (!j["leaf"].is_string()) throw ParseError("dendrogram leaf label must be a string");
    return Node{Rat(0), {}, j["leaf"].get<std::string>()};
  }
  if (!j.contains("level") || !j.contains("children")) {
    throw ParseError("dendrogram node needs either 'leaf' or 'level' plus 'children'");
  }
  if (!j["level"].is_string()) throw ParseError("dendrogram level must be a rational string");
  if (!j["children"].is_array()) throw ParseError("dendrogram children must be an array");
  Node node;
  node.level = Rat::parse(j["level"].get<std::string>());
  for (const auto& c : j["children"]) node.children.push_back(node_from_json(c));
  return node;
}

}  // namespace

Dendrogram build_dendrogram(const FiniteSpace& space) {
  if (space.empty()) throw PreconditionError("dendrogram of the empty space");
  if (!space.ultrametric()) {
    throw PreconditionError("dendrogram construction requires an ultrametric space");
  }
  std::vector<std::size_t> points(space.size());
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = i;
  return Dendrogram{build_node(space, points)};
}

void validate_dendrogram(const Dendrogram& tree) {
  std::unordered_set<std::string> seen;
  check_node(tree.root, nullptr, seen);
}

FiniteSpace dendrogram_to_space(const Dendrogram& tree) {
  validate_dendrogram(tree);
  std::vector<std::string> labels;
  collect_leaves(tree.root, labels);
  std::sort(labels.begin(), labels.end());
  std::vector<Rat> flat(labels.size() * labels.size(), Rat(0));
  fill_distances(tree.root, labels, flat);
  return FiniteSpace::from_flat(std::move(labels), std::move(flat));
}

std::string dendrogram_to_newick(const Dendrogram& tree) {
  std::string out;
  newick_node(tree.root, out);
  out += ';';
  return out;
}

std::string dendrogram_to_json(const Dendrogram& tree) { return json_node(tree.root).dump(); }

Dendrogram dendrogram_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("dendrogram JSON: ") + e.what());
  }
  Dendrogram tree{node_from_json(j)};
  validate_dendrogram(tree);
  return tree;
}

}  // namespace umk
