#pragma once

#include <string>
#include <vector>

#include "rational.hpp"
#include "space.hpp"

namespace umk {

/// Rooted level-labeled tree equivalent to a finite ultrametric space: two
/// leaves sit at distance equal to the level of their lowest common ancestor.
/// Levels strictly decrease from root to leaf, internal nodes have at least
/// two children, and children are ordered by their smallest leaf label.
struct Dendrogram {
  struct Node {
    Rat level;  // meaningful for internal nodes only
    std::vector<Node> children;
    std::string leaf;  // set for leaves only

    bool is_leaf() const { return children.empty(); }
    friend bool operator==(const Node& a, const Node& b) = default;
  };

  Node root;
  friend bool operator==(const Dendrogram& a, const Dendrogram& b) = default;
};

/// Requires a nonempty space passing the ultrametric check. Node levels are
/// exactly the positive distance values.
Dendrogram build_dendrogram(const FiniteSpace& space);

/// Lowest-common-ancestor distances; labels sorted lexicographically. The
/// tree invariants are re-validated, so a malformed tree throws.
FiniteSpace dendrogram_to_space(const Dendrogram& tree);

/// Validates the structural invariants; throws StructureError.
void validate_dendrogram(const Dendrogram& tree);

/// Newick rendering with levels as branch annotations: leaves print their
/// label, internal nodes print "(...):level"; terminated by ";".
std::string dendrogram_to_newick(const Dendrogram& tree);

/// {"level": "p/q", "children": [...]} for internal nodes, {"leaf": "x"} for
/// leaves.
std::string dendrogram_to_json(const Dendrogram& tree);
Dendrogram dendrogram_from_json(const std::string& text);

}  // namespace umk
