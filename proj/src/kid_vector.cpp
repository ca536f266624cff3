#include "treeperm/kid_vector.hpp"

#include <string>

#include "treeperm/error.hpp"

namespace treeperm {

namespace {

// Follows parent chains from every label; each must terminate at the
// root. Colors: 0 unvisited, 1 on the current path, 2 known-good.
void check_acyclic(const std::vector<Label>& kids, const TreeShape& shape,
                   Label root) {
  const Label d = shape.arity();
  const std::size_t labels = static_cast<std::size_t>(shape.label_count());

  std::vector<Label> parent(labels, -1);
  for (std::size_t k = 0; k < kids.size(); ++k) {
    parent[static_cast<std::size_t>(kids[k])] = static_cast<Label>(k) / d;
  }

  std::vector<unsigned char> color(labels, 0);
  color[static_cast<std::size_t>(root)] = 2;

  std::vector<Label> path;
  for (Label start = 0; start < static_cast<Label>(labels); ++start) {
    if (color[static_cast<std::size_t>(start)] != 0) continue;
    path.clear();
    Label x = start;
    while (color[static_cast<std::size_t>(x)] == 0) {
      color[static_cast<std::size_t>(x)] = 1;
      path.push_back(x);
      x = parent[static_cast<std::size_t>(x)];
    }
    if (color[static_cast<std::size_t>(x)] == 1) {
      throw Error(ErrorCode::CycleDetected,
                  "label " + std::to_string(x) +
                      " is its own ancestor through the parent chain");
    }
    for (Label y : path) color[static_cast<std::size_t>(y)] = 2;
  }
}

}  // namespace

KidVector KidVector::validated(const TreeShape& shape, std::vector<Label> kids) {
  const Label len = shape.edge_count();
  if (static_cast<Label>(kids.size()) != len) {
    throw Error(ErrorCode::WrongLength,
                "kid vector has " + std::to_string(kids.size()) +
                    " entries, shape (d = " + std::to_string(shape.arity()) +
                    ", n = " + std::to_string(shape.node_count()) +
                    ") requires " + std::to_string(len));
  }

  std::vector<bool> present(static_cast<std::size_t>(shape.label_count()), false);
  for (std::size_t k = 0; k < kids.size(); ++k) {
    const Label v = kids[k];
    if (v < 0 || v > len) {
      throw Error(ErrorCode::LabelOutOfRange,
                  "kids[" + std::to_string(k) + "] = " + std::to_string(v) +
                      " is outside {0,...," + std::to_string(len) + "}");
    }
    if (present[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::DuplicateChild,
                  "label " + std::to_string(v) +
                      " appears as a child more than once (second time at "
                      "kids[" + std::to_string(k) + "])");
    }
    present[static_cast<std::size_t>(v)] = true;
  }

  Label root = -1;
  for (Label v = 0; v <= len; ++v) {
    if (!present[static_cast<std::size_t>(v)]) {
      if (root != -1) {
        throw Error(ErrorCode::NoUniqueRoot,
                    "labels " + std::to_string(root) + " and " +
                        std::to_string(v) + " are both absent from kids");
      }
      root = v;
    }
  }
  if (root == -1) {
    throw Error(ErrorCode::NoUniqueRoot, "no label is absent from kids");
  }

  check_acyclic(kids, shape, root);
  return KidVector(shape, std::move(kids), root);
}

Label root_label(const KidVector& kids) { return kids.root(); }

}  // namespace treeperm
