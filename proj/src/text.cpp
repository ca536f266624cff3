#include "treeperm/text.hpp"

#include <algorithm>
#include <charconv>
#include <string>
#include <utility>
#include <vector>

#include "treeperm/error.hpp"

namespace treeperm {

namespace {

// Spreadsheet-style letters: 0 -> a, 25 -> z, 26 -> aa.
std::string leaf_letters(Label index) {
  std::string out;
  Label i = index + 1;
  while (i > 0) {
    --i;
    out.push_back(static_cast<char>('a' + i % 26));
    i /= 26;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

void render_sexpr(const LabeledTree& t, std::string& out) {
  if (t.is_leaf()) {
    out += std::to_string(t.label());
    return;
  }
  out += '(';
  out += std::to_string(t.label());
  for (const LabeledTree& c : t.children()) {
    out += ' ';
    render_sexpr(c, out);
  }
  out += ')';
}

void render_functional(const LabeledTree& t, std::string& out) {
  if (t.is_leaf()) {
    out += std::to_string(t.label());
    return;
  }
  out += 'f';
  out += std::to_string(t.label());
  out += '(';
  for (Label r = 0; r < t.arity(); ++r) {
    if (r > 0) out += ',';
    render_functional(t.child(r), out);
  }
  out += ')';
}

void render_infix(const LabeledTree& t, Label node_count, bool unicode_times,
                  std::string& out) {
  if (t.is_leaf()) {
    out += leaf_letters(t.label() - node_count);
    return;
  }
  static const char* const kOps[4] = {"+", "x", "-", "/"};
  const Label op = t.label() % 4;
  out += '(';
  render_infix(t.child(0), node_count, unicode_times, out);
  out += (op == 1 && unicode_times) ? "\xC3\x97" : kOps[op];
  render_infix(t.child(1), node_count, unicode_times, out);
  out += ')';
}

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void skip_ws() {
    while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\n' ||
                       peek() == '\r')) {
      ++pos;
    }
  }

  Label read_label(const char* what) {
    Label value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    const std::from_chars_result r = std::from_chars(first, last, value);
    if (r.ec == std::errc::result_out_of_range) {
      throw ParseError(std::string("number too large for a label in ") + what,
                       pos);
    }
    if (r.ec != std::errc() || r.ptr == first) {
      throw ParseError(std::string("expected a number in ") + what, pos);
    }
    pos = static_cast<std::size_t>(r.ptr - text.data());
    return value;
  }

  void expect(char c, const char* what) {
    if (done() || peek() != c) {
      throw ParseError(std::string("expected '") + c + "' in " + what, pos);
    }
    ++pos;
  }
};

LabeledTree parse_sexpr_tree(Cursor& in) {
  in.skip_ws();
  if (in.done()) throw ParseError("expected a tree", in.pos);
  if (in.peek() != '(') return LabeledTree::leaf(in.read_label("tree"));

  const std::size_t open = in.pos;
  ++in.pos;
  in.skip_ws();
  const Label label = in.read_label("node");
  std::vector<LabeledTree> children;
  while (true) {
    in.skip_ws();
    if (in.done()) {
      throw ParseError("unclosed '('", open);
    }
    if (in.peek() == ')') {
      ++in.pos;
      break;
    }
    children.push_back(parse_sexpr_tree(in));
  }
  if (children.empty()) {
    throw ParseError("node " + std::to_string(label) + " has no children",
                     open);
  }
  return LabeledTree::node(label, std::move(children));
}

LabeledTree parse_functional_tree(Cursor& in) {
  in.skip_ws();
  if (in.done()) throw ParseError("expected a tree", in.pos);
  if (in.peek() != 'f') return LabeledTree::leaf(in.read_label("tree"));

  ++in.pos;
  const Label label = in.read_label("node");
  in.skip_ws();
  in.expect('(', "node argument list");
  std::vector<LabeledTree> children;
  while (true) {
    children.push_back(parse_functional_tree(in));
    in.skip_ws();
    if (in.done()) throw ParseError("unclosed argument list", in.pos);
    const char c = in.peek();
    ++in.pos;
    if (c == ')') break;
    if (c != ',') {
      throw ParseError("expected ',' or ')' in node argument list",
                       in.pos - 1);
    }
  }
  return LabeledTree::node(label, std::move(children));
}

}  // namespace

std::string render(const LabeledTree& t, const RenderOptions& options) {
  std::string out;
  switch (options.style) {
    case RenderStyle::SExpr:
      render_sexpr(t, out);
      return out;
    case RenderStyle::Functional:
      render_functional(t, out);
      return out;
    case RenderStyle::Infix: {
      const TreeShape shape = tree_shape(t);
      if (shape.arity() != 2) {
        throw Error(ErrorCode::StyleArityMismatch,
                    "infix needs arity 2, tree has arity " +
                        std::to_string(shape.arity()));
      }
      render_infix(t, shape.node_count(), options.unicode_times, out);
      return out;
    }
  }
  throw Error(ErrorCode::InternalCorruption, "unknown render style");
}

std::string render(const LabeledTree& t, RenderStyle style) {
  RenderOptions options;
  options.style = style;
  return render(t, options);
}

std::string format_labels(const std::vector<Label>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(labels[i]);
  }
  return out;
}

std::string format_perm(const Permutation& perm) {
  return format_labels(perm.entries());
}

Permutation parse_perm(std::string_view text) {
  Cursor in{text};
  in.skip_ws();
  std::vector<Label> entries;
  if (!in.done()) {
    while (true) {
      in.skip_ws();
      entries.push_back(in.read_label("sequence"));
      in.skip_ws();
      if (in.done()) break;
      in.expect(',', "sequence");
    }
  }
  return Permutation::from_entries(std::move(entries));
}

std::string format_tree(const LabeledTree& t) {
  return render(t, RenderStyle::SExpr);
}

LabeledTree parse_tree(std::string_view text) {
  return parse_tree(text, RenderStyle::SExpr);
}

LabeledTree parse_tree(std::string_view text, RenderStyle style) {
  Cursor in{text};
  LabeledTree t = LabeledTree::leaf(0);
  switch (style) {
    case RenderStyle::SExpr:
      t = parse_sexpr_tree(in);
      break;
    case RenderStyle::Functional:
      t = parse_functional_tree(in);
      break;
    case RenderStyle::Infix:
      throw Error(ErrorCode::ParseError,
                  "infix is render-only; parse sexpr or functional");
  }
  in.skip_ws();
  if (!in.done()) {
    throw ParseError("trailing text after tree", in.pos);
  }
  tree_shape(t);
  return t;
}

}  // namespace treeperm
