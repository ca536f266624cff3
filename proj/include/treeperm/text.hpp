#ifndef TREEPERM_TEXT_HPP
#define TREEPERM_TEXT_HPP

#include <string>
#include <string_view>

#include "treeperm/labeled_tree.hpp"
#include "treeperm/permutation.hpp"

namespace treeperm {

enum class RenderStyle {
  SExpr,       // "(0 (1 3 2) 4)"; leaves are bare labels
  Functional,  // "f0(f1(3,2),4)"; any arity
  Infix,       // "((bxa)+c)"; d = 2 only, fully parenthesized
};

struct RenderOptions {
  RenderStyle style = RenderStyle::SExpr;
  /// Emit U+00D7 for the multiplication operator instead of ASCII "x".
  bool unicode_times = false;
};

/// Deterministic text for a valid tree. Infix maps node q to an operator
/// from the fixed cycle +, x, -, / (by q mod 4) and leaf p to letters
/// a, b, c, ... (p - n in spreadsheet style past 'z'); it requires d = 2
/// and throws StyleArityMismatch otherwise.
std::string render(const LabeledTree& t, const RenderOptions& options = {});
std::string render(const LabeledTree& t, RenderStyle style);

/// Comma-separated decimal labels, no spaces: "3,2,0,1". Empty for an
/// empty sequence.
std::string format_labels(const std::vector<Label>& labels);
std::string format_perm(const Permutation& perm);

/// Parses "3,2,0,1" (whitespace tolerated around commas) and validates
/// the result as a permutation. Blank input is the empty permutation.
/// Throws ParseError with a byte offset, or InvalidPermutation after a
/// structurally clean parse.
Permutation parse_perm(std::string_view text);

/// SExpr form of a tree; inverse of parse_tree.
std::string format_tree(const LabeledTree& t);

/// Parses the SExpr grammar tree := label | "(" label tree{d} ")" and
/// validates labels/arity for the inferred shape.
LabeledTree parse_tree(std::string_view text);

/// Style-aware parse: SExpr or Functional (the two styles render() can
/// invert). Infix is render-only and rejected here.
LabeledTree parse_tree(std::string_view text, RenderStyle style);

}  // namespace treeperm

#endif  // TREEPERM_TEXT_HPP
