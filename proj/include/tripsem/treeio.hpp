#ifndef TRIPSEM_TREEIO_HPP
#define TRIPSEM_TREEIO_HPP

#include <string>
#include <string_view>
#include <vector>

namespace tripsem {

/// Labelled constituency tree. A leaf carries a token and no children; an
/// internal node carries one or more children and an empty token.
class ParseTree {
 public:
  static ParseTree leaf(std::string tag, std::string token);
  static ParseTree node(std::string tag, std::vector<ParseTree> children);

  bool is_leaf() const noexcept { return children_.empty(); }
  const std::string& tag() const noexcept { return tag_; }
  const std::string& token() const noexcept { return token_; }
  const std::vector<ParseTree>& children() const noexcept { return children_; }

  bool operator==(const ParseTree&) const = default;

 private:
  ParseTree() = default;

  std::string tag_;
  std::string token_;
  std::vector<ParseTree> children_;
};

/// Reads exactly one bracketed tree, e.g. "(NP (Det this) (N car))".
/// Throws ParseError with the character offset of the problem.
ParseTree parse_bracketed(std::string_view text);

/// Reads a sequence of trees separated by whitespace (typically blank lines).
std::vector<ParseTree> parse_bracketed_all(std::string_view text);

/// Canonical single-space rendering; parse_bracketed(print(t)) == t.
std::string print(const ParseTree& tree);

std::vector<std::string> fringe(const ParseTree& tree);

enum class BinarizeStrategy { right, left };

// Suffix carried by the tags of nodes introduced by binarize().
inline constexpr std::string_view kBinarizedMarker = "*";

/// Makes every internal node binary. Right strategy turns (P x y z) into
/// (P x (P* y z)); left turns it into (P (P* x y) z). Unary nodes collapse
/// into their child. Leaves and leaf order are unchanged.
ParseTree binarize(const ParseTree& tree, BinarizeStrategy strategy = BinarizeStrategy::right);

}  // namespace tripsem

#endif  // TRIPSEM_TREEIO_HPP
