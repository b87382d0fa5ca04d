#include "tripsem/treeio.hpp"

#include <cctype>
#include <utility>

#include "tripsem/error.hpp"

namespace tripsem {

namespace {

bool has_space(const std::string& s) {
  for (unsigned char c : s) {
    if (std::isspace(c)) return true;
  }
  return false;
}

}  // namespace

ParseTree ParseTree::leaf(std::string tag, std::string token) {
  if (tag.empty() || has_space(tag)) throw InvalidArgument("tree tag must be nonempty without whitespace");
  if (token.empty() || has_space(token)) {
    throw InvalidArgument("leaf token must be nonempty without whitespace");
  }
  ParseTree t;
  t.tag_ = std::move(tag);
  t.token_ = std::move(token);
  return t;
}

ParseTree ParseTree::node(std::string tag, std::vector<ParseTree> children) {
  if (tag.empty() || has_space(tag)) throw InvalidArgument("tree tag must be nonempty without whitespace");
  if (children.empty()) throw InvalidArgument("internal node '" + tag + "' has no children");
  ParseTree t;
  t.tag_ = std::move(tag);
  t.children_ = std::move(children);
  return t;
}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }

  ParseTree tree() {
    skip_space();
    if (at_end()) fail("unexpected end of input, expected '('");
    if (text_[pos_] != '(') fail(std::string("expected '(' but found '") + text_[pos_] + "'");
    const std::size_t open = pos_;
    ++pos_;
    skip_space();
    if (at_end()) fail("unexpected end of input, expected a tag");
    if (text_[pos_] == '(' || text_[pos_] == ')') {
      if (text_[pos_] == ')') fail("empty node");
      fail("missing tag");
    }
    std::string tag = atom();

    skip_space();
    if (at_end()) fail("unexpected end of input, unbalanced '(' at offset " + std::to_string(open));
    if (text_[pos_] == ')') fail("empty node '" + tag + "'");

    if (text_[pos_] != '(') {
      std::string token = atom();
      skip_space();
      if (at_end()) fail("unexpected end of input, unbalanced '(' at offset " + std::to_string(open));
      if (text_[pos_] != ')') fail("leaf '" + tag + "' must hold exactly one token");
      ++pos_;
      return ParseTree::leaf(std::move(tag), std::move(token));
    }

    std::vector<ParseTree> children;
    for (;;) {
      skip_space();
      if (at_end()) fail("unexpected end of input, unbalanced '(' at offset " + std::to_string(open));
      if (text_[pos_] == ')') break;
      if (text_[pos_] != '(') fail("node '" + tag + "' mixes tokens and subtrees");
      children.push_back(tree());
    }
    ++pos_;
    return ParseTree::node(std::move(tag), std::move(children));
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("offset " + std::to_string(pos_) + ": " + what, pos_);
  }

 private:
  std::string atom() {
    const std::size_t begin = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) break;
      ++pos_;
    }
    return std::string(text_.substr(begin, pos_ - begin));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_to(const ParseTree& t, std::string& out) {
  out += '(';
  out += t.tag();
  if (t.is_leaf()) {
    out += ' ';
    out += t.token();
  } else {
    for (const auto& c : t.children()) {
      out += ' ';
      print_to(c, out);
    }
  }
  out += ')';
}

void collect_fringe(const ParseTree& t, std::vector<std::string>& out) {
  if (t.is_leaf()) {
    out.push_back(t.token());
    return;
  }
  for (const auto& c : t.children()) collect_fringe(c, out);
}

}  // namespace

ParseTree parse_bracketed(std::string_view text) {
  Reader reader(text);
  ParseTree t = reader.tree();
  reader.skip_space();
  if (!reader.at_end()) reader.fail("trailing input after tree");
  return t;
}

std::vector<ParseTree> parse_bracketed_all(std::string_view text) {
  Reader reader(text);
  std::vector<ParseTree> trees;
  reader.skip_space();
  while (!reader.at_end()) {
    trees.push_back(reader.tree());
    reader.skip_space();
  }
  return trees;
}

std::string print(const ParseTree& tree) {
  std::string out;
  print_to(tree, out);
  return out;
}

std::vector<std::string> fringe(const ParseTree& tree) {
  std::vector<std::string> out;
  collect_fringe(tree, out);
  return out;
}

ParseTree binarize(const ParseTree& tree, BinarizeStrategy strategy) {
  if (tree.is_leaf()) return tree;
  if (tree.children().size() == 1) return binarize(tree.children().front(), strategy);

  std::vector<ParseTree> kids;
  kids.reserve(tree.children().size());
  for (const auto& c : tree.children()) kids.push_back(binarize(c, strategy));

  const std::string inner_tag = tree.tag() + std::string(kBinarizedMarker);
  if (strategy == BinarizeStrategy::right) {
    ParseTree acc = std::move(kids.back());
    for (std::size_t i = kids.size() - 1; i-- > 1;) {
      acc = ParseTree::node(inner_tag, {std::move(kids[i]), std::move(acc)});
    }
    return ParseTree::node(tree.tag(), {std::move(kids[0]), std::move(acc)});
  }
  ParseTree acc = std::move(kids.front());
  for (std::size_t i = 1; i + 1 < kids.size(); ++i) {
    acc = ParseTree::node(inner_tag, {std::move(acc), std::move(kids[i])});
  }
  return ParseTree::node(tree.tag(), {std::move(acc), std::move(kids.back())});
}

}  // namespace tripsem
