#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "tripsem/error.hpp"
#include "tripsem/random.hpp"
#include "tripsem/treeio.hpp"

using namespace tripsem;

namespace {

constexpr const char* kSentence = "(S (NP (Det this) (N car)) (VP (VBZ is) (RB not) (ADJP (JJ blue))))";

std::size_t parse_error_offset(const std::string& text) {
  try {
    parse_bracketed(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no parse error for " << text;
  return 0;
}

// Random n-ary tree, including unary nodes.
ParseTree random_tree(SeededGenerator& gen, int depth) {
  static const std::vector<std::string> tags{"S", "NP", "VP", "ADJP", "PP"};
  static const std::vector<std::string> tokens{"a", "b", "not", "car", "blue", "x.y", "w's"};
  if (depth == 0 || gen.uniform01() < 0.3) {
    return ParseTree::leaf("T" + std::to_string(gen.below(3)), tokens[gen.below(tokens.size())]);
  }
  std::vector<ParseTree> kids;
  const std::size_t k = 1 + gen.below(4);
  for (std::size_t i = 0; i < k; ++i) kids.push_back(random_tree(gen, depth - 1));
  return ParseTree::node(tags[gen.below(tags.size())], std::move(kids));
}

bool all_binary(const ParseTree& t) {
  if (t.is_leaf()) return true;
  if (t.children().size() != 2) return false;
  return all_binary(t.children()[0]) && all_binary(t.children()[1]);
}

}  // namespace

TEST(ParseBracketed, Leaf) {
  EXPECT_EQ(parse_bracketed("(JJ blue)"), ParseTree::leaf("JJ", "blue"));
  EXPECT_EQ(parse_bracketed("  ( JJ\n\tblue )  "), ParseTree::leaf("JJ", "blue"));
}

TEST(ParseBracketed, Sentence) {
  const auto t = parse_bracketed(kSentence);
  EXPECT_EQ(t.tag(), "S");
  ASSERT_EQ(t.children().size(), 2u);
  const auto& vp = t.children()[1];
  EXPECT_EQ(vp.tag(), "VP");
  ASSERT_EQ(vp.children().size(), 3u);
  EXPECT_EQ(vp.children()[1], ParseTree::leaf("RB", "not"));
  EXPECT_EQ(vp.children()[2].tag(), "ADJP");
  EXPECT_EQ(fringe(t), (std::vector<std::string>{"this", "car", "is", "not", "blue"}));
  EXPECT_EQ(print(t), kSentence);
}

TEST(ParseBracketed, Errors) {
  EXPECT_EQ(parse_error_offset("(S (NP"), 6u);
  EXPECT_EQ(parse_error_offset("()"), 1u);
  EXPECT_EQ(parse_error_offset("(NP)"), 3u);
  EXPECT_EQ(parse_error_offset("((JJ blue))"), 1u);
  EXPECT_EQ(parse_error_offset("(JJ blue))"), 9u);
  EXPECT_EQ(parse_error_offset("(NN a b)"), 6u);
  EXPECT_EQ(parse_error_offset("(NP a (N b))"), 6u);
  EXPECT_EQ(parse_error_offset(""), 0u);
  EXPECT_EQ(parse_error_offset("JJ blue"), 0u);
}

TEST(ParseBracketed, MultipleTrees) {
  const auto trees = parse_bracketed_all("(A x)\n\n(B (C y) (D z))\n\n\n(E w)\n");
  ASSERT_EQ(trees.size(), 3u);
  EXPECT_EQ(print(trees[1]), "(B (C y) (D z))");
  EXPECT_TRUE(parse_bracketed_all("  \n").empty());
}

TEST(ParseBracketed, PrintParseRoundTrip) {
  SeededGenerator gen(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = random_tree(gen, 5);
    EXPECT_EQ(parse_bracketed(print(t)), t);
  }
}

TEST(Binarize, SentenceRight) {
  const auto t = binarize(parse_bracketed(kSentence), BinarizeStrategy::right);
  EXPECT_EQ(print(t), "(S (NP (Det this) (N car)) (VP (VBZ is) (VP* (RB not) (JJ blue))))");
  // "not" is the sister of the adjective phrase.
  const auto& inner = t.children()[1].children()[1];
  EXPECT_EQ(inner.children()[0].token(), "not");
  EXPECT_EQ(inner.children()[1].token(), "blue");
}

TEST(Binarize, SentenceLeft) {
  const auto t = binarize(parse_bracketed(kSentence), BinarizeStrategy::left);
  EXPECT_EQ(print(t), "(S (NP (Det this) (N car)) (VP (VP* (VBZ is) (RB not)) (JJ blue)))");
}

TEST(Binarize, FourChildren) {
  const auto t = parse_bracketed("(P (A a) (B b) (C c) (D d))");
  EXPECT_EQ(print(binarize(t, BinarizeStrategy::right)), "(P (A a) (P* (B b) (P* (C c) (D d))))");
  EXPECT_EQ(print(binarize(t, BinarizeStrategy::left)), "(P (P* (P* (A a) (B b)) (C c)) (D d))");
}

TEST(Binarize, BinaryTreeUnchanged) {
  const auto t = parse_bracketed("(S (NP (Det this) (N car)) (VP (V is) (JJ blue)))");
  EXPECT_EQ(binarize(t), t);
}

TEST(Binarize, UnaryChainCollapsesToLowerTag) {
  EXPECT_EQ(binarize(parse_bracketed("(ROOT (S (ADJP (JJ blue))))")), ParseTree::leaf("JJ", "blue"));
}

TEST(Binarize, Properties) {
  SeededGenerator gen(32);
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = random_tree(gen, 5);
    for (auto strategy : {BinarizeStrategy::right, BinarizeStrategy::left}) {
      const auto b = binarize(t, strategy);
      EXPECT_TRUE(all_binary(b));
      EXPECT_EQ(fringe(b), fringe(t));
      EXPECT_EQ(binarize(b, strategy), b);
    }
  }
}

TEST(ParseTree, FactoryValidation) {
  EXPECT_THROW(ParseTree::leaf("", "x"), InvalidArgument);
  EXPECT_THROW(ParseTree::leaf("T", "a b"), InvalidArgument);
  EXPECT_THROW(ParseTree::node("T", {}), InvalidArgument);
}
