#ifndef TRIPSEM_LEXICON_HPP
#define TRIPSEM_LEXICON_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "tripsem/core.hpp"

namespace tripsem {

inline constexpr double kDefaultMu = 0.5;

/// Token -> entry map sharing one layout. Iteration follows insertion order,
/// which is also the order used by save().
class Lexicon {
 public:
  explicit Lexicon(SegmentLayout layout, double mu_default = kDefaultMu);

  const SegmentLayout& layout() const noexcept { return layout_; }
  double mu_default() const noexcept { return mu_default_; }
  void set_mu_default(double mu);

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<LexicalEntry>& entries() const noexcept { return entries_; }
  bool contains(const std::string& token) const { return index_.count(token) != 0; }
  const LexicalEntry* find(const std::string& token) const;
  // Throws LookupError naming the token.
  const LexicalEntry& at(const std::string& token) const;

  // Adds a new entry; throws on duplicates, bad tokens, or layout mismatch.
  void add(LexicalEntry entry);
  // Adds or replaces in place.
  void put(LexicalEntry entry);

  bool operator==(const Lexicon& other) const;

 private:
  void check(const LexicalEntry& entry) const;

  SegmentLayout layout_;
  double mu_default_;
  std::vector<LexicalEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

bool is_valid_token(const std::string& token);

/// v uniform in [-1, 1), M = I + noise * G with G standard normal, alpha = 1.
/// Per token, in order: n draws for v, then n*n draws for G in row-major order.
Lexicon init_random(std::span<const std::string> tokens, const SegmentLayout& layout,
                    std::uint64_t seed, double noise);

struct FunctionWordPreset {
  enum class Kind { negation, identity };
  Kind kind;
  double mu = kDefaultMu;

  static FunctionWordPreset negation(double mu) { return {Kind::negation, mu}; }
  static FunctionWordPreset identity() { return {Kind::identity, 0.0}; }
};

/// negation(mu): v = 0, M = J_mu, alpha = 0 (also sets mu_default).
/// identity:     v = 0, M = I,    alpha = 1.
Lexicon set_function_word(const Lexicon& lex, const std::string& token, FunctionWordPreset preset);

void save(const Lexicon& lex, std::ostream& out);
void save(const Lexicon& lex, const std::filesystem::path& path);
Lexicon load(std::istream& in);
Lexicon load(const std::filesystem::path& path);

}  // namespace tripsem

#endif  // TRIPSEM_LEXICON_HPP
