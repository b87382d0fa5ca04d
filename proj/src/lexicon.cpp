#include "tripsem/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <optional>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "tripsem/error.hpp"
#include "tripsem/format.hpp"
#include "tripsem/random.hpp"

namespace tripsem {

bool is_valid_token(const std::string& token) {
  return !token.empty() && std::none_of(token.begin(), token.end(), [](unsigned char c) {
    return std::isspace(c) != 0;
  });
}

Lexicon::Lexicon(SegmentLayout layout, double mu_default) : layout_(layout), mu_default_(kDefaultMu) {
  set_mu_default(mu_default);
}

void Lexicon::set_mu_default(double mu) {
  NegationOperator(mu, layout_);  // validates the range
  mu_default_ = mu;
}

const LexicalEntry* Lexicon::find(const std::string& token) const {
  const auto it = index_.find(token);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

const LexicalEntry& Lexicon::at(const std::string& token) const {
  const auto* entry = find(token);
  if (entry == nullptr) throw LookupError(token);
  return *entry;
}

void Lexicon::check(const LexicalEntry& entry) const {
  if (!is_valid_token(entry.token())) {
    throw InvalidArgument("invalid token '" + entry.token() + "' (must be nonempty, no whitespace)");
  }
  if (!(entry.layout() == layout_)) {
    throw DimensionError("entry '" + entry.token() + "' has layout " + to_string(entry.layout()) +
                         ", lexicon has " + to_string(layout_));
  }
}

void Lexicon::add(LexicalEntry entry) {
  check(entry);
  if (contains(entry.token())) throw InvalidArgument("duplicate token '" + entry.token() + "'");
  index_.emplace(entry.token(), entries_.size());
  entries_.push_back(std::move(entry));
}

void Lexicon::put(LexicalEntry entry) {
  check(entry);
  const auto it = index_.find(entry.token());
  if (it == index_.end()) {
    index_.emplace(entry.token(), entries_.size());
    entries_.push_back(std::move(entry));
  } else {
    entries_[it->second] = std::move(entry);
  }
}

bool Lexicon::operator==(const Lexicon& other) const {
  return layout_ == other.layout_ && mu_default_ == other.mu_default_ && entries_ == other.entries_;
}

Lexicon init_random(std::span<const std::string> tokens, const SegmentLayout& layout,
                    std::uint64_t seed, double noise) {
  if (tokens.empty()) throw InvalidArgument("init_random: no tokens");
  if (!std::isfinite(noise) || noise < 0.0) throw InvalidArgument("init_random: noise must be >= 0");
  const std::size_t n = layout.total();
  SeededGenerator gen(seed);
  Lexicon lex(layout);
  for (const auto& token : tokens) {
    Vector v(n);
    for (double& x : v) x = gen.uniform_pm1();
    DenseMatrix m = DenseMatrix::identity(n);
    for (double& x : m.entries()) x += noise * gen.standard_normal();
    lex.add(LexicalEntry(token, SemanticVector(std::move(v), layout),
                         FunctionMatrix(std::move(m), layout), 1.0));
  }
  return lex;
}

Lexicon set_function_word(const Lexicon& lex, const std::string& token, FunctionWordPreset preset) {
  const auto& layout = lex.layout();
  Lexicon out = lex;
  switch (preset.kind) {
    case FunctionWordPreset::Kind::negation: {
      if (layout.d_inverted() == 0) {
        throw DegenerateNegationError("negation preset needs d_inverted >= 1, layout is " +
                                      to_string(layout));
      }
      const NegationOperator op(preset.mu, layout);
      out.put(LexicalEntry(token, SemanticVector::zero(layout), make_negation_matrix(op), 0.0));
      out.set_mu_default(preset.mu);
      break;
    }
    case FunctionWordPreset::Kind::identity:
      out.put(LexicalEntry(token, SemanticVector::zero(layout), FunctionMatrix::identity(layout), 1.0));
      break;
  }
  return out;
}

void save(const Lexicon& lex, std::ostream& out) {
  const auto& layout = lex.layout();
  out << "TRIPSEM 1\n";
  out << "layout " << layout.d_domain() << ' ' << layout.d_stable() << ' ' << layout.d_inverted() << '\n';
  for (const auto& e : lex.entries()) {
    out << "word " << e.token() << ' ' << format_double(e.alpha()) << '\n';
    out << "v " << format_values(e.v().values()) << '\n';
    for (std::size_t i = 0; i < e.m().size(); ++i) {
      out << "m " << format_values(e.m().matrix().row(i)) << '\n';
    }
  }
}

void save(const Lexicon& lex, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  save(lex, out);
  out.flush();
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

namespace {

// Significant lines only; comments ('#' in column 0) and blank lines are skipped.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Returns false at end of input.
  bool next(std::vector<std::string>& fields) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty() && line.front() == '#') continue;
      std::istringstream ss(line);
      fields.clear();
      for (std::string f; ss >> f;) fields.push_back(std::move(f));
      if (fields.empty()) continue;
      return true;
    }
    return false;
  }

  std::size_t line() const noexcept { return line_no_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("line " + std::to_string(line_no_) + ": " + what, line_no_);
  }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

std::size_t parse_count(const LineReader& reader, const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    reader.fail("expected a non-negative integer, got '" + text + "'");
  }
  return std::stoul(text);
}

Vector parse_row(const LineReader& reader, const std::vector<std::string>& fields, const char* tag,
                 std::size_t n) {
  if (fields.front() != tag) reader.fail(std::string("expected '") + tag + "' line, got '" + fields.front() + "'");
  if (fields.size() - 1 != n) {
    reader.fail(std::string("'") + tag + "' line has " + std::to_string(fields.size() - 1) +
                " values, layout needs " + std::to_string(n));
  }
  Vector row(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = parse_double(fields[i + 1]);
    if (!x) reader.fail("invalid or non-finite number '" + fields[i + 1] + "'");
    row[i] = *x;
  }
  return row;
}

// mu recovered from an installed negation preset, if "not" is one.
std::optional<double> preset_mu(const LexicalEntry& e) {
  const auto& layout = e.layout();
  if (layout.d_inverted() == 0 || e.alpha() != 0.0 || !e.v().is_zero()) return std::nullopt;
  const double mu = -e.m()(layout.total() - 1, layout.total() - 1);
  if (!(mu > 0.0 && mu <= 1.0)) return std::nullopt;
  if (!(make_negation_matrix(NegationOperator(mu, layout)) == e.m())) return std::nullopt;
  return mu;
}

}  // namespace

Lexicon load(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> fields;
  if (!reader.next(fields) || fields.size() != 2 || fields[0] != "TRIPSEM" || fields[1] != "1") {
    reader.fail("expected header 'TRIPSEM 1'");
  }
  if (!reader.next(fields) || fields.size() != 4 || fields[0] != "layout") {
    reader.fail("expected 'layout <d_domain> <d_stable> <d_inverted>'");
  }
  const std::size_t dd = parse_count(reader, fields[1]);
  const std::size_t ds = parse_count(reader, fields[2]);
  const std::size_t di = parse_count(reader, fields[3]);
  if (dd + ds + di == 0) reader.fail("layout must have at least one dimension");
  const SegmentLayout layout(dd, ds, di);
  const std::size_t n = layout.total();

  Lexicon lex(layout);
  while (reader.next(fields)) {
    if (fields[0] != "word" || fields.size() != 3) reader.fail("expected 'word <token> <alpha>'");
    const std::string token = fields[1];
    const auto alpha = parse_double(fields[2]);
    if (!alpha || *alpha < 0.0) reader.fail("alpha must be a finite number >= 0, got '" + fields[2] + "'");
    if (lex.contains(token)) reader.fail("duplicate token '" + token + "'");

    if (!reader.next(fields)) reader.fail("unexpected end of input, expected 'v' line for '" + token + "'");
    Vector v = parse_row(reader, fields, "v", n);
    std::vector<double> m;
    m.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!reader.next(fields)) {
        reader.fail("unexpected end of input, expected 'm' row " + std::to_string(i + 1) + " for '" + token + "'");
      }
      const Vector row = parse_row(reader, fields, "m", n);
      m.insert(m.end(), row.begin(), row.end());
    }
    lex.add(LexicalEntry(token, SemanticVector(std::move(v), layout),
                         FunctionMatrix(DenseMatrix(n, n, std::move(m)), layout), *alpha));
  }

  if (const auto* neg = lex.find("not")) {
    if (const auto mu = preset_mu(*neg)) lex.set_mu_default(*mu);
  }
  return lex;
}

Lexicon load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return load(in);
}

}  // namespace tripsem
