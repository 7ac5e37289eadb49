#pragma once

// Alphabets, words, Parikh vectors and the shuffle / permutation algebra on
// explicitly enumerated finite languages.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace jfa {

using Symbol = std::uint16_t;

// Ordered set of distinct tokens. The order fixes Parikh coordinates.
// Copies share the underlying token table.
class Alphabet {
 public:
  Alphabet();
  explicit Alphabet(std::vector<std::string> tokens);
  Alphabet(std::initializer_list<std::string> tokens)
      : Alphabet(std::vector<std::string>(tokens)) {}

  std::size_t size() const noexcept { return data_->tokens.size(); }
  bool empty() const noexcept { return size() == 0; }
  const std::string& token(Symbol s) const { return data_->tokens.at(s); }
  const std::vector<std::string>& tokens() const noexcept {
    return data_->tokens;
  }
  std::optional<Symbol> find(std::string_view token) const;
  // Throws ParseError for unknown tokens.
  Symbol symbol(std::string_view token) const;

  bool operator==(const Alphabet& other) const noexcept;

  // True if `token` is usable as an alphabet symbol.
  static bool valid_token(std::string_view token) noexcept;
  static bool reserved_char(char c) noexcept;

 private:
  struct Data {
    std::vector<std::string> tokens;
    std::unordered_map<std::string, Symbol> index;
  };
  std::shared_ptr<const Data> data_;
};

// A sequence of symbols. Ordered shortlex: by length, then lexicographically
// by symbol index.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
  Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  std::span<const Symbol> span() const noexcept { return symbols_; }

  void push_back(Symbol s) { symbols_.push_back(s); }
  void append(const Word& other) {
    symbols_.insert(symbols_.end(), other.symbols_.begin(),
                    other.symbols_.end());
  }
  Word concat(const Word& other) const {
    Word w = *this;
    w.append(other);
    return w;
  }

  bool operator==(const Word&) const = default;
  std::strong_ordering operator<=>(const Word& other) const noexcept;

 private:
  std::vector<Symbol> symbols_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

// Parses a word literal: comma-separated tokens, `@` for the empty word.
Word parse_word(std::string_view text, const Alphabet& alphabet);
// Renders a word literal; the empty word prints as `@`.
std::string format_word(const Word& w, const Alphabet& alphabet);
// Builds a word from single-character tokens, e.g. "abc". Test convenience
// for alphabets whose tokens are all one character long.
Word word_of(std::string_view chars, const Alphabet& alphabet);

// Symbol counts of a word, in alphabet order.
struct ParikhVector {
  std::vector<std::uint32_t> counts;

  ParikhVector() = default;
  explicit ParikhVector(std::size_t dim) : counts(dim, 0) {}
  ParikhVector(std::initializer_list<std::uint32_t> c) : counts(c) {}
  explicit ParikhVector(std::vector<std::uint32_t> c) : counts(std::move(c)) {}

  std::size_t dim() const noexcept { return counts.size(); }
  std::uint64_t total() const noexcept;
  bool is_zero() const noexcept;
  std::uint32_t operator[](std::size_t i) const { return counts[i]; }
  std::uint32_t& operator[](std::size_t i) { return counts[i]; }

  ParikhVector operator+(const ParikhVector& other) const;
  // Componentwise difference; nullopt if any coordinate would go negative.
  std::optional<ParikhVector> minus(const ParikhVector& other) const;

  bool operator==(const ParikhVector&) const = default;
  auto operator<=>(const ParikhVector&) const = default;
};

struct ParikhHash {
  std::size_t operator()(const ParikhVector& v) const noexcept;
};

ParikhVector parikh(const Word& w, const Alphabet& alphabet);
// Canonical preimage of a Parikh vector: symbols in alphabet order.
Word canonical_word(const ParikhVector& v);

// A finite set of words over one alphabet, kept in shortlex order.
class FiniteLanguage {
 public:
  explicit FiniteLanguage(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
  FiniteLanguage(Alphabet alphabet, std::initializer_list<Word> words);
  FiniteLanguage(Alphabet alphabet, std::set<Word> words);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::set<Word>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  bool contains(const Word& w) const { return words_.contains(w); }
  auto begin() const noexcept { return words_.begin(); }
  auto end() const noexcept { return words_.end(); }
  std::size_t max_length() const noexcept;

  // Throws MismatchError if a symbol is outside the alphabet.
  void insert(Word w);

  FiniteLanguage unite(const FiniteLanguage& other) const;
  FiniteLanguage intersect(const FiniteLanguage& other) const;
  FiniteLanguage minus(const FiniteLanguage& other) const;
  FiniteLanguage truncate(std::size_t n) const;
  bool subset_of(const FiniteLanguage& other) const;

  bool operator==(const FiniteLanguage& other) const;

 private:
  Alphabet alphabet_;
  std::set<Word> words_;
};

// Language file: one word literal per line, `#` starts a comment.
FiniteLanguage parse_language(std::string_view text, const Alphabet& alphabet);
std::string format_language(const FiniteLanguage& lang);

// All words of length <= n, shortlex order.
FiniteLanguage all_words_upto(const Alphabet& alphabet, std::size_t n);

FiniteLanguage shuffle_words(const Alphabet& alphabet, const Word& u,
                             const Word& v);
FiniteLanguage shuffle_langs(const FiniteLanguage& a, const FiniteLanguage& b);
// Shuffle restricted to results of length <= n.
FiniteLanguage shuffle_langs_upto(const FiniteLanguage& a,
                                  const FiniteLanguage& b, std::size_t n);
FiniteLanguage concat_langs(const FiniteLanguage& a, const FiniteLanguage& b);
FiniteLanguage concat_langs_upto(const FiniteLanguage& a,
                                 const FiniteLanguage& b, std::size_t n);

// Iterated shuffle of L intersected with words of length <= n.
FiniteLanguage iter_shuffle_upto(const FiniteLanguage& lang, std::size_t n);
// Kleene star of L intersected with words of length <= n.
FiniteLanguage star_upto(const FiniteLanguage& lang, std::size_t n);

FiniteLanguage perm_word(const Alphabet& alphabet, const Word& w);
FiniteLanguage perm_closure(const FiniteLanguage& lang);
bool is_perm_closed(const FiniteLanguage& lang);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace jfa
