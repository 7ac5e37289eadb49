#include "jfa/core.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "jfa/error.hpp"
#include "text.hpp"

namespace jfa {

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet() : data_(std::make_shared<const Data>()) {}

Alphabet::Alphabet(std::vector<std::string> tokens) {
  auto data = std::make_shared<Data>();
  if (tokens.size() > std::numeric_limits<Symbol>::max())
    throw DomainError("alphabet too large");
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!valid_token(tokens[i]))
      throw ParseError("invalid alphabet token '" + tokens[i] + "'", 0, 0);
    if (!data->index.emplace(tokens[i], static_cast<Symbol>(i)).second)
      throw ParseError("duplicate alphabet token '" + tokens[i] + "'", 0, 0);
  }
  data->tokens = std::move(tokens);
  data_ = std::move(data);
}

std::optional<Symbol> Alphabet::find(std::string_view token) const {
  auto it = data_->index.find(std::string(token));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

Symbol Alphabet::symbol(std::string_view token) const {
  if (auto s = find(token)) return *s;
  throw ParseError("unknown token '" + std::string(token) + "'", 0, 0);
}

bool Alphabet::operator==(const Alphabet& other) const noexcept {
  return data_ == other.data_ || data_->tokens == other.data_->tokens;
}

bool Alphabet::reserved_char(char c) noexcept {
  switch (c) {
    case ',': case '@': case '#': case '(': case ')':
    case '+': case '.': case '*': case '&':
      return true;
    default:
      return false;
  }
}

bool Alphabet::valid_token(std::string_view token) noexcept {
  if (token.empty()) return false;
  for (char c : token) {
    if (reserved_char(c) || detail::is_space(c) || c == ';' || c == ':')
      return false;
  }
  return true;
}

// -------------------------------------------------------------------- Word

std::strong_ordering Word::operator<=>(const Word& other) const noexcept {
  if (auto c = symbols_.size() <=> other.symbols_.size(); c != 0) return c;
  return symbols_ <=> other.symbols_;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Symbol s : w) {
    h ^= s + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h ^ w.size();
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::string_view t = detail::trim(text);
  if (t == "@") return {};
  if (t.empty()) throw ParseError("empty word literal (use '@' for ε)", 0, 0);
  Word w;
  for (std::string_view part : detail::split(t, ',')) {
    part = detail::trim(part);
    if (part.empty()) throw ParseError("empty token in word literal", 0, 0);
    w.push_back(alphabet.symbol(part));
  }
  return w;
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "@";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += alphabet.token(w[i]);
  }
  return out;
}

Word word_of(std::string_view chars, const Alphabet& alphabet) {
  Word w;
  for (char c : chars) w.push_back(alphabet.symbol(std::string_view(&c, 1)));
  return w;
}

// ------------------------------------------------------------ ParikhVector

std::uint64_t ParikhVector::total() const noexcept {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

bool ParikhVector::is_zero() const noexcept {
  return std::all_of(counts.begin(), counts.end(),
                     [](std::uint32_t c) { return c == 0; });
}

ParikhVector ParikhVector::operator+(const ParikhVector& other) const {
  if (dim() != other.dim())
    throw MismatchError("Parikh vector dimension mismatch");
  ParikhVector r = *this;
  for (std::size_t i = 0; i < dim(); ++i) r.counts[i] += other.counts[i];
  return r;
}

std::optional<ParikhVector> ParikhVector::minus(
    const ParikhVector& other) const {
  if (dim() != other.dim())
    throw MismatchError("Parikh vector dimension mismatch");
  ParikhVector r = *this;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (other.counts[i] > counts[i]) return std::nullopt;
    r.counts[i] -= other.counts[i];
  }
  return r;
}

std::size_t ParikhHash::operator()(const ParikhVector& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto c : v.counts) h = (h ^ c) * 0x100000001b3ull;
  return h;
}

ParikhVector parikh(const Word& w, const Alphabet& alphabet) {
  ParikhVector v(alphabet.size());
  for (Symbol s : w) {
    if (s >= alphabet.size())
      throw MismatchError("word symbol outside alphabet");
    ++v.counts[s];
  }
  return v;
}

Word canonical_word(const ParikhVector& v) {
  Word w;
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::uint32_t k = 0; k < v[i]; ++k) w.push_back(static_cast<Symbol>(i));
  return w;
}

// ---------------------------------------------------------- FiniteLanguage

FiniteLanguage::FiniteLanguage(Alphabet alphabet,
                               std::initializer_list<Word> words)
    : alphabet_(std::move(alphabet)) {
  for (const Word& w : words) insert(w);
}

FiniteLanguage::FiniteLanguage(Alphabet alphabet, std::set<Word> words)
    : alphabet_(std::move(alphabet)) {
  for (const Word& w : words)
    for (Symbol s : w)
      if (s >= alphabet_.size())
        throw MismatchError("word symbol outside alphabet");
  words_ = std::move(words);
}

std::size_t FiniteLanguage::max_length() const noexcept {
  return words_.empty() ? 0 : words_.rbegin()->size();
}

void FiniteLanguage::insert(Word w) {
  for (Symbol s : w)
    if (s >= alphabet_.size())
      throw MismatchError("word symbol outside alphabet");
  words_.insert(std::move(w));
}

namespace {

void require_same(const Alphabet& a, const Alphabet& b) {
  if (!(a == b)) throw MismatchError("languages over different alphabets");
}

}  // namespace

FiniteLanguage FiniteLanguage::unite(const FiniteLanguage& other) const {
  require_same(alphabet_, other.alphabet_);
  FiniteLanguage r = *this;
  r.words_.insert(other.words_.begin(), other.words_.end());
  return r;
}

FiniteLanguage FiniteLanguage::intersect(const FiniteLanguage& other) const {
  require_same(alphabet_, other.alphabet_);
  FiniteLanguage r(alphabet_);
  std::set_intersection(words_.begin(), words_.end(), other.words_.begin(),
                        other.words_.end(),
                        std::inserter(r.words_, r.words_.end()));
  return r;
}

FiniteLanguage FiniteLanguage::minus(const FiniteLanguage& other) const {
  require_same(alphabet_, other.alphabet_);
  FiniteLanguage r(alphabet_);
  std::set_difference(words_.begin(), words_.end(), other.words_.begin(),
                      other.words_.end(),
                      std::inserter(r.words_, r.words_.end()));
  return r;
}

FiniteLanguage FiniteLanguage::truncate(std::size_t n) const {
  FiniteLanguage r(alphabet_);
  for (const Word& w : words_) {
    if (w.size() > n) break;
    r.words_.insert(r.words_.end(), w);
  }
  return r;
}

bool FiniteLanguage::subset_of(const FiniteLanguage& other) const {
  require_same(alphabet_, other.alphabet_);
  return std::includes(other.words_.begin(), other.words_.end(),
                       words_.begin(), words_.end());
}

bool FiniteLanguage::operator==(const FiniteLanguage& other) const {
  return alphabet_ == other.alphabet_ && words_ == other.words_;
}

FiniteLanguage parse_language(std::string_view text,
                              const Alphabet& alphabet) {
  FiniteLanguage lang(alphabet);
  std::size_t lineno = 0;
  for (std::string_view line : detail::split(text, '\n')) {
    ++lineno;
    line = detail::trim(detail::strip_comment(line));
    if (line.empty()) continue;
    try {
      lang.insert(parse_word(line, alphabet));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno, 1);
    }
  }
  return lang;
}

std::string format_language(const FiniteLanguage& lang) {
  std::string out;
  for (const Word& w : lang) {
    out += format_word(w, lang.alphabet());
    out += '\n';
  }
  return out;
}

FiniteLanguage all_words_upto(const Alphabet& alphabet, std::size_t n) {
  FiniteLanguage out(alphabet);
  std::vector<Word> layer{Word{}};
  std::set<Word> words{Word{}};
  for (std::size_t len = 1; len <= n && !alphabet.empty(); ++len) {
    std::vector<Word> next;
    next.reserve(layer.size() * alphabet.size());
    for (const Word& w : layer) {
      for (Symbol s = 0; s < alphabet.size(); ++s) {
        Word x = w;
        x.push_back(s);
        next.push_back(std::move(x));
      }
    }
    words.insert(next.begin(), next.end());
    layer = std::move(next);
  }
  return FiniteLanguage(alphabet, std::move(words));
}

// ----------------------------------------------------------------- shuffle

namespace {

// Interleavings of u[i..] and v[j..], memoized on (i, j).
class ShuffleTable {
 public:
  ShuffleTable(const Word& u, const Word& v)
      : u_(u), v_(v), memo_((u.size() + 1) * (v.size() + 1)) {}

  const std::vector<Word>& get(std::size_t i, std::size_t j) {
    auto& slot = memo_[i * (v_.size() + 1) + j];
    if (slot) return *slot;
    std::vector<Word> out;
    if (i == u_.size() || j == v_.size()) {
      Word rest;
      for (std::size_t k = i; k < u_.size(); ++k) rest.push_back(u_[k]);
      for (std::size_t k = j; k < v_.size(); ++k) rest.push_back(v_[k]);
      out.push_back(std::move(rest));
    } else {
      for (const Word& tail : get(i + 1, j)) out.push_back(prefixed(u_[i], tail));
      for (const Word& tail : get(i, j + 1)) out.push_back(prefixed(v_[j], tail));
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    slot = std::move(out);
    return *slot;
  }

 private:
  static Word prefixed(Symbol s, const Word& tail) {
    std::vector<Symbol> syms;
    syms.reserve(tail.size() + 1);
    syms.push_back(s);
    syms.insert(syms.end(), tail.begin(), tail.end());
    return Word(std::move(syms));
  }

  const Word& u_;
  const Word& v_;
  std::vector<std::optional<std::vector<Word>>> memo_;
};

}  // namespace

FiniteLanguage shuffle_words(const Alphabet& alphabet, const Word& u,
                             const Word& v) {
  FiniteLanguage out(alphabet);
  ShuffleTable table(u, v);
  for (const Word& w : table.get(0, 0)) out.insert(w);
  return out;
}

FiniteLanguage shuffle_langs_upto(const FiniteLanguage& a,
                                  const FiniteLanguage& b, std::size_t n) {
  require_same(a.alphabet(), b.alphabet());
  std::set<Word> out;
  for (const Word& u : a) {
    if (u.size() > n) break;
    for (const Word& v : b) {
      if (u.size() + v.size() > n) break;
      if (u.empty()) {
        out.insert(v);
      } else if (v.empty()) {
        out.insert(u);
      } else {
        ShuffleTable table(u, v);
        const auto& ws = table.get(0, 0);
        out.insert(ws.begin(), ws.end());
      }
    }
  }
  return FiniteLanguage(a.alphabet(), std::move(out));
}

FiniteLanguage shuffle_langs(const FiniteLanguage& a, const FiniteLanguage& b) {
  return shuffle_langs_upto(a, b, std::numeric_limits<std::size_t>::max());
}

FiniteLanguage concat_langs_upto(const FiniteLanguage& a,
                                 const FiniteLanguage& b, std::size_t n) {
  require_same(a.alphabet(), b.alphabet());
  std::set<Word> out;
  for (const Word& u : a) {
    if (u.size() > n) break;
    for (const Word& v : b) {
      if (u.size() + v.size() > n) break;
      out.insert(u.concat(v));
    }
  }
  return FiniteLanguage(a.alphabet(), std::move(out));
}

FiniteLanguage concat_langs(const FiniteLanguage& a, const FiniteLanguage& b) {
  return concat_langs_upto(a, b, std::numeric_limits<std::size_t>::max());
}

namespace {

template <typename Step>
FiniteLanguage closure_upto(const FiniteLanguage& lang, std::size_t n,
                            Step step) {
  FiniteLanguage result(lang.alphabet(), {Word{}});
  FiniteLanguage frontier = result;
  const FiniteLanguage base = lang.truncate(n);
  while (!frontier.empty()) {
    FiniteLanguage grown = step(frontier, base, n).minus(result);
    result = result.unite(grown);
    frontier = std::move(grown);
  }
  return result;
}

}  // namespace

FiniteLanguage iter_shuffle_upto(const FiniteLanguage& lang, std::size_t n) {
  return closure_upto(lang, n, [](const auto& a, const auto& b, std::size_t k) {
    return shuffle_langs_upto(a, b, k);
  });
}

FiniteLanguage star_upto(const FiniteLanguage& lang, std::size_t n) {
  return closure_upto(lang, n, [](const auto& a, const auto& b, std::size_t k) {
    return concat_langs_upto(a, b, k);
  });
}

// ------------------------------------------------------------- permutation

FiniteLanguage perm_word(const Alphabet& alphabet, const Word& w) {
  std::vector<Symbol> syms = w.symbols();
  std::sort(syms.begin(), syms.end());
  std::set<Word> out;
  do {
    out.insert(out.end(), Word(syms));
  } while (std::next_permutation(syms.begin(), syms.end()));
  return FiniteLanguage(alphabet, std::move(out));
}

FiniteLanguage perm_closure(const FiniteLanguage& lang) {
  std::set<Word> out;
  for (const Word& w : lang) {
    if (out.contains(w)) continue;
    for (const Word& p : perm_word(lang.alphabet(), w)) out.insert(p);
  }
  return FiniteLanguage(lang.alphabet(), std::move(out));
}

bool is_perm_closed(const FiniteLanguage& lang) {
  return perm_closure(lang).size() == lang.size();
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace jfa
