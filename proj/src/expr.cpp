#include "jfa/expr.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

#include "jfa/error.hpp"
#include "jfa/machine.hpp"
#include "text.hpp"

namespace jfa {

const char* to_string(ExprFlavor flavor) noexcept {
  switch (flavor) {
    case ExprFlavor::Regular: return "regular";
    case ExprFlavor::Shuf: return "shuf";
    case ExprFlavor::AlphaShuf: return "alpha-shuf";
    case ExprFlavor::Mixed: return "mixed";
  }
  return "?";
}

// -------------------------------------------------------------------- Expr

namespace {

ExprPtr make_node(ExprKind kind, ExprPtr left = nullptr,
                  ExprPtr right = nullptr, Word atom = {}) {
  return std::make_shared<const ExprNode>(
      ExprNode{kind, std::move(atom), std::move(left), std::move(right)});
}

bool is_binary(ExprKind k) {
  return k == ExprKind::Union || k == ExprKind::Concat ||
         k == ExprKind::Shuffle;
}

bool is_unary(ExprKind k) {
  return k == ExprKind::Star || k == ExprKind::IterShuffle;
}

}  // namespace

Expr::Expr(Alphabet alphabet, ExprPtr root)
    : alphabet_(std::move(alphabet)), root_(std::move(root)) {
  if (!root_) throw DomainError("null expression");
}

Expr Expr::empty_set(const Alphabet& a) {
  return Expr(a, make_node(ExprKind::EmptySet));
}

Expr Expr::epsilon(const Alphabet& a) {
  return Expr(a, make_node(ExprKind::Epsilon));
}

Expr Expr::atom(const Alphabet& a, Word w) {
  if (w.empty()) throw DomainError("atoms must be non-empty words");
  for (Symbol s : w)
    if (s >= a.size()) throw MismatchError("atom symbol outside alphabet");
  return Expr(a, make_node(ExprKind::Atom, nullptr, nullptr, std::move(w)));
}

Expr Expr::letterized(const Alphabet& a, const Word& w) {
  if (w.empty()) return epsilon(a);
  Expr e = symbol(a, w[0]);
  for (std::size_t i = 1; i < w.size(); ++i) e = e.shuffle(symbol(a, w[i]));
  return e;
}

Expr Expr::binary(ExprKind kind, const Expr& rhs) const {
  if (!(alphabet_ == rhs.alphabet_))
    throw MismatchError("expressions over different alphabets");
  return Expr(alphabet_, make_node(kind, root_, rhs.root_));
}

Expr Expr::operator+(const Expr& rhs) const {
  return binary(ExprKind::Union, rhs);
}
Expr Expr::concat(const Expr& rhs) const {
  return binary(ExprKind::Concat, rhs);
}
Expr Expr::shuffle(const Expr& rhs) const {
  return binary(ExprKind::Shuffle, rhs);
}
Expr Expr::star() const {
  return Expr(alphabet_, make_node(ExprKind::Star, root_));
}
Expr Expr::iter_shuffle() const {
  return Expr(alphabet_, make_node(ExprKind::IterShuffle, root_));
}

namespace {

bool same_tree(const ExprNode& a, const ExprNode& b) {
  if (&a == &b) return true;
  if (a.kind != b.kind) return false;
  if (a.kind == ExprKind::Atom) return a.atom == b.atom;
  if (is_unary(a.kind)) return same_tree(*a.left, *b.left);
  if (is_binary(a.kind))
    return same_tree(*a.left, *b.left) && same_tree(*a.right, *b.right);
  return true;
}

}  // namespace

bool Expr::operator==(const Expr& other) const {
  return alphabet_ == other.alphabet_ && same_tree(*root_, *other.root_);
}

// ------------------------------------------------------------------ parser

namespace {

enum class Lex {
  LParen, RParen, Plus, Dot, Amp, Star, AmpStar, EmptySet, Epsilon, Comma,
  Token, End,
};

struct Lexeme {
  Lex kind;
  std::string_view text;
  std::size_t offset;
};

class Parser {
 public:
  Parser(std::string_view text, const Alphabet& alphabet)
      : text_(text), alphabet_(alphabet) {
    tokenize();
  }

  // Distinct word tokens in order of first appearance.
  std::vector<std::string> tokens() const {
    std::vector<std::string> out;
    for (const auto& lx : lexemes_)
      if (lx.kind == Lex::Token &&
          std::find(out.begin(), out.end(), lx.text) == out.end())
        out.emplace_back(lx.text);
    return out;
  }

  Expr parse() {
    Expr e = parse_union();
    if (peek().kind != Lex::End) fail("unexpected input", peek().offset);
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t offset) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

  void tokenize() {
    std::size_t i = 0;
    while (i < text_.size()) {
      char c = text_[i];
      if (detail::is_space(c)) {
        ++i;
        continue;
      }
      std::size_t start = i;
      auto push = [&](Lex k, std::size_t len) {
        lexemes_.push_back({k, text_.substr(start, len), start});
        i += len;
      };
      switch (c) {
        case '(': push(Lex::LParen, 1); break;
        case ')': push(Lex::RParen, 1); break;
        case '+': push(Lex::Plus, 1); break;
        case '.': push(Lex::Dot, 1); break;
        case ',': push(Lex::Comma, 1); break;
        case '*': push(Lex::Star, 1); break;
        case '&':
          if (i + 1 < text_.size() && text_[i + 1] == '*')
            push(Lex::AmpStar, 2);
          else
            push(Lex::Amp, 1);
          break;
        case '#':
          if (i + 1 < text_.size() && text_[i + 1] == 'E')
            push(Lex::EmptySet, 2);
          else if (i + 1 < text_.size() && text_[i + 1] == 'e')
            push(Lex::Epsilon, 2);
          else
            fail("reserved character '#' must start #E or #e", i);
          if (i < text_.size() && !detail::is_space(text_[i]) &&
              !Alphabet::reserved_char(text_[i]))
            fail("reserved character '#' must start #E or #e", start);
          break;
        case '@':
          fail("reserved token '@' is not allowed in expressions (use #e)", i);
        default: {
          std::size_t j = i;
          while (j < text_.size() && !detail::is_space(text_[j]) &&
                 !Alphabet::reserved_char(text_[j]))
            ++j;
          push(Lex::Token, j - i);
        }
      }
    }
    lexemes_.push_back({Lex::End, {}, text_.size()});
  }

  const Lexeme& peek() const { return lexemes_[pos_]; }
  const Lexeme& next() { return lexemes_[pos_++]; }

  Expr parse_union() {
    Expr e = parse_term();
    while (peek().kind == Lex::Plus) {
      next();
      e = e + parse_term();
    }
    return e;
  }

  Expr parse_term() {
    Expr e = parse_postfix();
    while (peek().kind == Lex::Dot || peek().kind == Lex::Amp) {
      bool shuffle = next().kind == Lex::Amp;
      Expr rhs = parse_postfix();
      e = shuffle ? e.shuffle(rhs) : e.concat(rhs);
    }
    return e;
  }

  Expr parse_postfix() {
    Expr e = parse_primary();
    while (peek().kind == Lex::Star || peek().kind == Lex::AmpStar) {
      e = next().kind == Lex::Star ? e.star() : e.iter_shuffle();
    }
    return e;
  }

  Expr parse_primary() {
    const Lexeme& lx = next();
    switch (lx.kind) {
      case Lex::LParen: {
        Expr e = parse_union();
        if (peek().kind != Lex::RParen) fail("expected ')'", peek().offset);
        next();
        return e;
      }
      case Lex::EmptySet: return Expr::empty_set(alphabet_);
      case Lex::Epsilon: return Expr::epsilon(alphabet_);
      case Lex::Token: {
        Word w;
        w.push_back(lookup(lx));
        while (peek().kind == Lex::Comma) {
          next();
          const Lexeme& t = next();
          if (t.kind != Lex::Token) fail("expected token after ','", t.offset);
          w.push_back(lookup(t));
        }
        return Expr::atom(alphabet_, std::move(w));
      }
      case Lex::End: fail("unexpected end of expression", lx.offset);
      default: fail("unexpected '" + std::string(lx.text) + "'", lx.offset);
    }
  }

  Symbol lookup(const Lexeme& lx) const {
    auto s = alphabet_.find(lx.text);
    if (!s) fail("unknown token '" + std::string(lx.text) + "'", lx.offset);
    return *s;
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::vector<Lexeme> lexemes_;
  std::size_t pos_ = 0;
};

void print_into(const ExprNode& n, const Alphabet& a, std::string& out) {
  switch (n.kind) {
    case ExprKind::EmptySet: out += "#E"; return;
    case ExprKind::Epsilon: out += "#e"; return;
    case ExprKind::Atom: out += format_word(n.atom, a); return;
    case ExprKind::Star:
      print_into(*n.left, a, out);
      out += "*";
      return;
    case ExprKind::IterShuffle:
      print_into(*n.left, a, out);
      out += "&*";
      return;
    case ExprKind::Union:
    case ExprKind::Concat:
    case ExprKind::Shuffle: {
      out += '(';
      print_into(*n.left, a, out);
      out += n.kind == ExprKind::Union ? "+" : n.kind == ExprKind::Concat ? "." : "&";
      print_into(*n.right, a, out);
      out += ')';
      return;
    }
  }
}

template <typename Pred>
bool any_node(const ExprNode& n, Pred pred) {
  if (pred(n)) return true;
  if (n.left && any_node(*n.left, pred)) return true;
  if (n.right && any_node(*n.right, pred)) return true;
  return false;
}

}  // namespace

Expr parse_expr(std::string_view text, const Alphabet& alphabet) {
  return Parser(text, alphabet).parse();
}

Alphabet expr_alphabet(std::string_view text) {
  return Alphabet(Parser(text, Alphabet{}).tokens());
}

std::string print_expr(const Expr& e) {
  std::string out;
  print_into(e.node(), e.alphabet(), out);
  return out;
}

// ---------------------------------------------------------------- flavours

bool has_shuffle_ops(const Expr& e) {
  return any_node(e.node(), [](const ExprNode& n) {
    return n.kind == ExprKind::Shuffle || n.kind == ExprKind::IterShuffle;
  });
}

bool has_regular_ops(const Expr& e) {
  return any_node(e.node(), [](const ExprNode& n) {
    return n.kind == ExprKind::Concat || n.kind == ExprKind::Star;
  });
}

bool has_long_atoms(const Expr& e) {
  return any_node(e.node(), [](const ExprNode& n) {
    return n.kind == ExprKind::Atom && n.atom.size() > 1;
  });
}

bool is_regular_expr(const Expr& e) { return !has_shuffle_ops(e); }
bool is_shuf_expr(const Expr& e) { return !has_regular_ops(e); }
bool is_alpha_shuf_expr(const Expr& e) {
  return is_shuf_expr(e) && !has_long_atoms(e);
}

ExprFlavor classify(const Expr& e) {
  if (is_alpha_shuf_expr(e)) return ExprFlavor::AlphaShuf;
  if (is_shuf_expr(e)) return ExprFlavor::Shuf;
  if (is_regular_expr(e)) return ExprFlavor::Regular;
  return ExprFlavor::Mixed;
}

std::size_t star_height(const Expr& e) {
  struct Rec {
    static std::size_t of(const ExprNode& n) {
      if (is_unary(n.kind)) return 1 + of(*n.left);
      if (is_binary(n.kind)) return std::max(of(*n.left), of(*n.right));
      return 0;
    }
  };
  return Rec::of(e.node());
}

std::size_t expr_size(const Expr& e) {
  struct Rec {
    static std::size_t of(const ExprNode& n) {
      std::size_t s = 1;
      if (n.left) s += of(*n.left);
      if (n.right) s += of(*n.right);
      return s;
    }
  };
  return Rec::of(e.node());
}

// -------------------------------------------------------------- evaluation

namespace {

class Evaluator {
 public:
  Evaluator(const Alphabet& a, std::size_t n) : alphabet_(a), n_(n) {}

  const FiniteLanguage& eval(const ExprNode& node) {
    if (auto it = memo_.find(&node); it != memo_.end()) return it->second;
    FiniteLanguage out(alphabet_);
    switch (node.kind) {
      case ExprKind::EmptySet: break;
      case ExprKind::Epsilon: out.insert(Word{}); break;
      case ExprKind::Atom:
        if (node.atom.size() <= n_) out.insert(node.atom);
        break;
      case ExprKind::Union: out = eval(*node.left).unite(eval(*node.right)); break;
      case ExprKind::Concat:
        out = concat_langs_upto(eval(*node.left), eval(*node.right), n_);
        break;
      case ExprKind::Shuffle:
        out = shuffle_langs_upto(eval(*node.left), eval(*node.right), n_);
        break;
      case ExprKind::Star: out = star_upto(eval(*node.left), n_); break;
      case ExprKind::IterShuffle:
        out = iter_shuffle_upto(eval(*node.left), n_);
        break;
    }
    return memo_.emplace(&node, std::move(out)).first->second;
  }

 private:
  const Alphabet& alphabet_;
  std::size_t n_;
  std::unordered_map<const ExprNode*, FiniteLanguage> memo_;
};

}  // namespace

FiniteLanguage eval_upto(const Expr& e, std::size_t n) {
  Evaluator ev(e.alphabet(), n);
  return ev.eval(e.node());
}

// ------------------------------------------------------------- conversions

namespace {

Expr map_tree(const Expr& e, ExprKind concat_to, ExprKind star_to,
              bool letterize) {
  const ExprNode& n = e.node();
  const Alphabet& a = e.alphabet();
  switch (n.kind) {
    case ExprKind::EmptySet:
    case ExprKind::Epsilon:
      return e;
    case ExprKind::Atom:
      return letterize ? Expr::letterized(a, n.atom) : e;
    case ExprKind::Union:
      return map_tree(e.left(), concat_to, star_to, letterize) +
             map_tree(e.right(), concat_to, star_to, letterize);
    case ExprKind::Concat:
    case ExprKind::Shuffle: {
      Expr l = map_tree(e.left(), concat_to, star_to, letterize);
      Expr r = map_tree(e.right(), concat_to, star_to, letterize);
      return concat_to == ExprKind::Shuffle ? l.shuffle(r) : l.concat(r);
    }
    case ExprKind::Star:
    case ExprKind::IterShuffle: {
      Expr inner = map_tree(e.left(), concat_to, star_to, letterize);
      return star_to == ExprKind::IterShuffle ? inner.iter_shuffle()
                                              : inner.star();
    }
  }
  return e;
}

}  // namespace

Expr regex_to_alpha_shuf(const Expr& e) {
  if (has_shuffle_ops(e))
    throw DomainError("regex_to_alpha_shuf: input contains shuffle operators");
  return map_tree(e, ExprKind::Shuffle, ExprKind::IterShuffle, true);
}

Expr alpha_shuf_to_regex(const Expr& e) {
  if (has_regular_ops(e))
    throw DomainError(
        "alpha_shuf_to_regex: input contains catenation or star");
  return map_tree(e, ExprKind::Concat, ExprKind::Star, false);
}

Expr finite_permclosed_to_alpha_shuf(const FiniteLanguage& lang) {
  if (!is_perm_closed(lang))
    throw DomainError("finite_permclosed_to_alpha_shuf: language is not "
                      "perm-closed");
  const Alphabet& a = lang.alphabet();
  std::set<ParikhVector> classes;
  for (const Word& w : lang) classes.insert(parikh(w, a));
  std::optional<Expr> out;
  for (const ParikhVector& v : classes) {
    Expr term = Expr::letterized(a, canonical_word(v));
    out = out ? *out + term : term;
  }
  return out ? *out : Expr::empty_set(a);
}

Expr rebind(const Expr& e, const Alphabet& target) {
  struct Rec {
    const Alphabet& from;
    const Alphabet& to;
    Expr go(const Expr& x) const {
      const ExprNode& n = x.node();
      switch (n.kind) {
        case ExprKind::EmptySet: return Expr::empty_set(to);
        case ExprKind::Epsilon: return Expr::epsilon(to);
        case ExprKind::Atom: {
          Word w;
          for (Symbol s : n.atom) w.push_back(to.symbol(from.token(s)));
          return Expr::atom(to, std::move(w));
        }
        case ExprKind::Union: return go(x.left()) + go(x.right());
        case ExprKind::Concat: return go(x.left()).concat(go(x.right()));
        case ExprKind::Shuffle: return go(x.left()).shuffle(go(x.right()));
        case ExprKind::Star: return go(x.left()).star();
        case ExprKind::IterShuffle: return go(x.left()).iter_shuffle();
      }
      return x;
    }
  };
  return Rec{e.alphabet(), target}.go(e);
}

Expr simplified_union(const Expr& a, const Expr& b) {
  if (a.kind() == ExprKind::EmptySet) return b;
  if (b.kind() == ExprKind::EmptySet) return a;
  if (a == b) return a;
  return a + b;
}

Expr simplified_concat(const Expr& a, const Expr& b) {
  if (a.kind() == ExprKind::EmptySet || b.kind() == ExprKind::EmptySet)
    return Expr::empty_set(a.alphabet());
  if (a.kind() == ExprKind::Epsilon) return b;
  if (b.kind() == ExprKind::Epsilon) return a;
  return a.concat(b);
}

Expr simplified_star(const Expr& a) {
  if (a.kind() == ExprKind::EmptySet || a.kind() == ExprKind::Epsilon)
    return Expr::epsilon(a.alphabet());
  if (a.kind() == ExprKind::Star) return a;
  return a.star();
}

// ---------------------------------------------------------------- Thompson

namespace {

class ThompsonBuilder {
 public:
  explicit ThompsonBuilder(const Alphabet& a) : m_(a) {}

  std::pair<StateId, StateId> build(const ExprNode& n) {
    StateId s = fresh();
    StateId e = s;
    switch (n.kind) {
      case ExprKind::EmptySet:
        e = fresh();
        break;
      case ExprKind::Epsilon:
        e = fresh();
        m_.add_rule(s, {}, e);
        break;
      case ExprKind::Atom: {
        StateId cur = s;
        for (Symbol sym : n.atom) {
          StateId nxt = fresh();
          m_.add_rule(cur, Word{sym}, nxt);
          cur = nxt;
        }
        e = cur;
        break;
      }
      case ExprKind::Union: {
        auto [s1, e1] = build(*n.left);
        auto [s2, e2] = build(*n.right);
        e = fresh();
        m_.add_rule(s, {}, s1);
        m_.add_rule(s, {}, s2);
        m_.add_rule(e1, {}, e);
        m_.add_rule(e2, {}, e);
        break;
      }
      case ExprKind::Concat:
      case ExprKind::Shuffle: {
        auto [s1, e1] = build(*n.left);
        auto [s2, e2] = build(*n.right);
        m_.add_rule(s, {}, s1);
        m_.add_rule(e1, {}, s2);
        e = e2;
        break;
      }
      case ExprKind::Star:
      case ExprKind::IterShuffle: {
        auto [s1, e1] = build(*n.left);
        e = fresh();
        m_.add_rule(s, {}, s1);
        m_.add_rule(e1, {}, e);
        m_.add_rule(s, {}, e);
        m_.add_rule(e1, {}, s1);
        break;
      }
    }
    return {s, e};
  }

  Machine finish(StateId start, StateId end) {
    m_.set_start(start);
    m_.add_final(end);
    return std::move(m_);
  }

 private:
  StateId fresh() { return m_.add_state("t" + std::to_string(next_++)); }

  Machine m_;
  std::size_t next_ = 0;
};

}  // namespace

Machine thompson_machine(const Expr& e) {
  ThompsonBuilder b(e.alphabet());
  auto [s, f] = b.build(e.node());
  return b.finish(s, f);
}


// ------------------------------------------------------- state elimination

Expr state_elimination(const Machine& m) {
  if (m.kind() != MachineKind::FiniteMachine)
    throw DomainError("state elimination needs a finite machine");
  const Alphabet& a = m.alphabet();
  const std::size_t n = m.num_states();
  // Nodes 0..n-1 are machine states, n is a fresh source, n+1 a fresh sink.
  const std::size_t src = n, dst = n + 1, total = n + 2;
  std::vector<std::vector<std::optional<Expr>>> edge(
      total, std::vector<std::optional<Expr>>(total));
  auto add = [&](std::size_t i, std::size_t j, const Expr& e) {
    edge[i][j] = edge[i][j] ? simplified_union(*edge[i][j], e) : e;
  };
  add(src, m.start(), Expr::epsilon(a));
  for (StateId f : m.finals()) add(f, dst, Expr::epsilon(a));
  for (const Rule& r : m.rules())
    add(r.from, r.to, r.label.empty() ? Expr::epsilon(a) : Expr::atom(a, r.label));

  for (std::size_t q = 0; q < n; ++q) {
    std::optional<Expr> loop;
    if (edge[q][q]) loop = simplified_star(*edge[q][q]);
    for (std::size_t i = 0; i < total; ++i) {
      if (i == q || !edge[i][q]) continue;
      Expr in = loop ? simplified_concat(*edge[i][q], *loop) : *edge[i][q];
      for (std::size_t j = 0; j < total; ++j) {
        if (j == q || !edge[q][j]) continue;
        add(i, j, simplified_concat(in, *edge[q][j]));
      }
    }
    for (std::size_t i = 0; i < total; ++i) {
      edge[i][q].reset();
      edge[q][i].reset();
    }
  }
  return edge[src][dst] ? *edge[src][dst] : Expr::empty_set(a);
}

}  // namespace jfa
