// jfa: command-line front end for the jfakit library.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "jfa/core.hpp"
#include "jfa/deciders.hpp"
#include "jfa/error.hpp"
#include "jfa/expr.hpp"
#include "jfa/machine.hpp"
#include "jfa/reductions.hpp"
#include "jfa/selftest.hpp"
#include "jfa/semilinear.hpp"

namespace fs = std::filesystem;
using namespace jfa;

namespace {

constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

// Raised for caller mistakes that CLI11 cannot see (bad flag combinations).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Caps {
  std::size_t sat = kDefaultSatCap;
  std::size_t ebc2 = kDefaultEbc2Cap;
  std::size_t sm = kDefaultSmCap;
  std::size_t gjfa = 4;  // n, m or k up to which reduce runs the GJFA search

  std::string str() const {
    return "sat=" + std::to_string(sat) + ",ebc2=" + std::to_string(ebc2) +
           ",sm=" + std::to_string(sm) + ",gjfa=" + std::to_string(gjfa);
  }
};

Caps parse_caps(const std::string& text) {
  Caps caps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--caps: expected key=value, got '" + item + "'");
    std::string key = item.substr(0, eq);
    std::size_t value = 0;
    try {
      std::size_t used = 0;
      value = std::stoul(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw UsageError("--caps: bad number in '" + item + "'");
    }
    if (key == "sat") caps.sat = value;
    else if (key == "ebc2") caps.ebc2 = value;
    else if (key == "sm") caps.sm = value;
    else if (key == "gjfa") caps.gjfa = value;
    else throw UsageError("--caps: unknown cap '" + key + "' (known: sat, ebc2, sm, gjfa)");
  }
  return caps;
}

struct Global {
  std::uint64_t seed = SelftestOptions{}.seed;
  std::size_t bound = 6;
  std::uint32_t box = 6;
  std::string caps_text;
  Caps caps;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
}

// Expression files may carry `# ` comment lines; `#E` and `#e` stay literal.
std::string strip_expr_comments(const std::string& text) {
  std::stringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    auto p = line.find_first_not_of(" \t\r");
    if (p != std::string::npos && line[p] == '#' &&
        (p + 1 == line.size() || line[p + 1] == ' ' || line[p + 1] == '\t' || line[p + 1] == '\r'))
      continue;
    out += line + "\n";
  }
  return out;
}

Semantics parse_mode(const std::string& mode) {
  if (mode == "fa") return Semantics::FA;
  if (mode == "jfa") return Semantics::JFA;
  return Semantics::GJFA;
}

// Either an expression or a machine, as given by -m / --expr / -e.
struct Source {
  std::string machine_file;
  std::string expr_text;
  std::string expr_file;
  std::string alphabet;  // optional override for expressions

  bool has_machine() const { return !machine_file.empty(); }
  bool has_expr() const { return !expr_text.empty() || !expr_file.empty(); }

  void require_one() const {
    int given = has_machine() + !expr_text.empty() + !expr_file.empty();
    if (given != 1) throw UsageError("give exactly one of -m FILE, --expr TEXT, -e FILE");
  }
  Machine machine() const { return parse_machine(slurp(machine_file)); }
  Expr expr() const {
    std::string text = expr_text.empty() ? strip_expr_comments(slurp(expr_file)) : expr_text;
    Alphabet a = alphabet.empty() ? expr_alphabet(text) : parse_alphabet_flag(alphabet);
    return parse_expr(text, a);
  }
  static Alphabet parse_alphabet_flag(const std::string& text) {
    std::vector<std::string> toks;
    std::string cur;
    for (char c : text + ",") {
      if (c == ',' || c == ' ') {
        if (!cur.empty()) toks.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    return Alphabet(toks);
  }
};

void add_source_options(CLI::App* cmd, Source& src) {
  cmd->add_option("-m,--machine", src.machine_file, "machine file ('-' for stdin)");
  cmd->add_option("--expr", src.expr_text, "expression text");
  cmd->add_option("-e,--expr-file", src.expr_file, "expression file");
  cmd->add_option("--alphabet", src.alphabet,
                  "alphabet for expressions, e.g. a,b,c (default: tokens in order of use)");
}

// ------------------------------------------------------------------ member

struct MemberArgs {
  std::string mode = "jfa";
  std::string machine_file;
  std::string word;
};

int cmd_member(const MemberArgs& a) {
  Machine m = parse_machine(slurp(a.machine_file));
  Word w = parse_word(a.word, m.alphabet());
  bool yes = accepts(m, parse_mode(a.mode), w);
  std::cout << (yes ? "yes" : "no") << "\n";
  return yes ? 0 : kExitNo;
}

// --------------------------------------------------------------- enumerate

struct EnumerateArgs {
  std::string mode = "jfa";
  Source src;
  std::optional<std::size_t> n;
};

int cmd_enumerate(const EnumerateArgs& a, const Global& g) {
  a.src.require_one();
  const std::size_t n = a.n.value_or(g.bound);
  FiniteLanguage lang = a.src.has_machine()
                            ? language_upto(a.src.machine(), parse_mode(a.mode), n)
                            : eval_upto(a.src.expr(), n);
  std::cerr << "enumerate: bound n=" << n
            << (a.src.has_machine() ? " mode=" + a.mode : std::string(" source=expr")) << "\n";
  for (const Word& w : lang) std::cout << format_word(w, lang.alphabet()) << "\n";
  return 0;
}

// ----------------------------------------------------------------- convert

struct ConvertArgs {
  std::string from;
  std::string to;
  Source src;
};

int cmd_convert(const ConvertArgs& a, const Global& g) {
  a.src.require_one();
  if (a.from == "machine" && !a.src.has_machine())
    throw UsageError("--from machine needs -m FILE");
  if (a.from != "machine" && a.src.has_machine())
    throw UsageError("--from " + a.from + " needs --expr or -e");

  std::optional<Machine> machine;
  std::optional<Expr> expr;
  if (a.from == "machine") {
    machine = a.src.machine();
    if (machine->kind() != MachineKind::FiniteMachine)
      throw DomainError("convert --from machine needs a finite machine (labels of length <= 1)");
  } else {
    expr = a.src.expr();
    if (a.from == "regex" && !is_regular_expr(*expr))
      throw DomainError("--from regex: expression uses shuffle operators (flavour " +
                        std::string(to_string(classify(*expr))) + ")");
    if (a.from == "alpha-shuf" && !is_alpha_shuf_expr(*expr))
      throw DomainError("--from alpha-shuf: expression is not alpha-SHUF (flavour " +
                        std::string(to_string(classify(*expr))) + ")");
  }
  const Alphabet alphabet = machine ? machine->alphabet() : expr->alphabet();

  // Regular expression for the FA reading of the input.
  auto as_regex = [&]() -> Expr {
    if (machine) return state_elimination(*machine);
    if (a.from == "regex") return *expr;
    return alpha_shuf_to_regex(*expr);
  };
  auto as_alpha_shuf = [&]() -> Expr {
    if (a.from == "alpha-shuf") return *expr;
    return regex_to_alpha_shuf(as_regex());
  };
  auto as_semilinear = [&]() -> SemilinearSet {
    if (machine) return nfa_to_semilinear(*machine);
    return alpha_shuf_to_semilinear(as_alpha_shuf());
  };

  std::ostringstream out;
  out << "# converted from " << a.from << " to " << a.to << "\n";
  if (a.to == "regex") {
    if (a.from == "alpha-shuf") out << "# perm-closure of L(regex) is the input language\n";
    out << print_expr(as_regex()) << "\n";
  } else if (a.to == "alpha-shuf") {
    if (a.from != "alpha-shuf") out << "# language is the perm-closure of the input\n";
    out << print_expr(as_alpha_shuf()) << "\n";
  } else if (a.to == "machine") {
    if (machine) {
      out << "# minimal complete DFA\n" << print_machine(minimize(*machine));
    } else {
      if (a.from == "alpha-shuf") out << "# read under jfa semantics\n";
      out << print_machine(thompson_machine(a.from == "alpha-shuf" ? alpha_shuf_to_regex(*expr)
                                                                   : *expr));
    }
  } else if (a.to == "semilinear") {
    out << "# Parikh image\n" << print_semilinear(as_semilinear(), alphabet);
  } else {
    SemilinearSet s = as_semilinear();
    Expr nf = semilinear_to_normalform(s, alphabet);
    std::vector<std::uint32_t> box(alphabet.size(), g.box);
    bool same = sl_bounded_equal(s, alpha_shuf_to_semilinear(nf), box);
    out << "# star height " << star_height(nf) << "; round trip on box " << g.box << ": "
        << (same ? "equal" : "DIFFERENT") << "\n";
    out << print_expr(nf) << "\n";
  }
  std::cout << out.str();
  return 0;
}

// ------------------------------------------------------------------- check

struct CheckArgs {
  std::string what;
  std::string mode = "jfa";
  Source src;
  std::string other_file;
  std::string other_word;
  std::optional<std::size_t> n;
};

int cmd_check(const CheckArgs& a, const Global& g) {
  const std::size_t n = a.n.value_or(g.bound);
  Verdict v;
  Alphabet alphabet;
  if (a.what == "commutative" || a.what == "jfa-and-reg") {
    if (!a.src.has_machine() || a.src.has_expr())
      throw UsageError("--what " + a.what + " needs -m FILE only");
    Machine m = a.src.machine();
    alphabet = m.alphabet();
    v = a.what == "commutative" ? is_commutative_regular(m) : jfa_membership_of_regular(m);
    std::cout << "# check " << a.what << " exact (fa semantics)\n";
  } else if (a.what == "perm-closed") {
    a.src.require_one();
    if (a.src.has_machine()) {
      Machine m = a.src.machine();
      alphabet = m.alphabet();
      v = is_perm_closed_bounded(m, parse_mode(a.mode), n);
      std::cout << "# check perm-closed mode=" << a.mode << " bound n=" << n << "\n";
    } else {
      Expr e = a.src.expr();
      alphabet = e.alphabet();
      v = is_perm_closed_bounded(e, n);
      std::cout << "# check perm-closed expr bound n=" << n << "\n";
    }
  } else {
    if (!a.src.has_machine()) throw UsageError("--what disjoint needs -m FILE");
    if (a.other_file.empty() == a.other_word.empty())
      throw UsageError("--what disjoint needs exactly one of --other FILE, --other-word WORD");
    Machine m1 = a.src.machine();
    alphabet = m1.alphabet();
    Machine m2 = a.other_file.empty()
                     ? word_to_jfa(alphabet, parse_word(a.other_word, alphabet))
                     : parse_machine(slurp(a.other_file));
    v = jfa_disjointness_bounded(m1, m2, n);
    std::cout << "# check disjoint jfa semantics bound n=" << n
              << " (No = intersection nonempty)\n";
  }
  std::cout << describe(v, alphabet) << "\n";
  return 0;
}

// ------------------------------------------------------------------ reduce

struct ReduceArgs {
  std::string kind;
  std::string input;
  std::string out_dir;
  bool binary = false;
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void need_cap(std::size_t value, std::size_t cap, const std::string& name, const std::string& what) {
  if (value > cap)
    throw CapExceeded("cap " + name + "=" + std::to_string(cap) + " exceeded by " + what + "=" +
                      std::to_string(value));
}

class Manifest {
 public:
  void add(const std::string& key, const std::string& value) { lines_ += key + ": " + value + "\n"; }
  void add(const std::string& key, std::size_t value) { add(key, std::to_string(value)); }
  const std::string& text() const { return lines_; }

 private:
  std::string lines_;
};

int cmd_reduce(const ReduceArgs& a, const Global& g) {
  const bool gjfa_kind = a.kind == "sat-gjfa" || a.kind == "ebc2";
  if (a.binary && !gjfa_kind) throw UsageError("--binary applies to sat-gjfa and ebc2 only");
  const std::string text = slurp(a.input);
  const fs::path dir(a.out_dir);
  fs::create_directories(dir);

  Manifest man;
  man.add("kind", a.kind);
  man.add("input", a.input);
  man.add("caps", g.caps.str());
  std::vector<std::pair<std::string, std::string>> files;
  auto emit = [&](const std::string& name, const std::string& body) {
    files.emplace_back(name, body);
  };
  auto emit_machine_word = [&](const Machine& m, const Word& w) {
    Machine mm = m;
    Word ww = w;
    if (a.binary) std::tie(mm, ww) = binary_wrap(m, w);
    man.add("binary", a.binary ? "yes" : "no");
    man.add("machine_states", mm.num_states());
    man.add("word_length", ww.size());
    if (a.binary) man.add("unencoded_word_length", w.size());
    emit("machine.machine", print_machine(mm));
    emit("word.txt", format_word(ww, mm.alphabet()) + "\n");
    return std::pair<Machine, Word>(mm, ww);
  };

  if (a.kind == "ebc2") {
    Ebc2Instance inst = parse_ebc2(text);
    need_cap(inst.blocks.size(), g.caps.ebc2, "ebc2", "blocks");
    auto order = brute_ebc2(inst, g.caps.ebc2);
    man.add("blocks", inst.blocks.size());
    man.add("oracle", "brute_ebc2");
    man.add("oracle_verdict", order ? "yes" : "no");
    if (order) {
      std::string s;
      for (std::size_t i : *order) s += (s.empty() ? "" : " ") + std::to_string(i + 1);
      man.add("oracle_witness", s);
    }
    auto [m, w] = emit_machine_word(ebc2_fixed_machine(), ebc2_to_word(inst));
    if (inst.blocks.size() <= g.caps.gjfa)
      man.add("machine_verdict", gjfa_accepts(m, w) ? "accept" : "reject");
    else
      man.add("machine_verdict", "skipped (cap gjfa=" + std::to_string(g.caps.gjfa) + ")");
  } else {
    CnfFormula f = parse_dimacs(text);
    man.add("vars", f.num_vars);
    man.add("clauses", f.clauses.size());
    need_cap(f.num_vars, g.caps.sat, "sat", "vars");
    const bool sat = brute_sat(f, g.caps.sat).has_value();
    man.add("oracle", "brute_sat");
    man.add("oracle_verdict", sat ? "satisfiable" : "unsatisfiable");

    if (a.kind == "sat-jfa") {
      auto [plain_m, plain_w] = sat_to_jfa(f);
      auto [m, w] = emit_machine_word(plain_m, plain_w);
      man.add("machine_verdict", jfa_accepts(m, w) ? "accept" : "reject");
    } else if (a.kind == "sat-gjfa") {
      auto [m, w] = emit_machine_word(sat_fixed_gjfa(), sat_to_gjfa_word(f));
      if (f.num_vars <= g.caps.gjfa && f.clauses.size() <= g.caps.gjfa)
        man.add("machine_verdict", gjfa_accepts(m, w) ? "accept" : "reject");
      else
        man.add("machine_verdict", "skipped (cap gjfa=" + std::to_string(g.caps.gjfa) + ")");
    } else {
      need_cap(f.num_vars, g.caps.sm, "sm", "vars");
      std::size_t period = 1;
      for (std::size_t p : first_primes(f.num_vars)) period *= p;
      if (a.kind == "sm-expr") {
        Expr e = stockmeyer_meyer_expr(f, g.caps.sm);
        std::vector<bool> in = unary_lengths_accepted(thompson_machine(e), 0, 2 * period);
        bool full = std::find(in.begin(), in.end(), false) == in.end();
        man.add("period", period);
        man.add("unary_full_upto_" + std::to_string(2 * period), full ? "yes" : "no");
        emit("expr.txt", "# unary expression over {a}\n" + print_expr(e) + "\n");
      } else if (a.kind == "sat-nonreg") {
        Machine m = build_nonregularity_jfa(f, g.caps.sm);
        man.add("machine_states", m.num_states());
        man.add("semantics", "jfa");
        emit("machine.machine", print_machine(m));
      } else {
        Machine m = build_noncommutativity_nfa(f, g.caps.sm);
        man.add("machine_states", m.num_states());
        man.add("semantics", "fa");
        Verdict v = is_commutative_regular(m);
        man.add("machine_verdict", describe(v, m.alphabet()));
        emit("machine.machine", print_machine(m));
      }
    }
  }

  std::string names;
  for (const auto& [name, body] : files) names += (names.empty() ? "" : " ") + name;
  man.add("files", names);
  emit("manifest.txt", man.text());
  for (const auto& [name, body] : files) write_file(dir / name, body);
  std::cout << man.text();
  return 0;
}

// ---------------------------------------------------------------- selftest

struct SelftestArgs {
  std::string level = "full";
  std::string corpus;
  std::vector<int> only;
};

int cmd_selftest(const SelftestArgs& a, const Global& g) {
  SelftestOptions opts;
  opts.seed = g.seed;
  opts.level = a.level == "quick" ? Level::Quick : Level::Full;
  opts.corpus_dir = a.corpus;
  opts.only = a.only;
  auto results = run_criteria(opts);
  if (opts.only.empty())
    for (auto& r : run_invariants(opts)) results.push_back(std::move(r));
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.pass;
  std::cout << "# selftest level=" << a.level << " seed=" << g.seed << "\n"
            << format_report(results) << "selftest: " << passed << "/" << results.size()
            << " passed\n";
  return passed == results.size() ? 0 : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"jumping finite automata toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--seed", g.seed, "seed for randomized suites");
  app.add_option("--bound", g.bound, "default length bound n")->check(CLI::NonNegativeNumber);
  app.add_option("--box", g.box, "semilinear box bound per coordinate");
  app.add_option("--caps", g.caps_text, "reduction caps, e.g. sat=20,ebc2=8,sm=6,gjfa=4");

  const auto modes = CLI::IsMember({"fa", "jfa", "gjfa"});

  MemberArgs member;
  auto* c_member = app.add_subcommand("member", "decide w in L(M); exit 0 yes, 1 no");
  c_member->add_option("--mode", member.mode)->check(modes);
  c_member->add_option("-m,--machine", member.machine_file)->required();
  c_member->add_option("-w,--word", member.word, "word literal, '@' for the empty word")
      ->required();

  EnumerateArgs enumerate;
  auto* c_enum = app.add_subcommand("enumerate", "list the language up to length n");
  c_enum->add_option("--mode", enumerate.mode)->check(modes);
  add_source_options(c_enum, enumerate.src);
  c_enum->add_option("-n", enumerate.n, "length bound (default --bound)");

  ConvertArgs convert;
  auto* c_conv = app.add_subcommand("convert", "translate between representations");
  c_conv->add_option("--from", convert.from)
      ->required()
      ->check(CLI::IsMember({"regex", "alpha-shuf", "machine"}));
  c_conv->add_option("--to", convert.to)
      ->required()
      ->check(CLI::IsMember({"alpha-shuf", "regex", "machine", "semilinear", "normal-form"}));
  add_source_options(c_conv, convert.src);

  CheckArgs check;
  auto* c_check = app.add_subcommand("check", "run a decider");
  c_check->add_option("--what", check.what)
      ->required()
      ->check(CLI::IsMember({"commutative", "perm-closed", "jfa-and-reg", "disjoint"}));
  c_check->add_option("--mode", check.mode, "semantics for perm-closed")->check(modes);
  add_source_options(c_check, check.src);
  c_check->add_option("--other", check.other_file, "second machine for disjoint");
  c_check->add_option("--other-word", check.other_word, "word whose JFA is the second machine");
  c_check->add_option("-n", check.n, "length bound (default --bound)");

  ReduceArgs reduce;
  auto* c_red = app.add_subcommand("reduce", "build a hardness gadget from an instance");
  c_red->add_option("--kind", reduce.kind)
      ->required()
      ->check(CLI::IsMember({"sat-jfa", "sat-nonreg", "sat-noncomm", "sat-gjfa", "ebc2", "sm-expr"}));
  c_red->add_option("-i,--input", reduce.input, "DIMACS or EBC2 instance file")->required();
  c_red->add_option("-o,--out", reduce.out_dir, "output directory")->required();
  c_red->add_flag("--binary", reduce.binary, "encode machine and word over {0,1}");

  SelftestArgs selftest;
  auto* c_self = app.add_subcommand("selftest", "run the acceptance suite");
  c_self->add_option("--level", selftest.level)->check(CLI::IsMember({"quick", "full"}));
  c_self->add_option("--corpus", selftest.corpus, "directory with the example machines");
  c_self->add_option("--only", selftest.only, "criterion ids to run, e.g. 4,6")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    g.caps = parse_caps(g.caps_text);
    if (*c_member) return cmd_member(member);
    if (*c_enum) return cmd_enumerate(enumerate, g);
    if (*c_conv) return cmd_convert(convert, g);
    if (*c_check) return cmd_check(check, g);
    if (*c_red) return cmd_reduce(reduce, g);
    if (*c_self) return cmd_selftest(selftest, g);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
