#pragma once

// The acceptance suite, shared by `jfa selftest` and the acceptance binary.
// Reports contain no timings, so a fixed seed gives byte-identical output.

#include <cstdint>
#include <string>
#include <vector>

#include "jfa/machine.hpp"

namespace jfa {

enum class Level { Quick, Full };

struct SelftestOptions {
  std::uint64_t seed = 20150101;
  Level level = Level::Full;
  // Directory with abc-cycle.machine, abcd-blocks.machine, ab-split.machine, ab-loop.machine;
  // empty means the built-in copies.
  std::string corpus_dir;
  // Criterion ids to run; empty means all.
  std::vector<int> only;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  std::string kind = "criterion";
};

// Regression machines.
struct Corpus {
  Machine abc_cycle;     // s-a->r, r-b->t, t-c->s; start = final = s
  Machine abcd_blocks;     // s-ab->r, r-cd->s; start = final = s
  Machine ab_split;     // s-a->r, s-b->t, loops on r and t; final r
  Machine ab_loop;  // single state s with s-ab->s
};

const std::vector<std::string>& corpus_names();
const std::string& builtin_corpus_text(const std::string& name);
// Throws on unreadable or malformed files.
Corpus load_corpus(const std::string& dir);

// Criteria 1-11. Quick level runs the fixed regression items only.
std::vector<CriterionResult> run_criteria(const SelftestOptions& opts);
// Per-module invariant suites, full level only; ids follow module order
// (core, expr, machine, semilinear, deciders, reductions).
std::vector<CriterionResult> run_invariants(const SelftestOptions& opts);
// Criterion 12: two complete runs of run_criteria give identical reports.
CriterionResult check_determinism(const SelftestOptions& opts);

std::string format_result(const CriterionResult& r);
std::string format_report(const std::vector<CriterionResult>& results);

}  // namespace jfa
