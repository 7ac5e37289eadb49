#include <doctest.h>

#include "jfa/machine.hpp"
#include "jfa/parallel.hpp"
#include "jfa/random.hpp"
#include "jfa/semilinear.hpp"

using namespace jfa;

namespace {

struct ThreadCount {
  int saved = parallel::max_threads();
  explicit ThreadCount(int n) { parallel::set_threads(n); }
  ~ThreadCount() { parallel::set_threads(saved); }
};

}  // namespace

TEST_SUITE("parallel") {

TEST_CASE("parallel enumeration matches the serial reference") {
  const Alphabet abc{"a", "b", "c"};
  for (int threads : {1, 2, 4}) {
    ThreadCount tc(threads);
    Rng rng(71);
    for (int i = 0; i < 30; ++i) {
      Machine m = random_machine(rng, abc, 4);
      for (Semantics sem : {Semantics::FA, Semantics::JFA, Semantics::GJFA})
        CHECK(language_upto(m, sem, 5) == language_upto_serial(m, sem, 5));
    }
  }
}

TEST_CASE("parallel box scan matches the serial reference") {
  const Alphabet abc{"a", "b", "c"};
  for (int threads : {1, 4}) {
    ThreadCount tc(threads);
    Rng rng(72);
    for (int i = 0; i < 30; ++i) {
      SemilinearSet a = alpha_shuf_to_semilinear(random_alpha_shuf(rng, abc, 3));
      SemilinearSet b = alpha_shuf_to_semilinear(random_alpha_shuf(rng, abc, 3));
      CHECK(sl_bounded_equal(a, b, {5, 5, 5}) == sl_bounded_equal_serial(a, b, {5, 5, 5}));
      CHECK(sl_bounded_equal(a, a, {5, 5, 5}));
    }
  }
}

TEST_CASE("the first difference does not depend on the thread count") {
  const Alphabet ab{"a", "b"};
  SemilinearSet evens = alpha_shuf_to_semilinear(parse_expr("(a&a)&*", ab));
  SemilinearSet all_a = alpha_shuf_to_semilinear(parse_expr("a&*", ab));
  std::optional<ParikhVector> first;
  for (int threads : {1, 3, 4}) {
    ThreadCount tc(threads);
    auto d = sl_bounded_difference(evens, all_a, {9, 9});
    REQUIRE(d.has_value());
    if (first) CHECK(*d == *first);
    first = d;
  }
  CHECK(*first == ParikhVector{1, 0});
}

}  // TEST_SUITE
