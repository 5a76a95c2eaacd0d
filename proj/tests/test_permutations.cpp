#include <doctest.h>

#include <map>
#include <set>

#include "qhl/permutations.hpp"

using namespace qhl;

TEST_CASE("descents and peaks") {
  CHECK(descent_set(Permutation({1, 3, 2})) == std::vector<int>{2});
  CHECK(descent_set(Permutation::identity(4)).empty());
  CHECK(descent_set(Permutation({3, 2, 1})) == std::vector<int>{1, 2});
  CHECK(peak_set(Permutation({1, 3, 2})) == std::vector<int>{2});
  CHECK(peak_set(Permutation({2, 1})).empty());
  CHECK(peak_set(Permutation({2, 1, 4, 3})) == std::vector<int>{3});
}

TEST_CASE("word standardization") {
  CHECK(standardize_word({5, 2, 9}) == Permutation({2, 1, 3}));
  CHECK(standardize_word({}) == Permutation());
  CHECK(standardize_word({4, 3}) == Permutation({2, 1}));
  CHECK_THROWS_AS(standardize_word({3, 3}), std::invalid_argument);
}

TEST_CASE("shifted shuffles") {
  auto s11 = shuffle_shifted(Permutation({1}), Permutation({1}));
  REQUIRE(s11.size() == 2);
  CHECK(std::set<Permutation>(s11.begin(), s11.end()) ==
        std::set<Permutation>{Permutation({1, 2}), Permutation({2, 1})});

  auto only = shuffle_shifted(Permutation(), Permutation({2, 1}));
  REQUIRE(only.size() == 1);
  CHECK(only[0] == Permutation({2, 1}));

  auto s = shuffle_shifted(Permutation({1, 2}), Permutation({1}));
  CHECK(std::set<Permutation>(s.begin(), s.end()) ==
        std::set<Permutation>{Permutation({1, 2, 3}), Permutation({1, 3, 2}),
                              Permutation({3, 1, 2})});

  // |pi ShR sigma| = C(n+m, n), all distinct.
  auto big = shuffle_shifted(Permutation({2, 1, 3}), Permutation({2, 1}));
  CHECK(big.size() == 10);
  CHECK(std::set<Permutation>(big.begin(), big.end()).size() == 10);
}

TEST_CASE("rsk on forced shapes") {
  auto [p21, q21] = rsk(Permutation({2, 1}));
  CHECK(p21.shape() == SkewShape(Partition({1, 1}), Partition()));
  CHECK(p21.entries() == std::vector<int>{1, 2});
  CHECK(q21.entries() == std::vector<int>{1, 2});

  auto [pid, qid] = rsk(Permutation::identity(4));
  CHECK(pid.shape() == SkewShape(Partition({4}), Partition()));
  CHECK(pid == qid);
}

TEST_CASE("rsk is a descent-preserving bijection") {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>> images;
    std::map<Partition, int> shape_counts;
    for (const Permutation& pi : all_permutations(n)) {
      auto [P, Q] = rsk(pi);
      CHECK(P.shape() == Q.shape());
      CHECK(descent_set(Q) == descent_set(pi));
      CHECK(descent_set(P) == descent_set(pi.inverse()));
      images.insert({P.shape().outer().parts(), P.entries(), Q.entries()});
      ++shape_counts[P.shape().outer()];
    }
    CHECK(images.size() == all_permutations(n).size());
    // sum over shapes of (#SYT)^2 accounts for the whole group
    if (n == 4) {
      size_t total = 0;
      for (const Partition& lambda : partitions_of(4)) {
        size_t f = enumerate_syt(SkewShape(lambda, Partition())).size();
        total += f * f;
      }
      CHECK(total == 24);
    }
  }
}

TEST_CASE("composition and inverse") {
  Permutation pi({1, 3, 2}), tau({3, 1, 2});
  CHECK(tau.inverse() == Permutation({2, 3, 1}));
  CHECK(tau.compose(tau.inverse()) == Permutation::identity(3));
  CHECK(tau.inverse().compose(pi) == Permutation({2, 1, 3}));
}
