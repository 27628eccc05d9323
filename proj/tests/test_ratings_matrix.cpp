#include <doctest.h>

#include <set>
#include <tuple>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace techrec;
using testutil::make_matrix;

TEST_CASE("empty row list is rejected") {
  CHECK_THROWS_AS(RatingsMatrix::from_rating_rows({}), EmptyInput);
}

TEST_CASE("single rating populates both orientations") {
  auto m = make_matrix({{1, 10, 5}});
  CHECK(m.n_users() == 1);
  CHECK(m.n_items() == 1);
  CHECK(m.global_mean() == 5.0);
  CHECK(m.user_mean(0) == 5.0);
  CHECK(m.rated_items(0) == SparseVec{{0, 5.0}});
  CHECK(m.item_raters(0) == SparseVec{{0, 5.0}});
  CHECK(m.user_ext_id(0) == 1);
  CHECK(m.item_ext_id(0) == 10);
}

TEST_CASE("duplicate pairs and bad values are rejected") {
  CHECK_THROWS_AS(make_matrix({{1, 10, 5}, {1, 10, 4}}), DuplicatePair);
  CHECK_THROWS_AS(make_matrix({{1, 10, 0.5}}), std::invalid_argument);
  CHECK_THROWS_AS(make_matrix({{1, 10, 6}}), std::invalid_argument);
}

TEST_CASE("index access is bounds-checked") {
  auto m = make_matrix({{1, 10, 5}});
  CHECK_THROWS_AS(m.rated_items(1), IndexOutOfRange);
  CHECK_THROWS_AS(m.item_raters(1), IndexOutOfRange);
  CHECK_THROWS_AS(m.user_mean(7), IndexOutOfRange);
  CHECK(m.user_index(999) == std::nullopt);
}

TEST_CASE("orientations hold the same triples on random input") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto dense = oracle::random_dense(seed, 12, 9);
    auto rows = dense.rows();
    auto m = RatingsMatrix::from_rating_rows(rows);

    std::set<std::tuple<long, long, double>> from_users, from_items, expected;
    for (const auto &r : rows) expected.insert({r.user_id, r.technology_id, r.value});
    for (std::size_t u = 0; u < m.n_users(); ++u)
      for (const auto &[i, v] : m.rated_items(u))
        from_users.insert({m.user_ext_id(u), m.item_ext_id(i), v});
    for (std::size_t i = 0; i < m.n_items(); ++i)
      for (const auto &[u, v] : m.item_raters(i))
        from_items.insert({m.user_ext_id(u), m.item_ext_id(i), v});
    CHECK(from_users == expected);
    CHECK(from_items == expected);

    std::size_t user_total = 0, item_total = 0;
    for (std::size_t u = 0; u < m.n_users(); ++u)
      user_total += m.rated_items(u).size();
    for (std::size_t i = 0; i < m.n_items(); ++i)
      item_total += m.item_raters(i).size();
    CHECK(user_total == rows.size());
    CHECK(item_total == rows.size());
    CHECK(m.global_mean() >= 1.0);
    CHECK(m.global_mean() <= 5.0);

    for (std::size_t u = 0; u < m.n_users(); ++u) {
      double s = 0;
      for (const auto &[i, v] : m.rated_items(u)) s += v;
      CHECK(m.user_mean(u) ==
            doctest::Approx(s / m.rated_items(u).size()).epsilon(1e-12));
    }
  }
}

TEST_CASE("external id interning is a bijection") {
  auto dense = oracle::random_dense(7, 10, 8);
  auto m = RatingsMatrix::from_rating_rows(dense.rows());
  for (std::size_t u = 0; u < m.n_users(); ++u)
    CHECK(m.user_index(m.user_ext_id(u)) == u);
  for (std::size_t i = 0; i < m.n_items(); ++i)
    CHECK(m.item_index(m.item_ext_id(i)) == i);
}
