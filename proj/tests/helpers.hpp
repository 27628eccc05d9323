#ifndef TECHREC_TESTS_HELPERS_HPP_
#define TECHREC_TESTS_HELPERS_HPP_

#include <initializer_list>
#include <vector>

#include <techrec/ratings_matrix.hpp>

namespace testutil {

inline techrec::RatingsMatrix make_matrix(
    std::initializer_list<techrec::RatingRow> rows) {
  return techrec::RatingsMatrix::from_rating_rows(std::vector<techrec::RatingRow>(rows));
}

}  // namespace testutil

#endif  // TECHREC_TESTS_HELPERS_HPP_
