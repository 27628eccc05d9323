#ifndef TECHREC_SLOPEONE_HPP_
#define TECHREC_SLOPEONE_HPP_

#include <cstdint>
#include <optional>
#include <unordered_map>

#include <techrec/ratings_matrix.hpp>

namespace techrec {

/// Average pairwise rating deviations. Only item pairs with at least one
/// co-rater are stored; dev(j,i) = -dev(i,j) by construction.
class DeviationModel {
 public:
  struct Entry {
    double avg = 0;   // average of r_uj - r_ui over co-raters
    long count = 0;
  };

  // average of r_uj - r_ui, with co-rater count; nullopt when no co-rater
  std::optional<Entry> deviation(std::size_t j, std::size_t i) const;
  std::size_t n_pairs() const { return pairs_.size(); }

 private:
  friend DeviationModel build_deviations(const RatingsMatrix &m);
  // key packs the ordered pair (lo, hi); value is avg of r_lo - r_hi
  std::unordered_map<std::uint64_t, Entry> pairs_;
};

DeviationModel build_deviations(const RatingsMatrix &m);

/// Weighted Slope-One estimate for an unrated item, clamped to [1,5] unless
/// clamp is off (used by shift-equivariance checks). Absent when the user
/// shares no co-rated item pair with any rater of j.
std::optional<double> predict_slope_one(const RatingsMatrix &m,
                                        const DeviationModel &d, std::size_t u,
                                        std::size_t j, bool clamp = true);

}  // namespace techrec

#endif  // TECHREC_SLOPEONE_HPP_
