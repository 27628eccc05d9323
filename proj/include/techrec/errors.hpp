#ifndef TECHREC_ERRORS_HPP_
#define TECHREC_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace techrec {

struct MalformedHeader : std::runtime_error {
  explicit MalformedHeader(const std::string &what) : std::runtime_error(what) {}
};

struct RowParseError : std::runtime_error {
  RowParseError(std::size_t row, std::string column, const std::string &what)
      : std::runtime_error("row " + std::to_string(row) + ", column '" + column +
                           "': " + what),
        row(row), column(std::move(column)) {}
  std::size_t row;
  std::string column;
};

struct EmptyInput : std::runtime_error {
  explicit EmptyInput(const std::string &what = "empty input")
      : std::runtime_error(what) {}
};

struct UnknownLabel : std::runtime_error {
  UnknownLabel(std::string aspect, std::string label)
      : std::runtime_error("unknown label '" + label + "' for aspect " + aspect),
        aspect(std::move(aspect)), label(std::move(label)) {}
  std::string aspect;
  std::string label;
};

struct DuplicatePair : std::runtime_error {
  DuplicatePair(long user, long item)
      : std::runtime_error("duplicate rating for user " + std::to_string(user) +
                           ", item " + std::to_string(item)),
        user(user), item(item) {}
  long user;
  long item;
};

struct IndexOutOfRange : std::out_of_range {
  explicit IndexOutOfRange(const std::string &what) : std::out_of_range(what) {}
};

struct AxisMismatch : std::runtime_error {
  explicit AxisMismatch(const std::string &what) : std::runtime_error(what) {}
};

struct UnknownUser : std::runtime_error {
  explicit UnknownUser(long user_id)
      : std::runtime_error("unknown user id " + std::to_string(user_id)),
        user_id(user_id) {}
  long user_id;
};

struct AlreadyRated : std::runtime_error {
  AlreadyRated(std::size_t user, std::size_t item)
      : std::runtime_error("user " + std::to_string(user) +
                           " already rated item " + std::to_string(item)) {}
};

struct DivergenceDetected : std::runtime_error {
  explicit DivergenceDetected(const std::string &what) : std::runtime_error(what) {}
};

struct EmptyHoldout : std::runtime_error {
  EmptyHoldout() : std::runtime_error("empty holdout set") {}
};

}  // namespace techrec

#endif  // TECHREC_ERRORS_HPP_
