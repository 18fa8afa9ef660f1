#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sumfree {

/// A finite bit source ran out before the requested work was done.
class StreamExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input prefix too short for the requested computation.
class InsufficientData : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotSumFree : public std::invalid_argument {
 public:
  NotSumFree(std::uint64_t element, const std::string& what)
      : std::invalid_argument(what), element_(element) {}
  std::uint64_t element() const { return element_; }

 private:
  std::uint64_t element_;
};

/// A formula's hypothesis fails at `index` on the supplied data.
class HypothesisViolation : public std::invalid_argument {
 public:
  HypothesisViolation(std::uint64_t index, const std::string& what)
      : std::invalid_argument(what), index_(index) {}
  std::uint64_t index() const { return index_; }

 private:
  std::uint64_t index_;
};

}  // namespace sumfree
