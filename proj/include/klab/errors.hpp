/**
 * @file errors.hpp
 * @brief Exception types shared by all klab modules.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace klab {

/// Evaluation requested on the singular set itself.
class SingularPoint : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Derivative order, smoothness or depth beyond what is implemented.
class Unsupported : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters outside the stated ranges.
class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A Whitney decomposition that leaves too much of the box uncovered.
class CoverageGap : public std::runtime_error {
 public:
  CoverageGap(const std::string& what, double uncovered_volume)
      : std::runtime_error(what), uncovered_volume_(uncovered_volume) {}
  double uncovered_volume() const { return uncovered_volume_; }

 private:
  double uncovered_volume_;
};

/// Partition of unity evaluated where no cube of the cover reaches.
class OutsideCover : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class EmptyFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace klab
