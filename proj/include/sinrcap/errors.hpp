#pragma once

#include <stdexcept>
#include <string>

namespace sinrcap {

/// A link whose own signal cannot clear the noise floor at threshold beta:
/// P_v <= beta * N * l_v^alpha.  Such a link is infeasible even alone, and
/// its affectance constant c_v is undefined.
class WeakLinkError : public std::runtime_error {
 public:
  WeakLinkError(int link, const std::string& what)
      : std::runtime_error(what), link_(link) {}
  int link() const { return link_; }

 private:
  int link_;
};

/// Two distinct links at sender/receiver distance zero; affectance diverges.
class DegenerateDistanceError : public std::runtime_error {
 public:
  DegenerateDistanceError(int from, int to, const std::string& what)
      : std::runtime_error(what), from_(from), to_(to) {}
  int from() const { return from_; }
  int to() const { return to_; }

 private:
  int from_, to_;
};

/// The spectral iteration exhausted its budget without separating the
/// decision; the caller gets no answer rather than a possibly wrong one.
class OracleInconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive oracle was asked for more links than its enumeration cap.
class CapExceededError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A scheduling round made no progress on the residual links.
class ScheduleStuckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A randomized fixture generator ran out of resampling attempts.
class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sinrcap
