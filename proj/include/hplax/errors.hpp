#pragma once

#include <stdexcept>
#include <string>

namespace hplax {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-square or otherwise mis-shaped input.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation needed more series or moment coefficients than were supplied.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// An index outside the computed window was requested.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Internal identity failed; indicates a bug or corrupted input.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

/// S_{n,m} = 0: the multi-index is not normal.
class NotNormal : public Error {
 public:
  NotNormal(int n, int m)
      : Error("index (" + std::to_string(n) + "," + std::to_string(m) +
              ") is not normal"),
        n_(n),
        m_(m) {}

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }

 private:
  int n_;
  int m_;
};

/// (c - d)_{n,m} = 0 met as a divisor: the data do not come from a perfect system.
class NonPerfectBoundary : public Error {
 public:
  NonPerfectBoundary(int n, int m, const std::string& why)
      : Error("non-perfect boundary data at (" + std::to_string(n) + "," +
              std::to_string(m) + "): " + why),
        n_(n),
        m_(m) {}

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }

 private:
  int n_;
  int m_;
};

/// A vanishing Hankel determinant or continued-fraction coefficient.
class DegeneracyError : public Error {
 public:
  DegeneracyError(int depth, const std::string& why)
      : Error(why + " (depth " + std::to_string(depth) + ")"), depth_(depth) {}

  int depth() const noexcept { return depth_; }

 private:
  int depth_;
};

/// Angelesco measures whose supports are not in disjoint intervals.
class DisjointnessError : public Error {
 public:
  using Error::Error;
};

/// A Nikishin second measure with an atom on a node of the first.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Unique solvability of the branched continued fraction system fails.
class NonPerfectData : public Error {
 public:
  using Error::Error;
};

}  // namespace hplax
