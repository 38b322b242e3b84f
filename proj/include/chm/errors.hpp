#pragma once

#include <stdexcept>
#include <string>

namespace chm {

// Base of every error the library raises. Callers that only care about
// "something was rejected" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A distribution, sample set or parameter block violated its invariants.
class InvalidDistribution : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A real distribution handed to a harmonic-mean routine has a point <= 0.
class InvalidSupport : public Error {
 public:
  using Error::Error;
};

// E[Z^-1] vanished (within the configured threshold); H[Z] does not exist.
class DegenerateMean : public Error {
 public:
  using Error::Error;
};

class NearPole : public Error {
 public:
  using Error::Error;
};

class DegenerateImage : public Error {
 public:
  using Error::Error;
};

class DegenerateCircline : public Error {
 public:
  using Error::Error;
};

class ContainsOrigin : public Error {
 public:
  using Error::Error;
};

class CoincidentPoints : public Error {
 public:
  using Error::Error;
};

// The hypotheses of a theorem check were not met. A check that throws this
// has refused to run; it has not found a counterexample.
class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

}  // namespace chm
