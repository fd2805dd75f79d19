#pragma once

#include <stdexcept>
#include <string>

namespace hyperaco {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// HGR syntax error; carries the 1-based line number it was found on.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A hypergraph failed validation where a valid one was required.
class InvalidHypergraphError : public Error {
 public:
  using Error::Error;
};

/// SolverConfig violates its invariants (l <= 0, l > h, alpha < 0, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// The roulette normalizing sum underflowed to zero.
class DegenerateWeightsError : public Error {
 public:
  using Error::Error;
};

/// Enumeration guard tripped (oracle) or generator pool exceeded.
class InstanceTooLargeError : public Error {
 public:
  using Error::Error;
};

/// A stated precondition does not hold (e.g. beta_star with eta'_min <= eta_1max).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Instance 2 p-sequence violates monotonicity or bounds.
class InvalidSequenceError : public Error {
 public:
  using Error::Error;
};

/// Generator parameters admit no construction (e.g. edge pool exhausted).
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// Experiment needs a known optimum but neither plant nor oracle is available.
class UnknownOptimumError : public Error {
 public:
  using Error::Error;
};

/// Adversarial pheromone experiments require a pendant-free instance.
class PendantEdgesPresentError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperaco
