#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conoff {

/// Base of every error raised by the library. The CLI maps subclasses to
/// exit codes: ResourceLimitError -> 3, everything else -> 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingError : public Error {
 public:
  using Error::Error;
};

class ZeroPolyError : public Error {
 public:
  using Error::Error;
};

class VarError : public Error {
 public:
  using Error::Error;
};

class OrderError : public Error {
 public:
  using Error::Error;
};

class ParamError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class EliminationError : public Error {
 public:
  using Error::Error;
};

class RootPairingError : public Error {
 public:
  using Error::Error;
};

class RootRefineError : public Error {
 public:
  using Error::Error;
};

class SpecError : public Error {
 public:
  using Error::Error;
};

/// Counters reported by the Buchberger completion.
struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_skipped_criteria = 0;
  std::size_t reductions = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_size = 0;
};

class ResourceLimitError : public Error {
 public:
  ResourceLimitError(const std::string& what, GroebnerStats partial)
      : Error(what), stats_(partial) {}

  const GroebnerStats& stats() const noexcept { return stats_; }

 private:
  GroebnerStats stats_;
};

}  // namespace conoff
