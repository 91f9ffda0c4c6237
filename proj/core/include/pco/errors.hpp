#pragma once

#include <stdexcept>
#include <string>

namespace pco::errors {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotRooted : Error {
  explicit NotRooted(const std::string& what = "graph is not rooted") : Error(what) {}
};

struct BadRoot : Error {
  explicit BadRoot(const std::string& what = "vertex is not a root") : Error(what) {}
};

struct BadSize : Error {
  explicit BadSize(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

struct OutOfRange : Error {
  explicit OutOfRange(const std::string& what) : Error(what) {}
};

struct InvalidInit : Error {
  explicit InvalidInit(const std::string& what) : Error(what) {}
};

struct BadParams : Error {
  explicit BadParams(const std::string& what) : Error(what) {}
};

struct NotSubgraph : Error {
  explicit NotSubgraph(const std::string& what = "edge set is not a subset of the base graph") : Error(what) {}
};

struct AlreadyInJumpSet : Error {
  explicit AlreadyInJumpSet(const std::string& what = "a phase is already at the firing threshold") : Error(what) {}
};

/// Raised when a single cascade exceeds its jump budget, i.e. the
/// discrete dynamics are re-triggering without time advancing.
struct ZenoDetected : Error {
  explicit ZenoDetected(const std::string& what = "cascade exceeded its jump budget (Zeno behavior)") : Error(what) {}
};

}  // namespace pco::errors
