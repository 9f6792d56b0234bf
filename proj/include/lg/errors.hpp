#pragma once

#include <stdexcept>
#include <string>

namespace lg {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An operation that requires a Y-free ring element was given one with a
/// nonzero Y part.
class NotYFree : public Error {
 public:
  explicit NotYFree(const std::string& what) : Error(what) {}
};

/// Numeric routine called outside its parameter domain.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// A build-time algebraic cross-check failed (signals a transcription bug).
class ConsistencyFailure : public Error {
 public:
  explicit ConsistencyFailure(const std::string& what) : Error(what) {}
};

/// Contraction network fails validation: dangling or triplicated index
/// names, or a contraction joining two slots of the same variance.
class MalformedNetwork : public Error {
 public:
  explicit MalformedNetwork(const std::string& what) : Error(what) {}
};

/// A closed (1,1)-tangle evaluation did not produce a scalar multiple of
/// the identity.  This always indicates an implementation bug.
class NotScalarMultiple : public Error {
 public:
  explicit NotScalarMultiple(const std::string& what) : Error(what) {}
};

class TooManyStrands : public Error {
 public:
  explicit TooManyStrands(const std::string& what) : Error(what) {}
};

class EvenHeight : public Error {
 public:
  explicit EvenHeight(const std::string& what) : Error(what) {}
};

class BadPretzelParams : public Error {
 public:
  explicit BadPretzelParams(const std::string& what) : Error(what) {}
};

class UnknownLink : public Error {
 public:
  explicit UnknownLink(const std::string& what) : Error(what) {}
};

/// Text input (braid words, link names, JSON) failed to parse; the message
/// names the offending token.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace lg
