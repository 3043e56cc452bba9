#ifndef LEXFST_ERRORS_HPP
#define LEXFST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lexfst {

// Base class for all domain errors raised by the library. CLI maps these
// to exit code 1.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DuplicateInput : public Error {
public:
  DuplicateInput(unsigned q, const std::string& sym)
      : Error("duplicate transition on (" + std::to_string(q) + ", " + sym +
              ") in sequential transducer") {}
};

class UnknownState : public Error {
public:
  explicit UnknownState(unsigned q)
      : Error("unknown state id " + std::to_string(q)) {}
};

class EmptyLanguage : public Error {
public:
  EmptyLanguage() : Error("no final state is reachable") {}
};

class NotCoaccessible : public Error {
public:
  explicit NotCoaccessible(unsigned q)
      : Error("state " + std::to_string(q) +
              " has no path to a final state; trim first") {}
};

class CyclicUnsupported : public Error {
public:
  CyclicUnsupported()
      : Error("state equivalence oracle exceeded its depth bound "
              "(cyclic machine)") {}
};

class NonSubsequential : public Error {
public:
  explicit NonSubsequential(const std::string& what)
      : Error("determinization limit hit (" + what +
              "); input does not realize a bounded-ambiguity sequential "
              "function, or limits are too tight") {}
};

class InputEpsilon : public Error {
public:
  InputEpsilon() : Error("input-epsilon transitions are not supported") {}
};

class AmbiguityExceeded : public Error {
public:
  AmbiguityExceeded(unsigned seen, unsigned bound)
      : Error("ambiguity " + std::to_string(seen) +
              " exceeds declared p = " + std::to_string(bound)) {}
};

class MarkerCollision : public Error {
public:
  explicit MarkerCollision(const std::string& sym)
      : Error("end-marker symbol '" + sym +
              "' already present in the input alphabet") {}
};

class MalformedEncoding : public Error {
public:
  explicit MalformedEncoding(const std::string& why)
      : Error("not a valid end-marker encoding: " + why) {}
};

class EmptyLexicon : public Error {
public:
  EmptyLexicon() : Error("lexicon contains no entries") {}
};

class ParseError : public Error {
public:
  ParseError(size_t line, const std::string& why)
      : Error("parse error at line " + std::to_string(line) + ": " + why) {}
};

class BadMagic : public Error {
public:
  BadMagic() : Error("bad magic; not a lexfst binary file") {}
};

class VersionMismatch : public Error {
public:
  explicit VersionMismatch(const std::string& got)
      : Error("unsupported binary format version '" + got + "'") {}
};

class TruncatedFile : public Error {
public:
  TruncatedFile() : Error("unexpected end of binary file") {}
};

class SearchBudgetExceeded : public Error {
public:
  SearchBudgetExceeded() : Error("reverse application exceeded its step budget") {}
};

class PrefixNotPresent : public Error {
public:
  explicit PrefixNotPresent(const std::string& u)
      : Error("no path labeled '" + u + "' from the initial state") {}
};

class AlphabetMismatch : public Error {
public:
  AlphabetMismatch() : Error("machines have disjoint input alphabets") {}
};

}  // namespace lexfst

#endif  // LEXFST_ERRORS_HPP
