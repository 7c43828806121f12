#pragma once

#include <stdexcept>
#include <string>

namespace tst {

/// Broad failure class; the CLI maps it to an exit code.
enum class ErrorCategory {
  kData,     // malformed input files, shape or length violations
  kBackend,  // tagger peers, protocol violations
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

#define TST_DEFINE_ERROR(Name, Category)                        \
  class Name : public Error {                                   \
   public:                                                      \
    explicit Name(const std::string& what)                      \
        : Error(ErrorCategory::Category, #Name ": " + what) {}  \
  };

TST_DEFINE_ERROR(MalformedTag, kData)
TST_DEFINE_ERROR(MalformedFile, kData)
TST_DEFINE_ERROR(LengthMismatch, kData)
TST_DEFINE_ERROR(ShapeMismatch, kData)
TST_DEFINE_ERROR(EmptyCorpus, kData)
TST_DEFINE_ERROR(NoWords, kData)
TST_DEFINE_ERROR(EmptyDevSet, kData)
TST_DEFINE_ERROR(InvalidConfig, kData)
TST_DEFINE_ERROR(ProtocolError, kBackend)
TST_DEFINE_ERROR(PeerUnavailable, kBackend)
TST_DEFINE_ERROR(InvariantViolation, kBackend)

#undef TST_DEFINE_ERROR

}  // namespace tst
