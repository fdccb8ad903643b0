#ifndef MONO_CORE_ERROR_HPP
#define MONO_CORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mono {

enum class ErrorCode {
  Parse,            // malformed input text or file
  InvalidArgument,  // bad parameter (out-of-range index, non-positive budget, ...)
  ContextMismatch,  // operands live in different group contexts
  Unsupported,      // operation not available for this context / configuration
  Internal
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail_parse(const std::string& what) { throw Error(ErrorCode::Parse, what); }
[[noreturn]] inline void fail_invalid(const std::string& what) { throw Error(ErrorCode::InvalidArgument, what); }
[[noreturn]] inline void fail_mismatch(const std::string& what) { throw Error(ErrorCode::ContextMismatch, what); }
[[noreturn]] inline void fail_unsupported(const std::string& what) { throw Error(ErrorCode::Unsupported, what); }

}  // namespace mono

#endif
