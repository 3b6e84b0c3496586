#ifndef CONTRAGRAPH_CORE_ERROR_HPP
#define CONTRAGRAPH_CORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cg {

enum class ErrorKind {
  argument,  // invalid value or violated precondition
  parse,     // malformed input file
  limit,     // size cap or search budget exceeded
  io,        // filesystem failure
  internal,  // broken internal invariant
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail_argument(const std::string& m) { throw Error(ErrorKind::argument, m); }
[[noreturn]] inline void fail_parse(const std::string& m) { throw Error(ErrorKind::parse, m); }
[[noreturn]] inline void fail_limit(const std::string& m) { throw Error(ErrorKind::limit, m); }
[[noreturn]] inline void fail_io(const std::string& m) { throw Error(ErrorKind::io, m); }
[[noreturn]] inline void fail_internal(const std::string& m) { throw Error(ErrorKind::internal, m); }

}  // namespace cg

#endif
