#pragma once

#include <stdexcept>
#include <string>

namespace regmap {

// bad_argument covers malformed specs, invalid parameters, and wrong-backend
// requests; cap_exceeded covers configured resource limits.  The CLI maps the
// two kinds to distinct exit codes.  not_involution / not_generating are the
// two ways a rotation pair can fail to define a map, kept distinct so callers
// can tally the rejection reasons separately.
enum class Errc { bad_argument, cap_exceeded, not_involution, not_generating };

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) {
  throw Error(c, msg);
}

}  // namespace regmap
