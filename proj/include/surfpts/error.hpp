#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace surfpts {

enum class Errc {
  invalid_argument,
  not_prime_power,
  form_violation,
  root_bound_violation,
  too_many_generators,
  parse_error,
  unsupported_prime,
  depth_exhausted,
  internal_invariant,
};

/// Kebab-case name used in CLI output and JSON ("not-prime-power", ...).
std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

/// Internal consistency check; violations surface as Errc::internal_invariant.
inline void ensure(bool condition, const char* what) {
  if (!condition) fail(Errc::internal_invariant, what);
}

}  // namespace surfpts
