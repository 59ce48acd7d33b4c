#include "surfpts/error.hpp"

namespace surfpts {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::not_prime_power: return "not-prime-power";
    case Errc::form_violation: return "form-violation";
    case Errc::root_bound_violation: return "root-bound-violation";
    case Errc::too_many_generators: return "too-many-generators";
    case Errc::parse_error: return "parse-error";
    case Errc::unsupported_prime: return "unsupported-prime";
    case Errc::depth_exhausted: return "depth-exhausted";
    case Errc::internal_invariant: return "internal-invariant-violation";
  }
  return "unknown";
}

}  // namespace surfpts
