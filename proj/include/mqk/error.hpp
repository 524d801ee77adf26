#pragma once

#include <stdexcept>
#include <string>

namespace mqk {

// Failure kinds surfaced by the library. Every throw site uses fail() so
// callers can dispatch on the kind instead of parsing messages.
enum class Errc {
  ring_mismatch,    // operands live over different coefficient rings
  trunc_mismatch,   // operands carry different truncation orders
  bad_argument,     // malformed input (wrong arity, out-of-range index, parse error)
  non_divisible,    // exact division has no quotient over the ring
  not_integral,     // coefficient falls outside the target ring
  no_ring_map,      // no coefficient map exists between the two rings
  not_homogeneous,  // input required to be graded-homogeneous is not
  not_idempotent,   // p∘p != p where a projector is required
  not_tate,         // summand is not a twist of the point motive
  precondition,     // documented operation precondition violated
  log_unavailable,  // the formal group law carries no logarithm
  half_unavailable, // 1/2 does not exist in the coefficient ring
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ring_mismatch: return "RingMismatch";
    case Errc::trunc_mismatch: return "TruncMismatch";
    case Errc::bad_argument: return "BadArgument";
    case Errc::non_divisible: return "NonDivisible";
    case Errc::not_integral: return "NotIntegral";
    case Errc::no_ring_map: return "NoRingMap";
    case Errc::not_homogeneous: return "NotHomogeneous";
    case Errc::not_idempotent: return "NotIdempotent";
    case Errc::not_tate: return "NotTate";
    case Errc::precondition: return "PreconditionViolated";
    case Errc::log_unavailable: return "LogUnavailable";
    case Errc::half_unavailable: return "HalfUnavailable";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace mqk
