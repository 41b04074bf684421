#ifndef DEGINF_ERROR_HPP
#define DEGINF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace deginf {

/// Symbolic error kinds; the CLI maps them onto its exit-code contract.
enum class Errc {
  ZeroVector,
  Singular,
  DomainMismatch,
  ParseError,
  DegeneratePolytope,
  OriginNotInterior,
  Unbounded,
  InvalidPolygon,
  InvalidFan,
  NotPositive,
  NotProjective,
  NotDominant,
  AmbiguousWitness,
  NotNonNegative,
  DegeneratePart,
  CapExceeded,
  BoxExceeded,
  ConfigError,
  InternalInvariant,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace deginf

#endif
