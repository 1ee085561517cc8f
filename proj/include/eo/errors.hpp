#pragma once

#include <stdexcept>
#include <string>

namespace eo {

enum class Errc {
  parse,
  loop,
  index,
  param,
  cap_exceeded,
  not_eulerian,
  state_blowup,
  parity,
  shape,
  regularity,
  convergence,
  domain,
  size,
  radius_mismatch,
  gauge_invalid,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace eo
