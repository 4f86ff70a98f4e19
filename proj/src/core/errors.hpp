#pragma once

#include <stdexcept>
#include <string>

namespace latin {

enum class Errc {
  invalid_argument,
  parse_error,
  symbol_out_of_range,
  duplicate_in_row,
  duplicate_in_column,
  order_mismatch,
  identical_squares,
  trade_not_contained,
  same_row,
  order_too_small,
  order_too_large,
  not_contained,
  not_a_cycle,
  bad_symbols,
  path_too_short,
  malformed_associated_square,
  verification_failed,
  internal,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

// Postcondition check that stays on in release builds.
inline void ensure(bool ok, const char* what) {
  if (!ok) throw Error(Errc::internal, std::string("internal invariant violated: ") + what);
}

}  // namespace latin
