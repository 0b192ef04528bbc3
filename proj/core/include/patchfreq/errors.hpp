#pragma once

#include <stdexcept>
#include <string>

namespace patchfreq {

enum class Errc {
  DivisionByZero,
  ZeroValue,
  NotInGoldenSubfield,
  InternalDerivationError,
  AnchorNotShallow,
  UnknownTileClass,
  OverlappingTiles,
  DisconnectedPatch,
  NonGenericCut,
  RegionTooSmall,
  UnrecognizedEdge,
  NoValidLift,
  SchemaError,
};

const char* errc_name(Errc c);

// All library failures are reported through this type; `code` tells the
// caller which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

  // Exit-status class used by the command line tool.
  bool is_schema() const { return code_ == Errc::SchemaError; }
  bool is_internal() const { return code_ == Errc::InternalDerivationError; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace patchfreq
