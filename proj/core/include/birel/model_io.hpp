#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "birel/model.hpp"

namespace birel {

// Line-oriented `birel v1` model format:
//
//   birel v1
//   world <name>            # declaration order defines indices
//   fallible <name>
//   pre <a> <b>             # a <= b
//   mod <a> <b>             # a R b
//   val <prop> <name> ...
//   close pre | close mod   # replace by reflexive-transitive closure
//
// `#` starts a comment. Names must be declared before use; repeated edges are
// idempotent. Errors are reported as FormatError with a 1-based line number.
BirelationalModel parse_model(std::string_view text);
BirelationalModel load_model(const std::string& path);

// Emits every edge literally (reflexive ones included), so that parsing the
// output yields an identical model.
std::string write_model(const BirelationalModel& m);

std::string read_file(const std::string& path);
bool is_identifier(std::string_view s);

}  // namespace birel
