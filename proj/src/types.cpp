#include "cmm/types.hpp"

#include <string>

#include "cmm/errors.hpp"

namespace cmm {

std::string_view mode_name(Mode mode) {
  switch (mode) {
    case Mode::b: return "b";
    case Mode::m: return "m";
    case Mode::c1: return "c1";
    case Mode::c2: return "c2";
  }
  return "?";
}

Mode parse_mode(std::string_view name) {
  for (Mode mode : kAllModes) {
    if (mode_name(mode) == name) return mode;
  }
  throw DomainError("unknown mode label '" + std::string(name) + "' (expected b, m, c1, c2)");
}

std::string bipartition_label(const Bipartition& pair) {
  return std::string(mode_name(pair.u)) + "-" + std::string(mode_name(pair.v));
}

Bipartition parse_bipartition(std::string_view text) {
  const auto dash = text.find('-');
  if (dash == std::string_view::npos) {
    throw DomainError("bipartition must look like 'c2-m' (got '" + std::string(text) + "')");
  }
  Bipartition pair{parse_mode(text.substr(0, dash)), parse_mode(text.substr(dash + 1))};
  if (pair.u == pair.v) throw DomainError("bipartition needs two distinct modes");
  return pair;
}

}  // namespace cmm
