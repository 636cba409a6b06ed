#pragma once

#include <cstddef>
#include <string>

#include "gonality/galois.hpp"
#include "gonality/group_spec.hpp"

namespace gonality {

class ParseError : public Error {
  public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

/// Grammar: terms joined by '+', each "Z/k" or a bare integer k >= 2;
/// whitespace ignored.
AbelianGroupSpec parse_group(const std::string& spec);

/// "Q" or "Q(zeta_n)" with n >= 1.
FieldSpec parse_field(const std::string& spec);

std::string field_label(const FieldSpec& k);
std::string group_label(const AbelianGroupSpec& a);

}  // namespace gonality
