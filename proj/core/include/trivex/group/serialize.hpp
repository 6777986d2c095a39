#pragma once

#include <string>
#include <string_view>

#include "trivex/group/pc_presentation.hpp"

namespace trivex::group {

inline constexpr int kPcpFormatVersion = 1;

// Versioned JSON document holding the full presentation; exponent vectors are
// hex integers sum(b_i 2^i), most significant digit first.
std::string to_json(const PcPresentation& pcp, int indent = -1);

// Inverse of to_json. Throws InvalidArgument on malformed or mismatched input.
PcPresentation pcp_from_json(std::string_view text);

}  // namespace trivex::group
