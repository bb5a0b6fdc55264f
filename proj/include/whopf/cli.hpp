// Command-line front end. Every subcommand prints a line-oriented
// "key: value" report whose keys appear in a fixed order, so two runs on the
// same input produce identical bytes.
#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace whopf::cli {

/// Exit codes: 0 when every check passes, 1 when a check fails or a
/// construction reports an error, 2 when the input cannot be used.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a of the bytes as 16 lowercase hex digits.
std::string fnv1a64(std::string_view bytes);

}  // namespace whopf::cli
