#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "polyfree/algebra.hpp"

namespace polyfree::cli {

/// Runs one invocation (argv without the program name). Returns the exit
/// status: 0 success/pass, 1 verification failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Weight-1 integer combination of generator names, e.g. "Z[1]+2*B[1,2;1]".
LieElement parse_combination(const AlgebraSpec& a, const std::string& expr,
                             int truncation);

/// Comma-separated generator names; commas inside brackets do not split.
std::vector<std::string> split_generator_list(const std::string& text);

}  // namespace polyfree::cli
