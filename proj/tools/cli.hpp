#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mostar::cli {

/// Exit codes: 0 success, 1 generic failure, 2 malformed input,
/// 3 not realizable, 4 unknown (chemical p = 5), 5 out of range.
int run(const std::vector<std::string> &args, std::istream &in,
        std::ostream &out, std::ostream &err);

}  // namespace mostar::cli
