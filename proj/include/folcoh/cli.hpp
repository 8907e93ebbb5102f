#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace folcoh {

// Full command surface; argv without the program name. Returns 0 on success,
// 1 when a computed check fails, 2 on usage, file, or model errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace folcoh
