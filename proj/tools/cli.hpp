#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace edgekeep::cli {

// Exit statuses: 0 ok, 1 theorem-violation candidate (or a counterexample),
// 2 usage or input error, 3 internal failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace edgekeep::cli
