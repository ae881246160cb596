#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace retract::cli {

// args excludes the program name. Returns 0 on success or PASS, 1 on FAIL,
// 2 on usage or input errors.
auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int;

} // namespace retract::cli
