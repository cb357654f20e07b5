#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace swe::cli {

// args excludes the program name. Returns the exit status: 0 on an accepted
// or consistent verdict, 1 on a rejected or refuted one, 2 on usage errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace swe::cli
