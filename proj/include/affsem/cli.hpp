#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace affsem::cli {

// Runs one CLI invocation. Exit codes: 0 success, 2 invalid input,
// 3 not applicable (precondition failure such as `hilbert --simplicial`
// on a non-simplicial semigroup).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace affsem::cli
