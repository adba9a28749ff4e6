#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rscrit::cli {

// args[0] is the program name. Returns 0 on success, 1 on malformed input,
// 2 on a domain error. The report goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rscrit::cli
