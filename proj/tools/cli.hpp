#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace microga::cli {

/// Entry point shared by the `microga` executable and the tests.
/// `args` excludes the program name. Normal output goes to `out` unless
/// `--out` names a file; diagnostics go to `err`. Returns the exit status.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace microga::cli
