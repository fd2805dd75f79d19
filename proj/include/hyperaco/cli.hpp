#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperaco {

/// Entry point behind the `hyperaco` binary, callable in-process for tests.
/// `args` excludes the program name. Exit codes: 0 success, 1 usage error,
/// 2 invalid instance or precondition, 3 iteration budget exhausted without
/// reaching --target.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperaco
