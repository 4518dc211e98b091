#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fuscat {

/// Runs the command line. Exit codes: 0 success, 1 verification failure,
/// 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace fuscat
