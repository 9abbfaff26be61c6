#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grouptool {
namespace cli {

// Full command-line driver; returns the process exit code:
// 0 success / all suites pass, 1 suite failure or internal inconsistency,
// 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cli
}  // namespace grouptool
