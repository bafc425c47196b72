#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbit_atlas {

// Exit status: 0 ok, 1 verification or computation failure, 2 bad arguments.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace orbit_atlas
