#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace goldman {

// Runs one command (info | bracket | peripheral | mapcheck | witness |
// selftest) and returns the process exit code:
//   0 success / geometric / peripheral
//   1 usage error
//   2 validation or parse error
//   3 not an isomorphism
//   4 non-geometric (or witness absent)
//   5 not peripheral
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace goldman
