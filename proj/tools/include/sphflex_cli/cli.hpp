#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sphflex::cli {

// Exit status: 0 success, 1 domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SuiteEntry {
  std::string name;
  std::string computed;
  std::string expected;
  bool pass = false;
};

std::vector<SuiteEntry> verify_suite();

}  // namespace sphflex::cli
