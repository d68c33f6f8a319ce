#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace relmod {

// Exit codes: 0 = yes/success, 1 = no/verification failed, 2 = error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace relmod
