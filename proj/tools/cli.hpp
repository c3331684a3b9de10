#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ssjoin::cli {

// Exit codes: 0 ok, 1 compare found differing results, 2 bad usage or input.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ssjoin::cli
