#ifndef RTAU_CLI_HPP
#define RTAU_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "rtau/errors.hpp"

namespace rtau::cli {

/// 2 parse, 3 precondition, 4 search cap, 5 ledger.
int exit_code(Errc code) noexcept;

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rtau::cli

#endif  // RTAU_CLI_HPP
