#pragma once

// The `quandle` command line, as a library entry point.
//
//   quandle check <file> <property>
//   quandle construct aff|ext|proj|product [--group] [--f] [--d] [--k]
//                     [--left --right] [--out]
//   quandle iso <file1> <file2> [--method auto|brute|extension]
//   quandle enumerate <n> [--filter] [--emit-tables dir] [--format json|csv] [--jobs]
//   quandle epsilon --group --f --k
//
// Exit codes: 0 holds / isomorphic, 1 does not hold, 2 input error, 3 guard exceeded.

#include <iosfwd>
#include <string>
#include <vector>

#include "quandle/abelian.hpp"

namespace quandle {

enum ExitCode : int { kHolds = 0, kFails = 1, kInputError = 2, kGuardExceeded = 3 };

/// `args` excludes the program name. A file argument "-" reads `in`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in);

/// "2,2" -> Z_2 + Z_2; "1" -> trivial group.
FiniteAbelianGroup parse_group(const std::string& spec);

/// "id", a single integer k (multiplication by k), or matrix rows separated
/// by ';' with entries separated by ','.
GroupMap parse_map(const FiniteAbelianGroup& a, const std::string& spec);

/// Elements separated by ',', coordinates of one element separated by ':'.
std::vector<Element> parse_elements(const FiniteAbelianGroup& a, const std::string& spec);

}  // namespace quandle
