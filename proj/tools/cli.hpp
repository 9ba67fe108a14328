#pragma once

// Command-line front end. run_cli is the whole program minus argv handling,
// so tests can drive it with in-memory streams.

#include <ostream>
#include <string>
#include <vector>

#include "fricke/markov_tree.hpp"

namespace fricke::cli {

/// Exit codes.
inline constexpr int ok = 0;
inline constexpr int domain_error = 1;
inline constexpr int usage_error = 2;

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string tree_json(const std::vector<TreeNode>& nodes);
std::string tree_dot(const std::vector<TreeNode>& nodes);
std::string tree_plain(const std::vector<TreeNode>& nodes);

}  // namespace fricke::cli
