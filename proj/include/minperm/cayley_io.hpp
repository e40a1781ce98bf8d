#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "minperm/group.hpp"

namespace minperm {

/// Text format: a line with n, then n rows of n whitespace-separated ids.
/// Lines whose first non-blank character is '#' are comments.
GroupTable read_cayley_table(std::istream &in, std::string label,
                             std::size_t order_cap = kDefaultOrderCap);
GroupTable read_cayley_table_file(const std::filesystem::path &path,
                                  std::size_t order_cap = kDefaultOrderCap);

void write_cayley_table(std::ostream &out, const GroupTable &g);

}  // namespace minperm
