#pragma once

#include <cstddef>
#include <string_view>

namespace minperm {

/// Resource limits shared by every stage of the pipeline.
struct Caps {
  std::size_t order = 4096;              // largest group order accepted
  std::size_t lattice = 200000;          // largest subgroup count
  std::size_t oracle_classes = 5000;     // conjugacy classes the oracle will search
  std::size_t branch = 4096;             // perfect-collection branching bound
  std::size_t listed_collections = 10000;  // explicit minimal collections kept by the oracle
};

/// Parses "order=N,lattice=N,oracle=N,branch=N,collections=N" on top of `base`.
/// Unknown keys or malformed values raise ParseError.
Caps parse_caps(std::string_view text, Caps base = {});

/// Applies the MINPERM_CAPS environment variable, if set.
Caps caps_from_env(Caps base = {});

}  // namespace minperm
