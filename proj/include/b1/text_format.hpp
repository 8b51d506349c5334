#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "b1/algebra.hpp"
#include "b1/monoid.hpp"

namespace b1 {

// Algebra files:
//   n <size>
//   add
//   <n rows of n space-separated indices>
//   mul
//   <n rows>
// '#' starts a comment. If the identities are not at indices 0 and 1 the
// elements are relabelled so that they are.
//
// Monoid files:
//   n <size>
//   e <identity index>
//   op
//   <n rows>

Algebra parse_algebra(std::string_view text);
Algebra parse_algebra_file(const std::filesystem::path& path);
std::string format_algebra(const Algebra& a);

Monoid parse_monoid(std::string_view text);
Monoid parse_monoid_file(const std::filesystem::path& path);
std::string format_monoid(const Monoid& m);

}  // namespace b1
