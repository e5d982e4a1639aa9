#pragma once

#include <cstdint>
#include <filesystem>
#include <variant>

#include "subconv/set_function.hpp"

namespace subconv {

// Runtime-tagged set function as read from disk.
using SetFunctionVariant = std::variant<SetFunction<std::int64_t>, SetFunction<double>>;

ScalarKind kind_of(const SetFunctionVariant& f);
int ground_set_size(const SetFunctionVariant& f);
SetFunction<double> as_real(const SetFunctionVariant& f);

// File format: {"n": <int>, "kind": "int"|"float", "values": [2^n numbers in
// bitmask index order]}. Doubles are serialized shortest-round-trip, so a
// written file re-parses to the identical function.
SetFunctionVariant load_set_function(const std::filesystem::path& path);
void save_set_function(const std::filesystem::path& path, const SetFunctionVariant& f);

}  // namespace subconv
