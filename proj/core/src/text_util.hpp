#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace retract::detail {

auto split_ws(const std::string & line) -> std::vector<std::string>;

auto parse_uint(const std::string & tok, const std::string & source, std::size_t line) -> std::uint64_t;

} // namespace retract::detail
