#include <cstddef>
#include <cstdint>
#include <string_view>

#include "sentcx/syntax.hpp"

extern "C" int LLVMFuzzerTestOneInput(const std::uint8_t* data,
                                      std::size_t size) {
  std::string_view text(reinterpret_cast<const char*>(data), size);
  try {
    sentcx::Formula f = sentcx::parse_formula(text);
    std::string printed = sentcx::print_formula(f);
    if (!(sentcx::parse_formula(printed) == f)) __builtin_trap();
  } catch (const sentcx::ParseError&) {
  }
  return 0;
}
