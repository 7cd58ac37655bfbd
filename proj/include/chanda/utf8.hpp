#pragma once

#include <string>
#include <string_view>

namespace chanda::utf8 {

// Invalid sequences decode to U+FFFD; decoding never throws.
std::u32string decode(std::string_view text);
std::string encode(std::u32string_view text);
std::string encode(char32_t cp);

bool is_space(char32_t cp);

std::string trim(std::string_view text);

}  // namespace chanda::utf8
