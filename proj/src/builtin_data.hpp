#pragma once

#include <string_view>

// Defined in a file generated at configure time from data/.
namespace jzero::data {

std::string_view builtin_lexicon();
std::string_view builtin_rules();

}  // namespace jzero::data
