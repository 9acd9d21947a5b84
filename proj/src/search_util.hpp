#pragma once

#include <cstdint>
#include <string>

#include "parabola/errors.hpp"

namespace parabola::detail {

inline void check_cap(std::uint64_t p, std::uint64_t cap, const char* what) {
  if (p > cap) {
    throw TooLarge(std::string(what) + " search is capped at p <= " + std::to_string(cap) +
                   " (got p = " + std::to_string(p) + "); raise it with PARABOLA_MAX_SEARCH_P");
  }
}

}  // namespace parabola::detail
