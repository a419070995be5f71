#pragma once

#include "tomo/generator.hpp"

namespace tomo::testing {

inline TomonoidTable nilpotent3() {
  return TomonoidTable::from_rows({{0, 0, 0}, {0, 0, 1}, {0, 1, 2}});
}

inline TomonoidTable idempotent3() {
  return TomonoidTable::from_rows({{0, 0, 0}, {0, 1, 1}, {0, 1, 2}});
}

// a * b differs from b * a for the two middle elements
inline TomonoidTable noncommutative4() {
  return TomonoidTable::from_rows(
      {{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 2, 2}, {0, 1, 2, 3}});
}

inline std::vector<TomonoidTable> oracle_tables_up_to(int max_size) {
  std::vector<TomonoidTable> out;
  for (int k = 1; k <= max_size; ++k)
    for (const TomonoidTable& t : brute_force_all(k, Filter::all)) out.push_back(t);
  return out;
}

}  // namespace tomo::testing
