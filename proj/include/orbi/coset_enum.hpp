// Felsch-style Todd-Coxeter enumeration over the trivial subgroup.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orbi/presentations.hpp"

namespace orbi {

enum class EnumStatus { Complete, Overflow };

struct CosetTable {
  // Column 2g is generator g, column 2g+1 its inverse. Only live cosets are
  // kept after compaction; entries are coset numbers (0 is the subgroup coset).
  std::vector<std::vector<int>> rows;
  std::int64_t live = 0;
  std::int64_t defined = 0;  // total cosets ever defined, the budgeted quantity
  EnumStatus status = EnumStatus::Overflow;
};

struct EnumResult {
  EnumStatus status = EnumStatus::Overflow;
  std::int64_t order = 0;  // valid when Complete
  CosetTable table;
};

// Relations are turned into relators lhs * rhs^-1 and cyclically reduced.
EnumResult enumerate_order(const Presentation& p, std::int64_t max_cosets = 1'000'000);

// True when the table is closed and every relator traces a loop at every coset.
bool table_is_consistent(const Presentation& p, const CosetTable& t);

}  // namespace orbi
