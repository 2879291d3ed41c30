#pragma once

// Partitions into distinct parts: exact counts, explicit listings, and the
// Hardy-Ramanujan comparison ratio log P_D(A) / (pi * sqrt(A/3)).

#include "bridgewalk/arith.hpp"

#include <vector>

namespace bridgewalk {

// P_D(0..a_max); P_D(0) = 1 (the empty partition).
std::vector<BigInt> distinct_partition_table(int a_max);

BigInt distinct_partitions(int a);

// All partitions of a into distinct parts, each written largest part first,
// listed in decreasing lexicographic order.  With max_parts >= 0, only
// partitions into at most that many parts are listed.
std::vector<std::vector<int>> list_distinct_partitions(int a, int max_parts = -1);

// log P_D(a) / (pi * sqrt(a/3)); tends to 1 from below as a grows.
double hr_ratio(int a);

}  // namespace bridgewalk
