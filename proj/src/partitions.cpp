#include "bridgewalk/partitions.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bridgewalk {

std::vector<BigInt> distinct_partition_table(int a_max) {
    if (a_max < 0) throw std::invalid_argument("a_max must be >= 0");
    std::vector<BigInt> p(std::size_t(a_max) + 1);
    p[0] = 1;
    for (int part = 1; part <= a_max; ++part)
        for (int a = a_max; a >= part; --a)
            p[std::size_t(a)] += p[std::size_t(a - part)];
    return p;
}

BigInt distinct_partitions(int a) {
    return distinct_partition_table(a).back();
}

namespace {

void list_rec(int remaining, int max_part, int parts_left,
              std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    if (parts_left == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        current.push_back(p);
        list_rec(remaining - p, p - 1, parts_left - 1, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> list_distinct_partitions(int a, int max_parts) {
    if (a < 0) throw std::invalid_argument("a must be >= 0");
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    list_rec(a, a, max_parts < 0 ? a + 1 : max_parts, current, out);
    return out;
}

double hr_ratio(int a) {
    if (a < 1) throw std::invalid_argument("a must be >= 1");
    BigInt p = distinct_partitions(a);
    signed long exp2;
    double mant = mpz_get_d_2exp(&exp2, p.get_mpz_t());
    double log_p = std::log(mant) + double(exp2) * std::numbers::ln2;
    return log_p / (std::numbers::pi * std::sqrt(double(a) / 3.0));
}

}  // namespace bridgewalk
