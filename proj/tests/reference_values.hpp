#pragma once

// ZZ coefficients c_0.. of WWRNN strips, n = 1..6, counted by an
// independent Python script that enumerates Clar covers of the explicit
// graph (n <= 4) and expands the binomial display (n = 5, 6). Frozen here.

#include <vector>

namespace zz::test {

inline const std::vector<std::vector<long>> kO32Coefficients = {
    {10, 12, 3},
    {50, 100, 66, 16, 1},
    {175, 450, 425, 180, 33, 2},
    {490, 1470, 1695, 940, 255, 30, 1},
    {1176, 3920, 5145, 3360, 1130, 180, 10},
    {2520, 9072, 13048, 9520, 3675, 700, 50},
};

// a(S, k) for WWRNN 3.
inline const std::vector<long> kO32SextetCounts = {1, 18, 63, 68, 23, 2};

}  // namespace zz::test
