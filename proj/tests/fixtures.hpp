#pragma once

#include <string>
#include <vector>

namespace fixtures {

using Matrix = std::vector<std::vector<int>>;

// The 5-cycle 0-1-3-4-2-0.
inline const Matrix kDqK = {{0, 1, 1, 0, 0}, {1, 0, 0, 1, 0}, {1, 0, 0, 0, 1}, {0, 1, 0, 0, 1}, {0, 0, 1, 1, 0}};

// Twelve labelings of the 5-cycle and their matrices, index for index.
inline const std::vector<std::string> kCycleAtoms = {"DRo", "Dbg", "DdW", "DLo", "D[S", "DpS",
                                                     "DYc", "DqK", "DMg", "DkK", "Dhc", "DUW"};
inline const std::vector<Matrix> kCycleMatrices = {
    {{0, 0, 1, 0, 1}, {0, 0, 0, 1, 1}, {1, 0, 0, 1, 0}, {0, 1, 1, 0, 0}, {1, 1, 0, 0, 0}},
    {{0, 1, 0, 0, 1}, {1, 0, 0, 1, 0}, {0, 0, 0, 1, 1}, {0, 1, 1, 0, 0}, {1, 0, 1, 0, 0}},
    {{0, 1, 0, 1, 0}, {1, 0, 0, 0, 1}, {0, 0, 0, 1, 1}, {1, 0, 1, 0, 0}, {0, 1, 1, 0, 0}},
    {{0, 0, 0, 1, 1}, {0, 0, 1, 0, 1}, {0, 1, 0, 1, 0}, {1, 0, 1, 0, 0}, {1, 1, 0, 0, 0}},
    {{0, 0, 1, 1, 0}, {0, 0, 1, 0, 1}, {1, 1, 0, 0, 0}, {1, 0, 0, 0, 1}, {0, 1, 0, 1, 0}},
    {{0, 1, 1, 0, 0}, {1, 0, 0, 0, 1}, {1, 0, 0, 1, 0}, {0, 0, 1, 0, 1}, {0, 1, 0, 1, 0}},
    {{0, 0, 1, 0, 1}, {0, 0, 1, 1, 0}, {1, 1, 0, 0, 0}, {0, 1, 0, 0, 1}, {1, 0, 0, 1, 0}},
    {{0, 1, 1, 0, 0}, {1, 0, 0, 1, 0}, {1, 0, 0, 0, 1}, {0, 1, 0, 0, 1}, {0, 0, 1, 1, 0}},
    {{0, 0, 0, 1, 1}, {0, 0, 1, 1, 0}, {0, 1, 0, 0, 1}, {1, 1, 0, 0, 0}, {1, 0, 1, 0, 0}},
    {{0, 1, 0, 1, 0}, {1, 0, 1, 0, 0}, {0, 1, 0, 0, 1}, {1, 0, 0, 0, 1}, {0, 0, 1, 1, 0}},
    {{0, 1, 0, 0, 1}, {1, 0, 1, 0, 0}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 1}, {1, 0, 0, 1, 0}},
    {{0, 0, 1, 1, 0}, {0, 0, 0, 1, 1}, {1, 0, 0, 0, 1}, {1, 1, 0, 0, 0}, {0, 1, 1, 0, 0}},
};

// A labeled 5-vertex graph, its canonical form and the canonizing map
// (1-based) as published with it.
inline const Matrix kCanonInput = {{0, 1, 0, 0, 0}, {1, 0, 1, 0, 1}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 1}, {0, 1, 0, 1, 0}};
inline const Matrix kCanonOutput = {{0, 0, 0, 0, 1}, {0, 0, 0, 1, 1}, {0, 0, 0, 1, 1}, {0, 1, 1, 0, 0}, {1, 1, 1, 0, 0}};
inline const std::vector<int> kCanonPerm1 = {1, 5, 2, 4, 3};

// Isomorphic pair; {1,2,3,5,4} (1-based) maps the first onto the second.
inline const Matrix kIsoA = {{0, 1, 0, 1, 1}, {1, 0, 1, 0, 0}, {0, 1, 0, 1, 0}, {1, 0, 1, 0, 1}, {1, 0, 0, 1, 0}};
inline const Matrix kIsoB = {{0, 1, 0, 1, 1}, {1, 0, 1, 0, 0}, {0, 1, 0, 0, 1}, {1, 0, 0, 0, 1}, {1, 0, 1, 1, 0}};
inline const std::vector<int> kIsoPerm1 = {1, 2, 3, 5, 4};

// Non-isomorphic pair (4 edges and an isolated vertex vs. 6 edges).
inline const Matrix kNonIsoA = {{0, 1, 1, 0, 1}, {1, 0, 0, 0, 1}, {1, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {1, 1, 0, 0, 0}};
inline const Matrix kNonIsoB = {{0, 1, 0, 0, 1}, {1, 0, 1, 1, 0}, {0, 1, 0, 0, 1}, {0, 1, 0, 0, 1}, {1, 0, 1, 1, 0}};

// Ramsey(3,5) class counts for n = 1..14.
inline const std::vector<int> kRamsey35Counts = {1, 2, 3, 7, 13, 32, 71, 179, 290, 313, 105, 12, 1, 0};

// Projected model counts of the symmetry-broken (3,5) encoding, n = 1..14.
inline const std::vector<int> kRamsey35Models = {1, 2, 3, 7, 18, 63, 255, 1100, 3912, 7319, 3806, 272, 2, 0};

}  // namespace fixtures
