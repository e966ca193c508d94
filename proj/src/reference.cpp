#include "kodag/reference.hpp"

namespace kodag::reference {

// clang-format off
const int zeta_naturals[kRegion][kRegion] = {
    {1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1},
    {0,1,0,1,1,1,1,1,1,1,1,1,1,1,1,1},
    {0,0,1,1,1,1,1,1,1,1,1,1,1,1,1,1},
    {0,0,0,1,0,0,1,1,1,1,1,1,1,1,1,1},
    {0,0,0,0,1,0,1,1,1,1,1,1,1,1,1,1},
    {0,0,0,0,0,1,1,1,1,1,1,1,1,1,1,1},
    {0,0,0,0,0,0,1,0,0,0,1,1,1,1,1,1},
    {0,0,0,0,0,0,0,1,0,0,1,1,1,1,1,1},
    {0,0,0,0,0,0,0,0,1,0,1,1,1,1,1,1},
    {0,0,0,0,0,0,0,0,0,1,1,1,1,1,1,1},
    {0,0,0,0,0,0,0,0,0,0,1,0,0,0,0,1},
    {0,0,0,0,0,0,0,0,0,0,0,1,0,0,0,1},
    {0,0,0,0,0,0,0,0,0,0,0,0,1,0,0,1},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,1,0,1},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,1},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1},
};

const int zeta_fib_root[kRegion][kRegion] = {
    {1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1},
    {0,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1},
    {0,0,1,1,1,1,1,1,1,1,1,1,1,1,1,1},
    {0,0,0,1,0,1,1,1,1,1,1,1,1,1,1,1},
    {0,0,0,0,1,1,1,1,1,1,1,1,1,1,1,1},
    {0,0,0,0,0,1,0,0,1,1,1,1,1,1,1,1},
    {0,0,0,0,0,0,1,0,1,1,1,1,1,1,1,1},
    {0,0,0,0,0,0,0,1,1,1,1,1,1,1,1,1},
    {0,0,0,0,0,0,0,0,1,0,0,0,0,1,1,1},
    {0,0,0,0,0,0,0,0,0,1,0,0,0,1,1,1},
    {0,0,0,0,0,0,0,0,0,0,1,0,0,1,1,1},
    {0,0,0,0,0,0,0,0,0,0,0,1,0,1,1,1},
    {0,0,0,0,0,0,0,0,0,0,0,0,1,1,1,1},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,1,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1},
};

const int mobius_naturals[kRegion][kRegion] = {
    {1,-1,-1, 1, 1, 1,-2,-2,-2,-2, 6, 6, 6, 6, 6,-24},
    {0, 1, 0,-1,-1,-1, 2, 2, 2, 2,-6,-6,-6,-6,-6, 24},
    {0, 0, 1,-1,-1,-1, 2, 2, 2, 2,-6,-6,-6,-6,-6, 24},
    {0, 0, 0, 1, 0, 0,-1,-1,-1,-1, 3, 3, 3, 3, 3,-12},
    {0, 0, 0, 0, 1, 0,-1,-1,-1,-1, 3, 3, 3, 3, 3,-12},
    {0, 0, 0, 0, 0, 1,-1,-1,-1,-1, 3, 3, 3, 3, 3,-12},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0,-1,-1,-1,-1,-1,  4},
    {0, 0, 0, 0, 0, 0, 0, 1, 0, 0,-1,-1,-1,-1,-1,  4},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0,-1,-1,-1,-1,-1,  4},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1,-1,-1,-1,-1,-1,  4},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,  1},
};

const int mobius_fib_root[kRegion][kRegion] = {
    {1,-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1,-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1,-1,-1, 1, 1, 1,-2,-2,-2,-2,-2, 8, 8, 8},
    {0, 0, 0, 1, 0,-1,-1,-1, 2, 2, 2, 2, 2,-8,-8,-8},
    {0, 0, 0, 0, 1,-1,-1,-1, 2, 2, 2, 2, 2,-8,-8,-8},
    {0, 0, 0, 0, 0, 1, 0, 0,-1,-1,-1,-1,-1, 4, 4, 4},
    {0, 0, 0, 0, 0, 0, 1, 0,-1,-1,-1,-1,-1, 4, 4, 4},
    {0, 0, 0, 0, 0, 0, 0, 1,-1,-1,-1,-1,-1, 4, 4, 4},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0,-1,-1,-1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0,-1,-1,-1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0,-1,-1,-1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0,-1,-1,-1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1,-1,-1,-1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
};

const int mobius_one_one_threes[kRegion][kRegion] = {
    {1,-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,  0,  0},
    {0, 1,-1,-1,-1, 2, 2, 2,-4,-4,-4, 8, 8, 8,-16,-16},
    {0, 0, 1, 0, 0,-1,-1,-1, 2, 2, 2,-4,-4,-4,  8,  8},
    {0, 0, 0, 1, 0,-1,-1,-1, 2, 2, 2,-4,-4,-4,  8,  8},
    {0, 0, 0, 0, 1,-1,-1,-1, 2, 2, 2,-4,-4,-4,  8,  8},
    {0, 0, 0, 0, 0, 1, 0, 0,-1,-1,-1, 2, 2, 2, -4, -4},
    {0, 0, 0, 0, 0, 0, 1, 0,-1,-1,-1, 2, 2, 2, -4, -4},
    {0, 0, 0, 0, 0, 0, 0, 1,-1,-1,-1, 2, 2, 2, -4, -4},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0,-1,-1,-1,  2,  2},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0,-1,-1,-1,  2,  2},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1,-1,-1,-1,  2,  2},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, -1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, -1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, -1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,  1,  0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,  0,  1},
};

const int mobius_one_threes[kRegion][kRegion] = {
    {1,-1,-1,-1, 2, 2, 2,-4,-4,-4, 8, 8, 8,-16,-16,-16},
    {0, 1, 0, 0,-1,-1,-1, 2, 2, 2,-4,-4,-4,  8,  8,  8},
    {0, 0, 1, 0,-1,-1,-1, 2, 2, 2,-4,-4,-4,  8,  8,  8},
    {0, 0, 0, 1,-1,-1,-1, 2, 2, 2,-4,-4,-4,  8,  8,  8},
    {0, 0, 0, 0, 1, 0, 0,-1,-1,-1, 2, 2, 2, -4, -4, -4},
    {0, 0, 0, 0, 0, 1, 0,-1,-1,-1, 2, 2, 2, -4, -4, -4},
    {0, 0, 0, 0, 0, 0, 1,-1,-1,-1, 2, 2, 2, -4, -4, -4},
    {0, 0, 0, 0, 0, 0, 0, 1, 0, 0,-1,-1,-1,  2,  2,  2},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0,-1,-1,-1,  2,  2,  2},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1,-1,-1,-1,  2,  2,  2},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, -1, -1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, -1, -1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, -1, -1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,  1,  0,  0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,  0,  1,  0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,  0,  0,  1},
};

const int coding_naturals[kCodingOrder][kCodingOrder] = {
    {1,-1, 1,-2, 6,-24},
    {0, 1,-1, 2,-6, 24},
    {0, 0, 1,-1, 3,-12},
    {0, 0, 0, 1,-1,  4},
    {0, 0, 0, 0, 1, -1},
    {0, 0, 0, 0, 0,  1},
};

const int coding_one_one_threes[kCodingOrder][kCodingOrder] = {
    {1,-1, 0, 0, 0, 0},
    {0, 1,-1, 2,-4, 8},
    {0, 0, 1,-1, 2,-4},
    {0, 0, 0, 1,-1, 2},
    {0, 0, 0, 0, 1,-1},
    {0, 0, 0, 0, 0, 1},
};

const int coding_one_threes[kCodingOrder][kCodingOrder] = {
    {1,-1, 2,-4, 8,-16},
    {0, 1,-1, 2,-4,  8},
    {0, 0, 1,-1, 2, -4},
    {0, 0, 0, 1,-1,  2},
    {0, 0, 0, 0, 1, -1},
    {0, 0, 0, 0, 0,  1},
};
// clang-format on

bool region_matches(const IncidenceMatrix& m,
                    const int (&fixture)[kRegion][kRegion]) {
    if (m.dim() < kRegion) return false;
    for (int i = 0; i < kRegion; ++i) {
        for (int j = 0; j < kRegion; ++j) {
            if (m.at(i, j) != fixture[i][j]) return false;
        }
    }
    return true;
}

bool coding_matches(const CodingMatrix& cm,
                    const int (&fixture)[kCodingOrder][kCodingOrder]) {
    if (cm.order() != kCodingOrder) return false;
    for (int r = 1; r <= kCodingOrder; ++r) {
        for (int s = 1; s <= kCodingOrder; ++s) {
            if (cm.c(r, s) != fixture[r - 1][s - 1]) return false;
        }
    }
    return true;
}

} // namespace kodag::reference
