#pragma once

#include "kodag/incidence.hpp"
#include "kodag/matrix.hpp"

namespace kodag::reference {

// Known-good hand-checked regions of incidence-algebra matrices for small
// cobwebs, frozen as ground truth for the verification suites. Each array is
// the top-left region of the full matrix for the named sequence spec.

inline constexpr int kRegion = 16;
inline constexpr int kCodingOrder = 6;

// zeta, cobweb of nat with 6 levels.
extern const int zeta_naturals[kRegion][kRegion];
// zeta, cobweb of fib+root with 7 levels (sizes 1,1,1,2,3,5,8).
extern const int zeta_fib_root[kRegion][kRegion];

// mu = inverse zeta for the same two cobwebs.
extern const int mobius_naturals[kRegion][kRegion];
extern const int mobius_fib_root[kRegion][kRegion];

// mu for the explicit sequences 1,1,3,3,3,3,3 and 1,3,3,3,3,3.
extern const int mobius_one_one_threes[kRegion][kRegion];
extern const int mobius_one_threes[kRegion][kRegion];

// Coding matrices C(mu_F) for nat, 1,1,3,3,3,3 and 1,3,3,3,3,3 at order 6.
extern const int coding_naturals[kCodingOrder][kCodingOrder];
extern const int coding_one_one_threes[kCodingOrder][kCodingOrder];
extern const int coding_one_threes[kCodingOrder][kCodingOrder];

/// True iff the top-left region of m equals the frozen fixture.
bool region_matches(const IncidenceMatrix& m, const int (&fixture)[kRegion][kRegion]);

/// True iff the coding matrix equals the frozen 6x6 triangle.
bool coding_matches(const CodingMatrix& cm,
                    const int (&fixture)[kCodingOrder][kCodingOrder]);

} // namespace kodag::reference
