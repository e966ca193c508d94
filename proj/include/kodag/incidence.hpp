#pragma once

#include <optional>
#include <string>

#include "kodag/matrix.hpp"
#include "kodag/poset.hpp"
#include "kodag/sequence.hpp"

namespace kodag {

/// Reflexive-transitive Boolean closure of the cover relation: the 0/1
/// characteristic matrix of the partial order. Computed by repeated Boolean
/// block products of the nilpotent kappa, never by fixed-point iteration.
IncidenceMatrix zeta_closure(const GradedPoset& p);

/// zeta for the cobweb of the sequence, built entrywise over linear labels
/// as the all-ones upper triangle minus the per-stair runs of zeros: the
/// k-th row of a size-m level cuts exactly m - k zeros after its diagonal.
IncidenceMatrix zeta_stair_formula(const Sequence& seq, int levels);

/// zeta built in grid coordinates: 1 iff same node or strictly higher
/// level, then mapped to linear labels.
IncidenceMatrix zeta_grid_formula(const Sequence& seq, int levels);

/// zeta built from cumulative level sums S(n): an entry x < y is cut to 0
/// exactly when some block (S(n), S(n+1)] contains both labels.
IncidenceMatrix zeta_cumsum_formula(const Sequence& seq, int levels);

/// Exact integer inverse of a unit upper-triangular matrix by
/// back-substitution; mu * zeta = zeta * mu = identity holds exactly.
/// Throws DomainError on a non-unit diagonal or nonzero lower part.
IncidenceMatrix mobius_inverse(const IncidenceMatrix& zeta);

/// Mobius matrix from the interval recurrence mu(x,y) = -sum over
/// x <= z < y of mu(x,z), evaluated over the explicit order relation.
IncidenceMatrix mobius_recurrence(const GradedPoset& p);

/// Per-level-pair coefficients c_{r,s} of the Mobius closed form:
/// c_{r,r} = 1 and c_{r,s} = (-1)^(s-r) * K_s(r_F) for s > r.
class CodingMatrix {
public:
    explicit CodingMatrix(int n);
    int order() const { return n_; }
    BigInt& c(int r, int s) { return m_.at(r - 1, s - 1) ; } // 1-based levels
    const BigInt& c(int r, int s) const { return m_.at(r - 1, s - 1); }
    const IntMatrix& entries() const { return m_; }
    bool operator==(const CodingMatrix&) const = default;

private:
    int n_;
    IntMatrix m_;
};

CodingMatrix coding_matrix(const Sequence& seq, int levels);

struct KrotonValue {
    int r = 0;
    int s = 0;
    BigInt value;
};

/// K_s(r_F) = product of (i_F - 1) for r < i < s (empty product = 1),
/// cross-checked against the shift recurrence before returning.
/// Requires s > r >= 1.
KrotonValue kroton(const Sequence& seq, int r, int s);

/// Shift recurrence route: K_{r+1} = 1, K_{t+1} = K_t * (t_F - 1).
BigInt kroton_recurrence(const Sequence& seq, int r, int s);

/// Alternating-sum route, the signed level recurrence with node
/// multiplicities: K_{r,s} = -sum_{r <= i < s} (-1)^(s-i) * w_i * K_{r,i}
/// where w_r = 1, w_i = i_F for i > r, and K_{r,r} reads as 1.
BigInt kroton_alternating(const Sequence& seq, int r, int s);

enum class ClosedFormMode { Strict, Conjecture };

struct ClosedFormResult {
    IncidenceMatrix matrix; // the closed-form candidate
    bool agrees_with_inversion = false;
    std::optional<MatrixCoord> first_mismatch; // row-major first difference
    BigInt exact_value;     // exact mu at the mismatch
    BigInt candidate_value; // closed-form value at the mismatch
};

/// Closed-form Mobius candidate: identity diagonal blocks and block (r, s)
/// equal to c_{r,s} times the 0/1 level-reachability pattern. On cobwebs
/// (Strict mode requires one) the candidate provably equals exact inversion;
/// Conjecture mode compares against inversion on any graded poset and
/// reports the first mismatching entry.
ClosedFormResult mobius_closed_form(const GradedPoset& p, ClosedFormMode mode);

/// Cobweb Mobius value straight from grid coordinates:
/// [x = y] - [one level up] + (-1)^(dv) * K over longer gaps.
/// Validates 1 <= pos <= level size on both nodes.
BigInt mobius_grid_formula(const Sequence& seq, NodeRef x, NodeRef y);

/// Reflexive cover eta = kappa + delta.
IncidenceMatrix eta_matrix(const GradedPoset& p);

/// Exact inverse of eta: block (r, s) is (-1)^(s-r) times the integer block
/// product, so eta * eta_inverse = identity.
IncidenceMatrix eta_inverse(const GradedPoset& p);

/// [Max] = (I - kappa)^-1 over the integers; entry (x, y) counts maximal
/// chains of the interval [x, y], with [Max](x, x) = 1.
IncidenceMatrix max_matrix(const GradedPoset& p);

/// Entrywise indicator: 1 where the entry is positive, 0 at zero.
/// Throws DomainError on negative entries.
IncidenceMatrix l_logic(const IncidenceMatrix& m);

struct StructureReport {
    bool ok = true;
    std::optional<MatrixCoord> offender;
    std::string reason;
};

/// Checks the block shape shared by every incidence-algebra element: zero
/// below the block diagonal and diagonal blocks that are diagonal matrices.
StructureReport validate_block_structure(const IncidenceMatrix& m);

} // namespace kodag
