#include "kodag/incidence.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "kodag/errors.hpp"

namespace kodag {

namespace {

// Boolean product of 0/1 blocks with early exit per entry.
BitBlock bool_mul(const BitBlock& a, const BitBlock& b) {
    BitBlock out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < b.cols(); ++j) {
            for (int k = 0; k < a.cols(); ++k) {
                if (a.get(i, k) && b.get(k, j)) {
                    out.set(i, j, true);
                    break;
                }
            }
        }
    }
    return out;
}

void write_block(IncidenceMatrix& m, int r, int s, const BitBlock& b) {
    const int roff = m.levels().offset(r), coff = m.levels().offset(s);
    for (int i = 0; i < b.rows(); ++i) {
        for (int j = 0; j < b.cols(); ++j) {
            if (b.get(i, j)) m.at(roff + i, coff + j) = 1;
        }
    }
}

std::vector<int> cobweb_sizes(const Sequence& seq, int levels) {
    return GradedPoset::cobweb(seq, levels).sizes();
}

// K_s(r_F) over a concrete size list (1-based levels).
BigInt kroton_from_sizes(const std::vector<int>& sizes, int r, int s) {
    BigInt prod = 1;
    for (int i = r + 1; i < s; ++i) {
        prod *= BigInt(sizes[static_cast<size_t>(i) - 1]) - 1;
    }
    return prod;
}

CodingMatrix coding_from_sizes(const std::vector<int>& sizes) {
    const int n = static_cast<int>(sizes.size());
    CodingMatrix cm(n);
    for (int r = 1; r <= n; ++r) {
        cm.c(r, r) = 1;
        for (int s = r + 1; s <= n; ++s) {
            BigInt k = kroton_from_sizes(sizes, r, s);
            cm.c(r, s) = ((s - r) % 2 == 0) ? k : -k;
        }
    }
    return cm;
}

} // namespace

IncidenceMatrix zeta_closure(const GradedPoset& p) {
    const int n = p.levels();
    IncidenceMatrix zeta = IncidenceMatrix::identity(p.sizes());
    // reach[r] holds the Boolean product of blocks r..s-1 as s advances.
    std::vector<BitBlock> reach;
    for (int t = 1; t < n; ++t) reach.push_back(p.block(t));
    for (int s = 2; s <= n; ++s) {
        for (int r = 1; r < s; ++r) {
            BitBlock& cur = reach[static_cast<size_t>(r) - 1];
            if (s > r + 1) cur = bool_mul(cur, p.block(s - 1));
            write_block(zeta, r, s, cur);
        }
    }
    return zeta;
}

IncidenceMatrix zeta_stair_formula(const Sequence& seq, int levels) {
    const std::vector<int> sizes = cobweb_sizes(seq, levels);
    LevelIndex idx(sizes);
    const int total = idx.total();
    IncidenceMatrix zeta(sizes);
    for (int x = 1; x <= total; ++x) {
        const int level = idx.level_of(x - 1);
        const int k = x - idx.offset(level);          // offset within the stair
        const int run = idx.size(level) - k;          // zeros cut after the 1
        for (int y = x; y <= total; ++y) {
            const int ocean = 1;                      // [x <= y]
            const int cut = (y - x >= 1 && y - x <= run) ? 1 : 0;
            zeta.at(x - 1, y - 1) = ocean - cut;
        }
    }
    return zeta;
}

IncidenceMatrix zeta_grid_formula(const Sequence& seq, int levels) {
    GradedPoset p = GradedPoset::cobweb(seq, levels);
    IncidenceMatrix zeta(p.sizes());
    for (int x = 1; x <= p.node_count(); ++x) {
        NodeRef a = p.grid_of(x);
        for (int y = 1; y <= p.node_count(); ++y) {
            NodeRef b = p.grid_of(y);
            const bool same = (a == b);
            const bool above = b.level > a.level;
            zeta.at(x - 1, y - 1) = (same || above) ? 1 : 0;
        }
    }
    return zeta;
}

IncidenceMatrix zeta_cumsum_formula(const Sequence& seq, int levels) {
    const std::vector<int> sizes = cobweb_sizes(seq, levels);
    LevelIndex idx(sizes);
    const int total = idx.total();
    // S(0..levels) as plain ints; sizes were already bounds-checked.
    std::vector<int> S(static_cast<size_t>(levels) + 1, 0);
    for (int m = 1; m <= levels; ++m) {
        S[static_cast<size_t>(m)] = S[static_cast<size_t>(m) - 1] +
                                    sizes[static_cast<size_t>(m) - 1];
    }
    IncidenceMatrix zeta(sizes);
    for (int x = 1; x <= total; ++x) {
        for (int y = x; y <= total; ++y) {
            int cut = 0;
            if (x < y) {
                for (int m = 0; m < levels; ++m) {
                    if (x > S[static_cast<size_t>(m)] &&
                        y <= S[static_cast<size_t>(m) + 1]) {
                        cut += 1;
                    }
                }
            }
            zeta.at(x - 1, y - 1) = 1 - cut;
        }
    }
    return zeta;
}

IncidenceMatrix mobius_inverse(const IncidenceMatrix& zeta) {
    const int n = zeta.dim();
    for (int i = 0; i < n; ++i) {
        if (zeta.at(i, i) != 1) {
            throw DomainError("inverse requires a unit diagonal, found " +
                              zeta.at(i, i).str() + " at index " +
                              std::to_string(i));
        }
        for (int j = 0; j < i; ++j) {
            if (!zeta.at(i, j).is_zero()) {
                throw DomainError("inverse requires an upper-triangular "
                                  "matrix, found a nonzero below the diagonal");
            }
        }
    }
    IncidenceMatrix mu(zeta.sizes());
    for (int i = 0; i < n; ++i) {
        mu.at(i, i) = 1;
        for (int j = i + 1; j < n; ++j) {
            BigInt acc = 0;
            for (int k = i; k < j; ++k) {
                const BigInt& m = mu.at(i, k);
                if (m.is_zero()) continue;
                const BigInt& z = zeta.at(k, j);
                if (!z.is_zero()) acc += m * z;
            }
            mu.at(i, j) = -acc;
        }
    }
    return mu;
}

IncidenceMatrix mobius_recurrence(const GradedPoset& p) {
    const IncidenceMatrix zeta = zeta_closure(p);
    const int n = zeta.dim();
    IncidenceMatrix mu(p.sizes());
    for (int x = 0; x < n; ++x) {
        mu.at(x, x) = 1;
        for (int y = x + 1; y < n; ++y) {
            if (zeta.at(x, y).is_zero()) continue; // incomparable
            BigInt acc = 0;
            for (int z = x; z < y; ++z) {
                if (!zeta.at(x, z).is_zero() && !zeta.at(z, y).is_zero()) {
                    acc += mu.at(x, z);
                }
            }
            mu.at(x, y) = -acc;
        }
    }
    return mu;
}

CodingMatrix::CodingMatrix(int n) : n_(n), m_(n, n) {
    if (n < 1) throw DomainError("coding matrix order must be >= 1");
    for (int r = 1; r <= n; ++r) c(r, r) = 1;
}

CodingMatrix coding_matrix(const Sequence& seq, int levels) {
    CodingMatrix cm(levels);
    for (int r = 1; r <= levels; ++r) {
        for (int s = r + 1; s <= levels; ++s) {
            BigInt k = kroton_recurrence(seq, r, s);
            cm.c(r, s) = ((s - r) % 2 == 0) ? k : -k;
        }
    }
    return cm;
}

KrotonValue kroton(const Sequence& seq, int r, int s) {
    if (r < 1 || s <= r) {
        throw DomainError("kroton requires s > r >= 1, got r=" +
                          std::to_string(r) + " s=" + std::to_string(s));
    }
    BigInt closed = 1;
    for (int i = r + 1; i < s; ++i) closed *= seq.term(i) - 1;
    BigInt rec = kroton_recurrence(seq, r, s);
    if (closed != rec) {
        throw std::logic_error("kroton closed form disagrees with recurrence");
    }
    return KrotonValue{r, s, closed};
}

BigInt kroton_recurrence(const Sequence& seq, int r, int s) {
    if (r < 1 || s <= r) {
        throw DomainError("kroton requires s > r >= 1, got r=" +
                          std::to_string(r) + " s=" + std::to_string(s));
    }
    BigInt k = 1; // K_{r+1}(r_F)
    for (int t = r + 1; t < s; ++t) k *= seq.term(t) - 1;
    return k;
}

BigInt kroton_alternating(const Sequence& seq, int r, int s) {
    if (r < 1 || s <= r) {
        throw DomainError("kroton requires s > r >= 1, got r=" +
                          std::to_string(r) + " s=" + std::to_string(s));
    }
    // K[t - r] = K_{r,t}; the base K_{r,r} reads as 1.
    std::vector<BigInt> K(static_cast<size_t>(s - r) + 1);
    K[0] = 1;
    for (int t = r + 1; t <= s; ++t) {
        BigInt acc = 0;
        for (int i = r; i < t; ++i) {
            BigInt weight = (i == r) ? BigInt(1) : seq.term(i);
            BigInt term = weight * K[static_cast<size_t>(i - r)];
            if ((t - i) % 2 != 0) term = -term;
            acc += term;
        }
        K[static_cast<size_t>(t - r)] = -acc;
    }
    return K[static_cast<size_t>(s - r)];
}

ClosedFormResult mobius_closed_form(const GradedPoset& p, ClosedFormMode mode) {
    if (mode == ClosedFormMode::Strict && !p.is_cobweb()) {
        throw DomainError("closed-form mu in strict mode requires a cobweb "
                          "poset; use conjecture mode for general posets");
    }
    const int n = p.levels();
    const CodingMatrix cm = coding_from_sizes(p.sizes());
    IncidenceMatrix candidate = IncidenceMatrix::identity(p.sizes());
    for (int r = 1; r <= n; ++r) {
        for (int s = r + 1; s <= n; ++s) {
            if (cm.c(r, s).is_zero()) continue;
            IntMatrix prod = block_product(p, r, s);
            IntMatrix blk(prod.rows(), prod.cols());
            for (int i = 0; i < prod.rows(); ++i) {
                for (int j = 0; j < prod.cols(); ++j) {
                    // coefficient times the 0/1 reachability pattern
                    if (!prod.at(i, j).is_zero()) blk.at(i, j) = cm.c(r, s);
                }
            }
            candidate.set_block(r, s, blk);
        }
    }
    ClosedFormResult result{candidate, true, std::nullopt, 0, 0};
    const IncidenceMatrix exact = mobius_inverse(zeta_closure(p));
    for (int i = 0; i < exact.dim() && result.agrees_with_inversion; ++i) {
        for (int j = 0; j < exact.dim(); ++j) {
            if (exact.at(i, j) != candidate.at(i, j)) {
                result.agrees_with_inversion = false;
                result.first_mismatch = MatrixCoord{i, j};
                result.exact_value = exact.at(i, j);
                result.candidate_value = candidate.at(i, j);
                break;
            }
        }
    }
    return result;
}

BigInt mobius_grid_formula(const Sequence& seq, NodeRef x, NodeRef y) {
    auto check = [&](NodeRef v) {
        if (v.level < 1 || v.pos < 1 || BigInt(v.pos) > seq.term(v.level)) {
            throw DomainError("grid coordinate (" + std::to_string(v.level) +
                              "," + std::to_string(v.pos) +
                              ") outside the level");
        }
    };
    check(x);
    check(y);
    if (x == y) return 1;
    if (y.level == x.level + 1) return -1;
    if (y.level > x.level + 1) {
        BigInt prod = 1;
        for (int i = x.level + 1; i < y.level; ++i) prod *= seq.term(i) - 1;
        return ((y.level - x.level) % 2 == 0) ? prod : -prod;
    }
    return 0;
}

IncidenceMatrix eta_matrix(const GradedPoset& p) {
    IncidenceMatrix eta = cover_matrix(p);
    for (int i = 0; i < eta.dim(); ++i) eta.at(i, i) = 1;
    return eta;
}

IncidenceMatrix eta_inverse(const GradedPoset& p) {
    IncidenceMatrix inv = IncidenceMatrix::identity(p.sizes());
    for (int r = 1; r <= p.levels(); ++r) {
        for (int s = r + 1; s <= p.levels(); ++s) {
            IntMatrix prod = block_product(p, r, s);
            if ((s - r) % 2 != 0) prod = prod * BigInt(-1);
            inv.set_block(r, s, prod);
        }
    }
    return inv;
}

IncidenceMatrix max_matrix(const GradedPoset& p) {
    IncidenceMatrix m = IncidenceMatrix::identity(p.sizes());
    for (int r = 1; r <= p.levels(); ++r) {
        for (int s = r + 1; s <= p.levels(); ++s) {
            m.set_block(r, s, block_product(p, r, s));
        }
    }
    return m;
}

IncidenceMatrix l_logic(const IncidenceMatrix& m) {
    IncidenceMatrix out(m.sizes());
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            const BigInt& v = m.at(i, j);
            if (v < 0) {
                throw DomainError("logic indicator is defined on nonnegative "
                                  "matrices, found " + v.str() + " at (" +
                                  std::to_string(i) + "," + std::to_string(j) +
                                  ")");
            }
            out.at(i, j) = v.is_zero() ? 0 : 1;
        }
    }
    return out;
}

StructureReport validate_block_structure(const IncidenceMatrix& m) {
    const LevelIndex& idx = m.levels();
    for (int i = 0; i < m.dim(); ++i) {
        const int li = idx.level_of(i);
        for (int j = 0; j < m.dim(); ++j) {
            const int lj = idx.level_of(j);
            if (m.at(i, j).is_zero()) continue;
            if (lj < li) {
                return StructureReport{false, MatrixCoord{i, j},
                                       "nonzero below the block diagonal"};
            }
            if (lj == li && i != j) {
                return StructureReport{false, MatrixCoord{i, j},
                                       "off-diagonal entry inside a diagonal "
                                       "block"};
            }
        }
    }
    return StructureReport{};
}

} // namespace kodag
