#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kodag/poset.hpp"
#include "kodag/sequence.hpp"

namespace kodag {

inline constexpr std::int64_t kDefaultChainCap = 1'000'000;

/// A saturated chain: nodes on strictly consecutive levels, every adjacent
/// pair a cover.
struct Chain {
    std::vector<NodeRef> nodes;
    bool operator==(const Chain&) const = default;
};

/// All maximal chains of the layer spanned by levels [k, n], in
/// deterministic lexicographic order of positions.
struct ChainSet {
    int from_level = 0;
    int to_level = 0;
    std::vector<Chain> chains;
};

/// Exact chain count of the layer [k, n] via block products.
BigInt layer_chain_count(const GradedPoset& p, int k, int n);

/// Enumerates the layer's chains. Throws CapError telling the projected
/// count when it would exceed the cap.
ChainSet enumerate_layer_chains(const GradedPoset& p, int k, int n,
                                std::int64_t cap = kDefaultChainCap);

/// Layer count with the method recorded: a counting walk when the projected
/// total fits under the cap (cross-checked against block products),
/// otherwise the block-product count alone.
struct ChainCount {
    BigInt value;
    std::string method; // "enumeration" or "block-product"
    bool cross_checked = false;
};
ChainCount count_layer_chains(const GradedPoset& p, int k, int n,
                              std::int64_t cap = kDefaultChainCap);

/// Brute-force count of maximal chains of the interval [x, y];
/// 1 when x = y, 0 for incomparable pairs.
BigInt count_interval_chains(const GradedPoset& p, NodeRef x, NodeRef y);

/// Point of the discrete hyper-box V_{k,n}: one coordinate per level,
/// 1 <= coords[i] <= (k+i)_F.
struct HyperBoxPoint {
    int start_level = 0;
    std::vector<int> coords;
    bool operator==(const HyperBoxPoint&) const = default;
};

/// Extracts within-level positions; exact inverse of hyperbox_decode.
HyperBoxPoint hyperbox_encode(const Chain& chain);

/// Rebuilds the cobweb chain from box coordinates; DomainError when a
/// coordinate falls outside its level.
Chain hyperbox_decode(const Sequence& seq, const HyperBoxPoint& point);

/// Both layer-splice identities on the cobweb of the sequence:
///   C(r,k) * C(k,s) = k_F * C(r,s)          for r <= k <= s
///   C(r,k) * C(k+1,s) = C(r,s)              for r <= k < s
struct MarkovReport {
    int r = 0, k = 0, s = 0;
    BigInt c_rk, c_ks, c_k1s, c_rs, k_size;
    bool splice_identity = false;
    bool shift_identity = false;
    bool shift_checked = false; // false when k = s
    bool counts_cross_checked = false;
    std::string method;
    bool holds() const {
        return splice_identity && (!shift_checked || shift_identity);
    }
};
MarkovReport check_markov(const Sequence& seq, int r, int k, int s,
                          std::int64_t cap = kDefaultChainCap);

/// |C_max of layer [k+1, n]| = fnomial(n, k) * m_F! with m = n - k, plus the
/// base identity m_F! = |C_max of the m-level cobweb|.
struct Theorem1Report {
    int n = 0, k = 0;
    BigInt layer_count, fnomial_value, m_factorial, base_chain_count;
    bool fnomial_integral = false;
    bool product_identity = false;
    bool factorial_identity = false;
    std::string method;
    bool holds() const {
        return fnomial_integral && product_identity && factorial_identity;
    }
};
Theorem1Report theorem1_check(const Sequence& seq, int n, int k,
                              std::int64_t cap = kDefaultChainCap);

/// Row sum of [Max] from a fixed level-k node across level n equals the
/// falling product n_F^(n-k) and the layer count |C_max[k+1, n]|.
struct Theorem3Report {
    int k = 0, n = 0;
    BigInt row_sum, falling_value, layer_count;
    bool holds = false;
    std::string method;
};
Theorem3Report theorem3_check(const Sequence& seq, int k, int n,
                              std::int64_t cap = kDefaultChainCap);

enum class MaxIdentityMode { Derived, Literal };

/// Derived mode: fnomial(n, n-k) = (sum over level n of [Max] from a level-k
/// node) / (n-k)_F!, exact division required. Literal mode evaluates the
/// printed index form fnomial(l, k) = [Max]_(k-2, l+1) / (l-k)_F! as stated
/// and reports whether it holds, without asserting.
struct FnomialMaxReport {
    int n = 0, k = 0;
    MaxIdentityMode mode = MaxIdentityMode::Derived;
    bool evaluable = true;
    std::string note;
    BigInt chain_sum;  // numerator before division
    BigInt divisor;    // the factorial divisor
    bool divides = false;
    BigInt quotient;   // chain_sum / divisor when it divides
    FNomial expected;  // the F-nomial the quotient is compared against
    bool holds = false;
};
FnomialMaxReport fnomial_via_max(const Sequence& seq, int n, int k,
                                 MaxIdentityMode mode);

} // namespace kodag
