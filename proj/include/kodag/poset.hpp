#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kodag/matrix.hpp"
#include "kodag/sequence.hpp"

namespace kodag {

/// Grid coordinates of a poset node: 1-based level and 1-based position
/// within the level.
struct NodeRef {
    int level = 0;
    int pos = 0;
    bool operator==(const NodeRef&) const = default;
    auto operator<=>(const NodeRef&) const = default;
};

/// 0/1 biadjacency block between two adjacent levels.
class BitBlock {
public:
    BitBlock() = default;
    BitBlock(int rows, int cols);
    static BitBlock ones(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int i, int j) const {
        return bits_[static_cast<size_t>(i) * cols_ + j] != 0;
    }
    void set(int i, int j, bool v) {
        bits_[static_cast<size_t>(i) * cols_ + j] = v ? 1 : 0;
    }
    bool all_ones() const;

    bool operator==(const BitBlock&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::uint8_t> bits_;
};

/// F-denominated graded poset: an ordered list of level sizes plus one 0/1
/// biadjacency block per adjacent level pair. A cobweb poset is the special
/// case where every block is all ones (a chain of di-bicliques).
class GradedPoset {
public:
    GradedPoset(std::vector<int> sizes, std::vector<BitBlock> blocks);

    /// Complete-bipartite layer chain over term(1..n) of the sequence.
    static GradedPoset cobweb(const Sequence& seq, int levels);

    int levels() const { return index_.levels(); }
    int size(int level) const { return index_.size(level); }
    const std::vector<int>& sizes() const { return index_.sizes(); }
    int node_count() const { return index_.total(); }
    const LevelIndex& index() const { return index_; }

    /// Block t joins level t to level t+1; t in [1, levels-1].
    const BitBlock& block(int t) const;
    const std::vector<BitBlock>& blocks() const { return blocks_; }

    bool is_cobweb() const;

    /// 1-based linear label of a node: nodes are numbered level by level,
    /// left to right.
    int linear_label(NodeRef node) const;
    NodeRef grid_of(int label) const;
    void check_node(NodeRef node) const; // DomainError when invalid

    /// True iff b is one level above a and the biadjacency bit is set.
    bool covers(NodeRef a, NodeRef b) const;

    /// Nodes with no outgoing arcs below the top level, or no incoming arcs
    /// above the bottom level. A poset identifies with an n-ary relation iff
    /// this list is empty.
    std::vector<NodeRef> mute_nodes() const;

    bool operator==(const GradedPoset&) const = default;

private:
    LevelIndex index_;
    std::vector<BitBlock> blocks_;
};

/// Glues two level chains along a shared level: the last level of p and the
/// first level of q are identified, sizes and blocks concatenate. Throws
/// DomainError naming both sizes when the join condition fails.
GradedPoset natural_join(const GradedPoset& p, const GradedPoset& q);

/// Exact edge probability for random posets, kept as a fraction so runs are
/// reproducible bit for bit.
struct Density {
    long long num = 1;
    long long den = 1;
    /// Accepts "1", "0.4", ".5" or "2/5"; must land in (0, 1].
    static Density parse(std::string_view text);
    std::string str() const;
};

/// Deterministic random poset: each block bit is set independently with the
/// given density. When allow_mute is false, every all-zero row or column is
/// repaired by setting its first position.
GradedPoset random_poset(const Sequence& seq, int levels, Density density,
                         std::uint64_t seed, bool allow_mute);

/// Cover relation matrix kappa: strictly upper block-triangular with exactly
/// the superdiagonal block band populated.
IncidenceMatrix cover_matrix(const GradedPoset& p);

/// Hasse digraph adjacency matrix; identical to cover_matrix for this
/// representation, provided as a named alias.
IncidenceMatrix adjacency(const GradedPoset& p);

/// Ordinary integer product B_r * B_{r+1} * ... * B_{s-1}; entry (i, j)
/// counts saturated chains from node (r, i+1) to node (s, j+1).
/// Requires 1 <= r < s <= levels.
IntMatrix block_product(const GradedPoset& p, int r, int s);

} // namespace kodag
