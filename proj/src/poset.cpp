#include "kodag/poset.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>

#include "kodag/errors.hpp"

namespace kodag {

namespace {

// Materialized posets hold dense N x N matrices downstream; keep N sane.
constexpr int kMaxNodes = 4096;

} // namespace

BitBlock::BitBlock(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw DomainError("block dimensions must be >= 1");
    bits_.assign(static_cast<size_t>(rows) * cols, 0);
}

BitBlock BitBlock::ones(int rows, int cols) {
    BitBlock b(rows, cols);
    std::fill(b.bits_.begin(), b.bits_.end(), std::uint8_t{1});
    return b;
}

bool BitBlock::all_ones() const {
    return std::all_of(bits_.begin(), bits_.end(),
                       [](std::uint8_t v) { return v != 0; });
}

GradedPoset::GradedPoset(std::vector<int> sizes, std::vector<BitBlock> blocks)
    : index_(std::move(sizes)), blocks_(std::move(blocks)) {
    const int n = index_.levels();
    if (static_cast<int>(blocks_.size()) != n - 1) {
        throw DomainError("expected " + std::to_string(n - 1) +
                          " biadjacency blocks, got " +
                          std::to_string(blocks_.size()));
    }
    for (int t = 1; t < n; ++t) {
        const BitBlock& b = blocks_[static_cast<size_t>(t) - 1];
        if (b.rows() != index_.size(t) || b.cols() != index_.size(t + 1)) {
            throw DomainError("block " + std::to_string(t) +
                              " shape does not match adjacent level sizes");
        }
    }
    if (index_.total() > kMaxNodes) {
        throw DomainError("poset has " + std::to_string(index_.total()) +
                          " nodes, above the supported maximum of " +
                          std::to_string(kMaxNodes));
    }
}

GradedPoset GradedPoset::cobweb(const Sequence& seq, int levels) {
    if (levels < 1) throw DomainError("cobweb needs at least one level");
    std::vector<int> sizes;
    sizes.reserve(static_cast<size_t>(levels));
    for (int k = 1; k <= levels; ++k) {
        BigInt t = seq.term(k);
        if (t > kMaxNodes) {
            throw DomainError("level " + std::to_string(k) + " size " +
                              t.str() + " is above the supported maximum of " +
                              std::to_string(kMaxNodes));
        }
        sizes.push_back(static_cast<int>(t));
    }
    std::vector<BitBlock> blocks;
    blocks.reserve(static_cast<size_t>(levels) - 1);
    for (int t = 1; t < levels; ++t) {
        blocks.push_back(BitBlock::ones(sizes[static_cast<size_t>(t) - 1],
                                        sizes[static_cast<size_t>(t)]));
    }
    return GradedPoset(std::move(sizes), std::move(blocks));
}

const BitBlock& GradedPoset::block(int t) const {
    if (t < 1 || t >= levels()) {
        throw DomainError("block index " + std::to_string(t) +
                          " out of range [1," + std::to_string(levels() - 1) +
                          "]");
    }
    return blocks_[static_cast<size_t>(t) - 1];
}

bool GradedPoset::is_cobweb() const {
    return std::all_of(blocks_.begin(), blocks_.end(),
                       [](const BitBlock& b) { return b.all_ones(); });
}

void GradedPoset::check_node(NodeRef node) const {
    if (node.level < 1 || node.level > levels() || node.pos < 1 ||
        node.pos > size(node.level)) {
        throw DomainError("node (" + std::to_string(node.level) + "," +
                          std::to_string(node.pos) + ") out of range");
    }
}

int GradedPoset::linear_label(NodeRef node) const {
    check_node(node);
    return index_.offset(node.level) + node.pos;
}

NodeRef GradedPoset::grid_of(int label) const {
    if (label < 1 || label > node_count()) {
        throw DomainError("linear label " + std::to_string(label) +
                          " out of range [1," + std::to_string(node_count()) +
                          "]");
    }
    const int level = index_.level_of(label - 1);
    return NodeRef{level, label - index_.offset(level)};
}

bool GradedPoset::covers(NodeRef a, NodeRef b) const {
    check_node(a);
    check_node(b);
    if (b.level != a.level + 1) return false;
    return block(a.level).get(a.pos - 1, b.pos - 1);
}

std::vector<NodeRef> GradedPoset::mute_nodes() const {
    std::vector<NodeRef> out;
    for (int t = 1; t < levels(); ++t) {
        const BitBlock& b = block(t);
        for (int i = 0; i < b.rows(); ++i) {
            bool any = false;
            for (int j = 0; j < b.cols() && !any; ++j) any = b.get(i, j);
            if (!any) out.push_back(NodeRef{t, i + 1}); // no outgoing arcs
        }
        for (int j = 0; j < b.cols(); ++j) {
            bool any = false;
            for (int i = 0; i < b.rows() && !any; ++i) any = b.get(i, j);
            if (!any) out.push_back(NodeRef{t + 1, j + 1}); // no incoming arcs
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

GradedPoset natural_join(const GradedPoset& p, const GradedPoset& q) {
    const int shared_p = p.size(p.levels());
    const int shared_q = q.size(1);
    if (shared_p != shared_q) {
        throw DomainError(
            "natural join condition violated: last level of size " +
            std::to_string(shared_p) + " vs first level of size " +
            std::to_string(shared_q));
    }
    std::vector<int> sizes = p.sizes();
    sizes.insert(sizes.end(), q.sizes().begin() + 1, q.sizes().end());
    std::vector<BitBlock> blocks = p.blocks();
    blocks.insert(blocks.end(), q.blocks().begin(), q.blocks().end());
    return GradedPoset(std::move(sizes), std::move(blocks));
}

Density Density::parse(std::string_view text) {
    auto fail = [&] {
        throw ConfigError("invalid density '" + std::string(text) +
                          "' (expected a value in (0,1])");
    };
    if (text.empty() || text.find('-') != std::string_view::npos) fail();
    long long num = 0, den = 1;
    size_t slash = text.find('/');
    size_t dot = text.find('.');
    auto to_ll = [&](std::string_view tok) {
        long long v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) fail();
        return v;
    };
    if (slash != std::string_view::npos) {
        num = to_ll(text.substr(0, slash));
        den = to_ll(text.substr(slash + 1));
    } else if (dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 9) fail();
        long long w = whole.empty() ? 0 : to_ll(whole);
        long long f = to_ll(frac);
        den = 1;
        for (size_t i = 0; i < frac.size(); ++i) den *= 10;
        num = w * den + f;
    } else {
        num = to_ll(text);
    }
    if (den <= 0 || num <= 0 || num > den) fail();
    long long g = std::gcd(num, den);
    return Density{num / g, den / g};
}

std::string Density::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

GradedPoset random_poset(const Sequence& seq, int levels, Density density,
                         std::uint64_t seed, bool allow_mute) {
    if (density.num <= 0) throw DomainError("density must be positive");
    GradedPoset shape = GradedPoset::cobweb(seq, levels);
    std::mt19937_64 rng(seed);
    std::vector<BitBlock> blocks;
    blocks.reserve(static_cast<size_t>(levels) - 1);
    for (int t = 1; t < levels; ++t) {
        BitBlock b(shape.size(t), shape.size(t + 1));
        for (int i = 0; i < b.rows(); ++i) {
            for (int j = 0; j < b.cols(); ++j) {
                bool bit = static_cast<long long>(
                               rng() % static_cast<std::uint64_t>(density.den)) <
                           density.num;
                b.set(i, j, bit);
            }
        }
        if (!allow_mute) {
            for (int i = 0; i < b.rows(); ++i) {
                bool any = false;
                for (int j = 0; j < b.cols() && !any; ++j) any = b.get(i, j);
                if (!any) b.set(i, 0, true);
            }
            for (int j = 0; j < b.cols(); ++j) {
                bool any = false;
                for (int i = 0; i < b.rows() && !any; ++i) any = b.get(i, j);
                if (!any) b.set(0, j, true);
            }
        }
        blocks.push_back(std::move(b));
    }
    return GradedPoset(shape.sizes(), std::move(blocks));
}

IncidenceMatrix cover_matrix(const GradedPoset& p) {
    IncidenceMatrix kappa(p.sizes());
    for (int t = 1; t < p.levels(); ++t) {
        const BitBlock& b = p.block(t);
        const int roff = p.index().offset(t);
        const int coff = p.index().offset(t + 1);
        for (int i = 0; i < b.rows(); ++i) {
            for (int j = 0; j < b.cols(); ++j) {
                if (b.get(i, j)) kappa.at(roff + i, coff + j) = 1;
            }
        }
    }
    return kappa;
}

IncidenceMatrix adjacency(const GradedPoset& p) { return cover_matrix(p); }

IntMatrix block_product(const GradedPoset& p, int r, int s) {
    if (r < 1 || s > p.levels() || r >= s) {
        throw DomainError("block product requires 1 <= r < s <= levels, got r=" +
                          std::to_string(r) + " s=" + std::to_string(s));
    }
    auto as_matrix = [](const BitBlock& b) {
        IntMatrix m(b.rows(), b.cols());
        for (int i = 0; i < b.rows(); ++i) {
            for (int j = 0; j < b.cols(); ++j) {
                if (b.get(i, j)) m.at(i, j) = 1;
            }
        }
        return m;
    };
    IntMatrix prod = as_matrix(p.block(r));
    for (int t = r + 1; t < s; ++t) prod = prod * as_matrix(p.block(t));
    return prod;
}

} // namespace kodag
