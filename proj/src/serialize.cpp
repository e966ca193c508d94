#include "kodag/serialize.hpp"

#include <json.hpp>

#include "kodag/errors.hpp"

namespace kodag {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ConfigError("malformed JSON document");
    return doc;
}

BigInt bigint_from_json(const json& v, const char* what) {
    if (v.is_number_integer()) return BigInt(v.get<long long>());
    if (v.is_string()) {
        try {
            return BigInt(v.get<std::string>());
        } catch (const std::exception&) {
            throw ConfigError(std::string("invalid ") + what + " '" +
                              v.get<std::string>() + "'");
        }
    }
    throw ConfigError(std::string("expected integer or decimal string for ") +
                      what);
}

std::vector<int> sizes_from_json(const json& doc) {
    if (!doc.contains("sizes") || !doc["sizes"].is_array() ||
        doc["sizes"].empty()) {
        throw ConfigError("document is missing a nonempty \"sizes\" array");
    }
    std::vector<int> sizes;
    for (const json& v : doc["sizes"]) {
        if (!v.is_number_integer() || v.get<long long>() < 1) {
            throw ConfigError("level sizes must be integers >= 1");
        }
        sizes.push_back(v.get<int>());
    }
    return sizes;
}

} // namespace

std::string poset_to_json(const GradedPoset& p) {
    json doc;
    doc["version"] = 1;
    doc["sizes"] = p.sizes();
    json blocks = json::array();
    for (int t = 1; t < p.levels(); ++t) {
        const BitBlock& b = p.block(t);
        json rows = json::array();
        for (int i = 0; i < b.rows(); ++i) {
            json row = json::array();
            for (int j = 0; j < b.cols(); ++j) row.push_back(b.get(i, j) ? 1 : 0);
            rows.push_back(std::move(row));
        }
        blocks.push_back(std::move(rows));
    }
    doc["blocks"] = std::move(blocks);
    return doc.dump() + "\n";
}

GradedPoset poset_from_json(const std::string& text) {
    json doc = parse_json(text);
    if (!doc.is_object()) throw ConfigError("poset document must be an object");
    if (doc.value("version", 0) != 1) {
        throw ConfigError("unsupported poset document version");
    }
    std::vector<int> sizes = sizes_from_json(doc);
    if (!doc.contains("blocks") || !doc["blocks"].is_array()) {
        throw ConfigError("poset document is missing the \"blocks\" array");
    }
    const json& blocks_doc = doc["blocks"];
    if (blocks_doc.size() != sizes.size() - 1) {
        throw ConfigError("expected " + std::to_string(sizes.size() - 1) +
                          " blocks, found " + std::to_string(blocks_doc.size()));
    }
    std::vector<BitBlock> blocks;
    for (size_t t = 0; t + 1 < sizes.size(); ++t) {
        const json& rows = blocks_doc[t];
        const int want_rows = sizes[t], want_cols = sizes[t + 1];
        if (!rows.is_array() || static_cast<int>(rows.size()) != want_rows) {
            throw ConfigError("block " + std::to_string(t + 1) +
                              " has the wrong row count");
        }
        BitBlock b(want_rows, want_cols);
        for (int i = 0; i < want_rows; ++i) {
            const json& row = rows[static_cast<size_t>(i)];
            if (!row.is_array() || static_cast<int>(row.size()) != want_cols) {
                throw ConfigError("block " + std::to_string(t + 1) + " row " +
                                  std::to_string(i + 1) +
                                  " has the wrong width");
            }
            for (int j = 0; j < want_cols; ++j) {
                const json& bit = row[static_cast<size_t>(j)];
                if (!bit.is_number_integer() ||
                    (bit.get<int>() != 0 && bit.get<int>() != 1)) {
                    throw ConfigError("block entries must be 0 or 1");
                }
                b.set(i, j, bit.get<int>() == 1);
            }
        }
        blocks.push_back(std::move(b));
    }
    try {
        return GradedPoset(std::move(sizes), std::move(blocks));
    } catch (const DomainError& e) {
        throw ConfigError(std::string("invalid poset document: ") + e.what());
    }
}

std::string matrix_to_json(const IncidenceMatrix& m) {
    json doc;
    doc["sizes"] = m.sizes();
    json entries = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str());
        entries.push_back(std::move(row));
    }
    doc["entries"] = std::move(entries);
    return doc.dump() + "\n";
}

IncidenceMatrix matrix_from_json(const std::string& text) {
    json doc = parse_json(text);
    if (!doc.is_object()) throw ConfigError("matrix document must be an object");
    std::vector<int> sizes = sizes_from_json(doc);
    LevelIndex idx(sizes);
    if (!doc.contains("entries") || !doc["entries"].is_array() ||
        static_cast<int>(doc["entries"].size()) != idx.total()) {
        throw ConfigError("matrix document needs an \"entries\" array of " +
                          std::to_string(idx.total()) + " rows");
    }
    IntMatrix entries(idx.total(), idx.total());
    for (int i = 0; i < idx.total(); ++i) {
        const json& row = doc["entries"][static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != idx.total()) {
            throw ConfigError("matrix row " + std::to_string(i + 1) +
                              " has the wrong width");
        }
        for (int j = 0; j < idx.total(); ++j) {
            entries.at(i, j) =
                bigint_from_json(row[static_cast<size_t>(j)], "matrix entry");
        }
    }
    return IncidenceMatrix(std::move(sizes), std::move(entries));
}

std::string matrix_to_csv(const IncidenceMatrix& m) {
    std::string out;
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            if (j) out += ',';
            out += m.at(i, j).str();
        }
        out += '\n';
    }
    return out;
}

std::string coding_to_json(const CodingMatrix& cm) {
    json doc;
    doc["n"] = cm.order();
    json rows = json::array();
    for (int r = 1; r <= cm.order(); ++r) {
        json row = json::array();
        for (int s = 1; s <= cm.order(); ++s) row.push_back(cm.c(r, s).str());
        rows.push_back(std::move(row));
    }
    doc["c"] = std::move(rows);
    return doc.dump() + "\n";
}

std::string chainset_to_json(const ChainSet& cs) {
    json doc;
    doc["k"] = cs.from_level;
    doc["n"] = cs.to_level;
    json chains = json::array();
    for (const Chain& chain : cs.chains) {
        json nodes = json::array();
        for (const NodeRef& node : chain.nodes) {
            nodes.push_back(json::array({node.level, node.pos}));
        }
        chains.push_back(std::move(nodes));
    }
    doc["chains"] = std::move(chains);
    return doc.dump() + "\n";
}

std::string chain_count_to_json(int k, int n, const BigInt& count) {
    json doc;
    doc["k"] = k;
    doc["n"] = n;
    doc["count"] = count.str();
    return doc.dump() + "\n";
}

} // namespace kodag
