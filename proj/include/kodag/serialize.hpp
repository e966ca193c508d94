#pragma once

#include <string>

#include "kodag/chains.hpp"
#include "kodag/incidence.hpp"
#include "kodag/poset.hpp"

namespace kodag {

// Canonical JSON: compact, keys sorted, exact integers as decimal strings.
// Serialization is byte-deterministic for equal inputs.

std::string poset_to_json(const GradedPoset& p);
GradedPoset poset_from_json(const std::string& text); // ConfigError on bad docs

std::string matrix_to_json(const IncidenceMatrix& m);
IncidenceMatrix matrix_from_json(const std::string& text);

std::string matrix_to_csv(const IncidenceMatrix& m);

std::string coding_to_json(const CodingMatrix& cm);

std::string chainset_to_json(const ChainSet& cs);
std::string chain_count_to_json(int k, int n, const BigInt& count);

} // namespace kodag
