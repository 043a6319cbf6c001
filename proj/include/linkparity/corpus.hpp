#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "linkparity/invariants.hpp"

namespace linkparity {

// One stored link with optional golden values. Goldens are produced by the
// enumeration oracle, never by the fast path.
struct CorpusEntry {
    std::string name;
    std::string gauss_code;

    std::optional<std::vector<long long>> expected_j2;
    std::optional<long long> expected_j2_self;
    std::optional<long long> expected_naive;
    std::optional<long long> expected_ip_self;
    std::optional<std::vector<std::vector<long long>>> expected_lk;
    std::optional<bool> expected_chequerboard;
};

CorpusEntry load_corpus_entry(const std::filesystem::path& file);

// Mismatches between an entry's goldens and a freshly computed profile;
// empty means the entry checks out.
std::vector<std::string> check_corpus_entry(const CorpusEntry& entry, const WritheProfile& profile);

}  // namespace linkparity
