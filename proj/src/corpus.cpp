#include "linkparity/corpus.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace linkparity {

CorpusEntry load_corpus_entry(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open " + file.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw SyntaxError(file.string() + ": " + e.what());
    }

    CorpusEntry entry;
    try {
        entry.name = j.at("name").get<std::string>();
        entry.gauss_code = j.at("gauss").get<std::string>();
        if (j.contains("expected")) {
            const auto& e = j.at("expected");
            if (e.contains("j2")) entry.expected_j2 = e.at("j2").get<std::vector<long long>>();
            if (e.contains("j2_self")) entry.expected_j2_self = e.at("j2_self").get<long long>();
            if (e.contains("naive")) entry.expected_naive = e.at("naive").get<long long>();
            if (e.contains("ip_self")) entry.expected_ip_self = e.at("ip_self").get<long long>();
            if (e.contains("lk")) entry.expected_lk = e.at("lk").get<std::vector<std::vector<long long>>>();
            if (e.contains("chequerboard_certified"))
                entry.expected_chequerboard = e.at("chequerboard_certified").get<bool>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw SyntaxError(file.string() + ": " + e.what());
    }
    return entry;
}

std::vector<std::string> check_corpus_entry(const CorpusEntry& entry, const WritheProfile& profile) {
    std::vector<std::string> mismatches;
    auto complain = [&](const std::string& field, const std::string& want, const std::string& got) {
        mismatches.push_back(entry.name + ": " + field + " expected " + want + ", got " + got);
    };
    auto show = [](const std::vector<long long>& v) {
        std::ostringstream out;
        out << "[";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
        out << "]";
        return out.str();
    };

    if (entry.expected_j2) {
        if (!profile.j2)
            complain("j2", show(*entry.expected_j2), "n/a");
        else if (*profile.j2 != *entry.expected_j2)
            complain("j2", show(*entry.expected_j2), show(*profile.j2));
    }
    if (entry.expected_j2_self) {
        if (!profile.j2_self)
            complain("j2_self", std::to_string(*entry.expected_j2_self), "n/a");
        else if (*profile.j2_self != *entry.expected_j2_self)
            complain("j2_self", std::to_string(*entry.expected_j2_self), std::to_string(*profile.j2_self));
    }
    if (entry.expected_naive && profile.naive != *entry.expected_naive)
        complain("naive", std::to_string(*entry.expected_naive), std::to_string(profile.naive));
    if (entry.expected_ip_self) {
        if (!profile.ip_self)
            complain("ip_self", std::to_string(*entry.expected_ip_self), "n/a");
        else if (*profile.ip_self != *entry.expected_ip_self)
            complain("ip_self", std::to_string(*entry.expected_ip_self), std::to_string(*profile.ip_self));
    }
    if (entry.expected_lk && profile.lk != *entry.expected_lk) {
        std::string want;
        for (const auto& row : *entry.expected_lk) want += show(row);
        std::string got;
        for (const auto& row : profile.lk) got += show(row);
        complain("lk", want, got);
    }
    if (entry.expected_chequerboard && profile.chequerboard_certified != *entry.expected_chequerboard)
        complain("chequerboard_certified", *entry.expected_chequerboard ? "true" : "false",
                 profile.chequerboard_certified ? "true" : "false");
    return mismatches;
}

}  // namespace linkparity
