#include "linkparity/report.hpp"

#include <sstream>

namespace linkparity {

namespace {

template <typename T>
nlohmann::ordered_json opt_json(const std::optional<T>& v) {
    if (!v) return nullptr;
    return *v;
}

std::string join_ints(const std::vector<long long>& v) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ", ";
        out << v[i];
    }
    out << "]";
    return out.str();
}

}  // namespace

nlohmann::ordered_json profile_to_json(const WritheProfile& p) {
    nlohmann::ordered_json j;
    j["components"] = p.components;
    j["chords"] = p.chords;
    j["two_colourable"] = p.two_colourable;
    j["j2"] = opt_json(p.j2);
    j["j2_self"] = opt_json(p.j2_self);
    j["naive"] = p.naive;
    j["ip_self"] = opt_json(p.ip_self);
    j["ip_candidates"] = opt_json(p.ip_candidates);
    j["lk"] = p.lk;
    nlohmann::ordered_json flags;
    flags["chequerboard_certified"] = p.chequerboard_certified;
    flags["slice_obstructed"] = opt_json(p.slice_obstructed);
    flags["amphichiral_obstructed"] = opt_json(p.amphichiral_obstructed);
    flags["cb_concordance_obstructed"] = opt_json(p.cb_concordance_obstructed);
    flags["compatible"] = p.compatible;
    j["flags"] = flags;
    return j;
}

std::string profile_to_text(const WritheProfile& p) {
    std::ostringstream out;
    out << "components: " << p.components << "\n";
    out << "chords: " << p.chords << "\n";
    out << "two_colourable: " << (p.two_colourable ? "yes" : "no") << "\n";
    out << "j2: " << (p.j2 ? join_ints(*p.j2) : "n/a") << "\n";
    out << "j2_self: " << (p.j2_self ? std::to_string(*p.j2_self) : "n/a") << "\n";
    out << "naive: " << p.naive << "\n";
    out << "ip_self: " << (p.ip_self ? std::to_string(*p.ip_self) : "n/a") << "\n";
    if (p.ip_candidates)
        out << "ip_candidates: [" << (*p.ip_candidates)[0] << ", " << (*p.ip_candidates)[1] << "]\n";
    else
        out << "ip_candidates: n/a\n";
    out << "lk:";
    for (const auto& row : p.lk) {
        out << " [";
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
        out << "]";
    }
    out << "\n";
    auto flag = [](const std::optional<bool>& b) {
        return b ? (*b ? std::string("yes") : std::string("no")) : std::string("n/a");
    };
    out << "chequerboard_certified: " << (p.chequerboard_certified ? "yes" : "no") << "\n";
    out << "slice_obstructed: " << flag(p.slice_obstructed) << "\n";
    out << "amphichiral_obstructed: " << flag(p.amphichiral_obstructed) << "\n";
    out << "cb_concordance_obstructed: " << flag(p.cb_concordance_obstructed) << "\n";
    out << "compatible: " << (p.compatible ? "yes" : "no") << "\n";
    return out.str();
}

}  // namespace linkparity
