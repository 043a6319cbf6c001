#include "linkparity/diagram.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>

namespace linkparity {

namespace {

std::string describe(const EndpointRef& e) {
    return "component " + std::to_string(e.component) + ", position " + std::to_string(e.position);
}

}  // namespace

GaussDiagram::GaussDiagram(int n_components, std::vector<Chord> chords)
    : chords_(std::move(chords)) {
    if (n_components < 0) throw IndexError("negative component count");
    circles_.assign(static_cast<std::size_t>(n_components), {});

    std::vector<int> sizes(static_cast<std::size_t>(n_components), 0);
    for (const Chord& c : chords_) {
        if (c.sign != 1 && c.sign != -1)
            throw SyntaxError("chord " + std::to_string(c.label) + " has sign " + std::to_string(c.sign));
        for (Role r : {Role::Over, Role::Under}) {
            const EndpointRef& e = c.end(r);
            if (e.component < 0 || e.component >= n_components)
                throw IndexError("chord " + std::to_string(c.label) + " references " + describe(e));
            sizes[static_cast<std::size_t>(e.component)] =
                std::max(sizes[static_cast<std::size_t>(e.component)], e.position + 1);
        }
    }

    for (int i = 0; i < n_components; ++i)
        circles_[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(sizes[static_cast<std::size_t>(i)]), Slot{});

    std::unordered_map<int, int> seen_labels;
    for (std::size_t ci = 0; ci < chords_.size(); ++ci) {
        const Chord& c = chords_[ci];
        if (c.label <= 0) throw LabelError("chord labels must be positive");
        if (!seen_labels.emplace(c.label, static_cast<int>(ci)).second)
            throw LabelError("duplicate chord label " + std::to_string(c.label));
        for (Role r : {Role::Over, Role::Under}) {
            const EndpointRef& e = c.end(r);
            if (e.position < 0) throw IndexError("negative position for chord " + std::to_string(c.label));
            Slot& s = circles_[static_cast<std::size_t>(e.component)][static_cast<std::size_t>(e.position)];
            if (s.chord != -1)
                throw IndexError("two endpoints at " + describe(e));
            s = Slot{static_cast<int>(ci), r};
        }
    }

    for (int i = 0; i < n_components; ++i)
        for (std::size_t p = 0; p < circles_[static_cast<std::size_t>(i)].size(); ++p)
            if (circles_[static_cast<std::size_t>(i)][p].chord == -1)
                throw IndexError("gap at component " + std::to_string(i) + ", position " + std::to_string(p));
}

int GaussDiagram::size(int component) const {
    if (component < 0 || component >= components())
        throw IndexError("component " + std::to_string(component) + " out of range");
    return static_cast<int>(circles_[static_cast<std::size_t>(component)].size());
}

int GaussDiagram::endpoint_count() const { return 2 * chord_count(); }

const Chord& GaussDiagram::chord(int index) const {
    if (index < 0 || index >= chord_count())
        throw IndexError("chord index " + std::to_string(index) + " out of range");
    return chords_[static_cast<std::size_t>(index)];
}

int GaussDiagram::index_of_label(int label) const {
    for (std::size_t i = 0; i < chords_.size(); ++i)
        if (chords_[i].label == label) return static_cast<int>(i);
    return -1;
}

int GaussDiagram::max_label() const {
    int m = 0;
    for (const Chord& c : chords_) m = std::max(m, c.label);
    return m;
}

const std::vector<Slot>& GaussDiagram::circle(int component) const {
    if (component < 0 || component >= components())
        throw IndexError("component " + std::to_string(component) + " out of range");
    return circles_[static_cast<std::size_t>(component)];
}

const Slot& GaussDiagram::slot(int component, int position) const {
    const auto& c = circle(component);
    if (position < 0 || position >= static_cast<int>(c.size()))
        throw IndexError("position " + std::to_string(position) + " out of range");
    return c[static_cast<std::size_t>(position)];
}

bool GaussDiagram::is_self(int chord_index) const {
    const Chord& c = chord(chord_index);
    return c.over.component == c.under.component;
}

std::uint64_t GaussDiagram::fingerprint() const {
    return std::hash<std::string>{}(serialize(*this));
}

SimpleGaussDiagram::SimpleGaussDiagram(int n_components, std::vector<SimpleChord> chords)
    : chords_(std::move(chords)), sizes_(static_cast<std::size_t>(n_components), 0) {
    // Reuse GaussDiagram validation by building a decorated twin.
    std::vector<Chord> decorated;
    decorated.reserve(chords_.size());
    for (const SimpleChord& c : chords_)
        decorated.push_back(Chord{c.label, +1, c.a, c.b});
    GaussDiagram check(n_components, std::move(decorated));
    for (int i = 0; i < n_components; ++i) sizes_[static_cast<std::size_t>(i)] = check.size(i);
}

int SimpleGaussDiagram::size(int component) const {
    if (component < 0 || component >= components())
        throw IndexError("component " + std::to_string(component) + " out of range");
    return sizes_[static_cast<std::size_t>(component)];
}

namespace {

struct PendingChord {
    int sign = 0;
    EndpointRef over{-1, -1};
    EndpointRef under{-1, -1};
    int uses = 0;
    int first_seen = 0;
};

}  // namespace

GaussDiagram parse(std::string_view text) {
    // Split into component segments: " / " and newlines both separate. A "/"
    // requires a component on both sides; blank lines are ignored.
    std::vector<std::vector<std::string>> segments;
    std::vector<std::string> current;
    bool pending_slash = false;

    std::size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (ch == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (ch == '\n') {
            if (!current.empty()) {
                segments.push_back(std::move(current));
                current.clear();
                pending_slash = false;
            }
            ++i;
            continue;
        }
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\r' &&
               text[j] != '\n' && text[j] != '#')
            ++j;
        std::string token(text.substr(i, j - i));
        i = j;
        if (token == "/") {
            if (current.empty()) throw SyntaxError("empty component before '/'");
            segments.push_back(std::move(current));
            current.clear();
            pending_slash = true;
            continue;
        }
        current.push_back(std::move(token));
    }
    if (!current.empty())
        segments.push_back(std::move(current));
    else if (pending_slash)
        throw SyntaxError("empty component after '/'");

    if (segments.empty()) throw SyntaxError("empty input");

    std::map<int, PendingChord> pending;  // ordered so error messages are stable
    std::vector<int> appearance;          // labels in first-appearance order
    int n_components = static_cast<int>(segments.size());

    for (int comp = 0; comp < n_components; ++comp) {
        const auto& tokens = segments[static_cast<std::size_t>(comp)];
        if (tokens.size() == 1 && tokens[0] == "_") continue;
        int pos = 0;
        for (const std::string& tok : tokens) {
            if (tok == "_") throw SyntaxError("'_' must be the only token of its component");
            if (tok.size() < 3 || (tok[0] != 'O' && tok[0] != 'U'))
                throw SyntaxError("malformed token '" + tok + "'");
            char sign_ch = tok.back();
            if (sign_ch != '+' && sign_ch != '-')
                throw SyntaxError("malformed token '" + tok + "'");
            std::string digits = tok.substr(1, tok.size() - 2);
            if (digits.empty() || digits[0] == '0' ||
                !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
                throw SyntaxError("malformed token '" + tok + "'");
            long long label = 0;
            for (char c : digits) {
                label = label * 10 + (c - '0');
                if (label > 1'000'000'000) throw SyntaxError("label too large in '" + tok + "'");
            }

            Role role = tok[0] == 'O' ? Role::Over : Role::Under;
            int sign = sign_ch == '+' ? +1 : -1;
            auto [it, inserted] = pending.try_emplace(static_cast<int>(label));
            PendingChord& pc = it->second;
            if (inserted) {
                pc.sign = sign;
                pc.first_seen = static_cast<int>(appearance.size());
                appearance.push_back(static_cast<int>(label));
            } else if (pc.sign != sign) {
                throw LabelError("label " + std::to_string(label) + " has mismatched signs");
            }
            pc.uses++;
            if (pc.uses > 2) throw LabelError("label " + std::to_string(label) + " used more than twice");
            EndpointRef& slot = role == Role::Over ? pc.over : pc.under;
            if (slot.component != -1)
                throw LabelError("label " + std::to_string(label) + " used twice as " +
                                 (role == Role::Over ? "O" : "U"));
            slot = EndpointRef{comp, pos};
            ++pos;
        }
    }

    std::vector<Chord> chords;
    chords.reserve(appearance.size());
    for (int label : appearance) {
        const PendingChord& pc = pending.at(label);
        if (pc.uses != 2 || pc.over.component == -1 || pc.under.component == -1)
            throw LabelError("label " + std::to_string(label) + " is not used exactly once as O and once as U");
        chords.push_back(Chord{label, pc.sign, pc.over, pc.under});
    }

    return GaussDiagram(n_components, std::move(chords));
}

std::string serialize(const GaussDiagram& d) {
    // Canonical labels: 1..k in first-appearance order.
    std::vector<int> canon(static_cast<std::size_t>(d.chord_count()), 0);
    int next = 1;
    for (int comp = 0; comp < d.components(); ++comp)
        for (const Slot& s : d.circle(comp))
            if (canon[static_cast<std::size_t>(s.chord)] == 0)
                canon[static_cast<std::size_t>(s.chord)] = next++;

    std::ostringstream out;
    for (int comp = 0; comp < d.components(); ++comp) {
        if (comp > 0) out << " / ";
        const auto& circ = d.circle(comp);
        if (circ.empty()) {
            out << "_";
            continue;
        }
        for (std::size_t p = 0; p < circ.size(); ++p) {
            if (p > 0) out << ' ';
            const Slot& s = circ[p];
            out << (s.role == Role::Over ? 'O' : 'U') << canon[static_cast<std::size_t>(s.chord)]
                << (d.chord(s.chord).sign > 0 ? '+' : '-');
        }
    }
    return out.str();
}

GaussDiagram transform(const GaussDiagram& d, const TransformKind& kind) {
    using Tag = TransformKind::Tag;
    std::vector<Chord> chords = d.chords();

    auto reverse_component_positions = [&](int comp) {
        int len = d.size(comp);
        for (Chord& c : chords)
            for (Role r : {Role::Over, Role::Under}) {
                EndpointRef& e = c.end(r);
                if (e.component == comp) e.position = len - 1 - e.position;
            }
    };

    switch (kind.tag) {
        case Tag::VerticalMirror:
            for (Chord& c : chords) {
                std::swap(c.over, c.under);
                c.sign = -c.sign;
            }
            break;
        case Tag::HorizontalMirror:
            for (int comp = 0; comp < d.components(); ++comp) reverse_component_positions(comp);
            for (Chord& c : chords) c.sign = -c.sign;
            break;
        case Tag::ReverseComponent:
            if (kind.arg < 0 || kind.arg >= d.components())
                throw IndexError("component " + std::to_string(kind.arg) + " out of range");
            reverse_component_positions(kind.arg);
            break;
        case Tag::ReverseAll:
            for (int comp = 0; comp < d.components(); ++comp) reverse_component_positions(comp);
            break;
        case Tag::CrossingChange: {
            int idx = d.index_of_label(kind.arg);
            if (idx < 0) throw IndexError("no chord labelled " + std::to_string(kind.arg));
            Chord& c = chords[static_cast<std::size_t>(idx)];
            std::swap(c.over, c.under);
            c.sign = -c.sign;
            break;
        }
    }
    return GaussDiagram(d.components(), std::move(chords));
}

SimpleGaussDiagram forget(const GaussDiagram& d) {
    std::vector<SimpleChord> chords;
    chords.reserve(static_cast<std::size_t>(d.chord_count()));
    for (const Chord& c : d.chords()) chords.push_back(SimpleChord{c.label, c.over, c.under});
    return SimpleGaussDiagram(d.components(), std::move(chords));
}

GaussDiagram rotate_basepoint(const GaussDiagram& d, int component, long long offset) {
    if (component < 0 || component >= d.components())
        throw IndexError("component " + std::to_string(component) + " out of range");
    int len = d.size(component);
    if (len == 0) return d;
    long long shift = ((offset % len) + len) % len;
    std::vector<Chord> chords = d.chords();
    for (Chord& c : chords)
        for (Role r : {Role::Over, Role::Under}) {
            EndpointRef& e = c.end(r);
            if (e.component == component)
                e.position = static_cast<int>(((e.position - shift) % len + len) % len);
        }
    return GaussDiagram(d.components(), std::move(chords));
}

bool structurally_equal(const GaussDiagram& a, const GaussDiagram& b) {
    return serialize(a) == serialize(b);
}

}  // namespace linkparity
