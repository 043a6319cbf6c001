#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "linkparity/errors.hpp"

namespace linkparity {

enum class Role : std::uint8_t { Over, Under };

constexpr Role other(Role r) { return r == Role::Over ? Role::Under : Role::Over; }

// Location of one chord endpoint: which core circle and where on it.
struct EndpointRef {
    int component = 0;
    int position = 0;

    friend bool operator==(const EndpointRef&, const EndpointRef&) = default;
};

// One classical crossing. The over endpoint is the visit where the strand
// passes over, the under endpoint where it passes under.
struct Chord {
    int label = 0;  // opaque positive label, unique within a diagram
    int sign = +1;  // +1 or -1
    EndpointRef over;
    EndpointRef under;

    const EndpointRef& end(Role r) const { return r == Role::Over ? over : under; }
    EndpointRef& end(Role r) { return r == Role::Over ? over : under; }
};

// Occupant of one position on a core circle.
struct Slot {
    int chord = -1;  // index into chords()
    Role role = Role::Over;
};

// A Gauss diagram of a virtual link: ordered core circles, each stored as a
// linear sequence of endpoint slots starting at an explicit basepoint, plus
// the chord records. Values are immutable after construction; every
// transform returns a fresh diagram.
class GaussDiagram {
public:
    GaussDiagram() = default;

    // Validates: labels unique, signs +/-1, endpoint references in range and
    // covering every position of every circle exactly once.
    GaussDiagram(int n_components, std::vector<Chord> chords);

    int components() const { return static_cast<int>(circles_.size()); }
    int size(int component) const;  // endpoints on that circle
    int chord_count() const { return static_cast<int>(chords_.size()); }
    int endpoint_count() const;

    const std::vector<Chord>& chords() const { return chords_; }
    const Chord& chord(int index) const;
    int index_of_label(int label) const;  // -1 if absent
    int max_label() const;

    const std::vector<Slot>& circle(int component) const;
    const Slot& slot(int component, int position) const;

    bool is_self(int chord_index) const;
    bool is_degenerate(int component) const { return size(component) % 2 != 0; }

    // Structural hash of the serialized form, used to detect stale move sites.
    std::uint64_t fingerprint() const;

private:
    std::vector<Chord> chords_;
    std::vector<std::vector<Slot>> circles_;
};

// A Gauss diagram with the decorations (signs, over/under) forgotten.
struct SimpleChord {
    int label = 0;
    EndpointRef a;
    EndpointRef b;
};

class SimpleGaussDiagram {
public:
    SimpleGaussDiagram() = default;
    SimpleGaussDiagram(int n_components, std::vector<SimpleChord> chords);

    int components() const { return static_cast<int>(sizes_.size()); }
    int size(int component) const;
    int chord_count() const { return static_cast<int>(chords_.size()); }
    const std::vector<SimpleChord>& chords() const { return chords_; }
    bool is_degenerate(int component) const { return size(component) % 2 != 0; }

private:
    std::vector<SimpleChord> chords_;
    std::vector<int> sizes_;
};

// Diagram-level rewrites that change decorations or traversal order.
struct TransformKind {
    enum class Tag {
        VerticalMirror,    // swap over/under on every chord, negate every sign
        HorizontalMirror,  // reverse every circle, negate every sign
        ReverseComponent,  // reverse the cyclic endpoint order of one circle
        ReverseAll,        // reverse every circle
        CrossingChange,    // swap over/under and negate sign on one chord
    };

    Tag tag = Tag::VerticalMirror;
    int arg = 0;  // component index or chord label, depending on tag

    static TransformKind vertical_mirror() { return {Tag::VerticalMirror, 0}; }
    static TransformKind horizontal_mirror() { return {Tag::HorizontalMirror, 0}; }
    static TransformKind reverse_component(int i) { return {Tag::ReverseComponent, i}; }
    static TransformKind reverse_all() { return {Tag::ReverseAll, 0}; }
    static TransformKind crossing_change(int label) { return {Tag::CrossingChange, label}; }
};

// Gauss-code text format. Components are separated by " / " or newlines,
// tokens are O<label><sign> / U<label><sign>, "_" is a crossing-free
// component, "#" starts a comment.
GaussDiagram parse(std::string_view text);

// Canonical text form: labels renumbered 1..k in first-appearance order.
std::string serialize(const GaussDiagram& d);

GaussDiagram transform(const GaussDiagram& d, const TransformKind& kind);

SimpleGaussDiagram forget(const GaussDiagram& d);

// Cyclic rotation: new position k holds the endpoint previously at
// position (k + offset) mod size.
GaussDiagram rotate_basepoint(const GaussDiagram& d, int component, long long offset);

// Equality up to canonical relabeling.
bool structurally_equal(const GaussDiagram& a, const GaussDiagram& b);

}  // namespace linkparity
