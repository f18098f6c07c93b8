#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vknot/random.hpp"

namespace vknot {

enum class Role : unsigned char { Over, Under };

// One endpoint occurrence in the circle order: chord label, role and sign.
struct Token {
    int label = 0;
    Role role = Role::Over;
    int sign = 1;

    friend bool operator==(const Token&, const Token&) = default;
};

struct Chord {
    int id = 0;
    int over_pos = 0;  // tail P
    int under_pos = 0; // head Q
    int sign = 1;
};

struct IndexRecord {
    int ro = 0, ru = 0, lo = 0, lu = 0, ind = 0;

    friend bool operator==(const IndexRecord&, const IndexRecord&) = default;
};

// Signed chord diagram on an oriented circle with 2n marked positions.
// Chords are directed from the over endpoint to the under endpoint.
class GaussDiagram {
public:
    GaussDiagram() = default;
    // Validates the token list; chord labels are kept as given.
    explicit GaussDiagram(std::vector<Token> seq);

    int size() const noexcept { return static_cast<int>(chords_.size()); }
    int positions() const noexcept { return static_cast<int>(seq_.size()); }
    bool empty() const noexcept { return seq_.empty(); }

    // Sorted by id.
    const std::vector<Chord>& chords() const noexcept { return chords_; }
    const Chord& chord(int id) const;
    bool has_chord(int id) const noexcept;
    int max_id() const noexcept { return chords_.empty() ? 0 : chords_.back().id; }

    const std::vector<Token>& tokens() const noexcept { return seq_; }
    const Token& at(int pos) const;

    // -sign at an over endpoint, +sign at an under endpoint.
    int endpoint_sign(int pos) const;
    IndexRecord indices(int id) const;
    int writhe() const noexcept { return writhe_; }
    int n_writhe(int n) const;

    friend bool operator==(const GaussDiagram& a, const GaussDiagram& b) { return a.seq_ == b.seq_; }

private:
    int slot(int id) const;

    std::vector<Token> seq_;
    std::vector<Chord> chords_;
    std::vector<IndexRecord> index_;
    int writhe_ = 0;
};

// Grammar: (O|U)<positive int>(+|-) repeated, whitespace between tokens
// ignored. Labels are renumbered 1..n in order of first appearance.
GaussDiagram parse_gauss_code(std::string_view text);
std::string format_gauss_code(const GaussDiagram& d);
// Same circle order, labels renumbered by first appearance.
GaussDiagram canonical(const GaussDiagram& d);

enum class Transform { SwitchAll, Mirror, Reverse };

GaussDiagram transform(const GaussDiagram& d, Transform kind);
const char* transform_name(Transform kind);

GaussDiagram random_diagram(int n, Rng& rng);
GaussDiagram random_diagram(int n, std::uint64_t seed);

} // namespace vknot
