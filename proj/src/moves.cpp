#include "vknot/moves.hpp"

#include <algorithm>

#include "vknot/config_oracle.hpp"
#include "vknot/errors.hpp"

namespace vknot {

namespace {

void check_anchor(const GaussDiagram& d, int pos)
{
    if (pos < 0 || pos > d.positions())
        throw OutOfRange("anchor " + std::to_string(pos) + " out of range 0.." + std::to_string(d.positions()));
}

// Inserts groups of tokens before the given anchors (stable for equal anchors).
GaussDiagram splice(const GaussDiagram& d, std::vector<std::pair<int, std::vector<Token>>> groups)
{
    std::stable_sort(groups.begin(), groups.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Token> seq;
    std::size_t g = 0;
    const auto& src = d.tokens();
    for (int p = 0; p <= d.positions(); ++p) {
        while (g < groups.size() && groups[g].first == p) {
            seq.insert(seq.end(), groups[g].second.begin(), groups[g].second.end());
            ++g;
        }
        if (p < d.positions())
            seq.push_back(src[p]);
    }
    return GaussDiagram(std::move(seq));
}

bool r2_conditions(const GaussDiagram& d, int c1, int c2)
{
    const IndexRecord r1 = d.indices(c1), r2 = d.indices(c2);
    if (r1.ind != r2.ind || r2.lo != r1.lo - 1)
        return false;
    for (const Chord& c : d.chords()) {
        if (c.id == c1 || c.id == c2)
            continue;
        if (classify_pair(d, c.id, c1) != classify_pair(d, c.id, c2))
            return false;
    }
    return true;
}

} // namespace

GaussDiagram insert_r1(const GaussDiagram& d, int pos, R1Variant variant)
{
    check_anchor(d, pos);
    const int id = d.max_id() + 1;
    Token o{id, Role::Over, 1}, u{id, Role::Under, 1};
    std::vector<Token> kink = variant == R1Variant::Ia ? std::vector<Token>{o, u} : std::vector<Token>{u, o};
    return splice(d, {{pos, kink}});
}

GaussDiagram insert_r2(const GaussDiagram& d, int pos_a, int pos_b)
{
    check_anchor(d, pos_a);
    check_anchor(d, pos_b);
    const int c1 = d.max_id() + 1, c2 = d.max_id() + 2;
    const Token o1{c1, Role::Over, 1}, o2{c2, Role::Over, -1};
    const Token u1{c1, Role::Under, 1}, u2{c2, Role::Under, -1};

    // Nested first (c2 inside c1), then interleaved.
    const std::vector<std::pair<std::vector<Token>, std::vector<Token>>> layouts = {
        {{o1, o2}, {u2, u1}},
        {{o1, o2}, {u1, u2}},
    };
    for (const auto& [at_a, at_b] : layouts) {
        GaussDiagram out = splice(d, {{pos_a, at_a}, {pos_b, at_b}});
        if (r2_conditions(out, c1, c2))
            return out;
    }
    throw PatternViolation("no bigon layout satisfies the index conditions");
}

namespace {

struct R3Ends {
    int o1, u1, o2, u2, o3, u3;
};

R3Ends r3_ends(const GaussDiagram& d, const std::array<int, 3>& ids)
{
    const Chord &a = d.chord(ids[0]), &b = d.chord(ids[1]), &c = d.chord(ids[2]);
    return {a.over_pos, a.under_pos, b.over_pos, b.under_pos, c.over_pos, c.under_pos};
}

} // namespace

GaussDiagram apply_r3(const GaussDiagram& d, const std::array<int, 3>& chords)
{
    if (chords[0] == chords[1] || chords[0] == chords[2] || chords[1] == chords[2])
        throw PatternNotFound("third move needs three distinct chords");
    for (int id : chords)
        if (!d.has_chord(id))
            throw PatternNotFound("unknown chord " + std::to_string(id));
    if (d.chord(chords[0]).sign != 1 || d.chord(chords[1]).sign != 1 || d.chord(chords[2]).sign != -1)
        throw PatternNotFound("third move needs signs (+, +, -)");

    const int m = d.positions();
    auto follows = [m](int a, int b) { return (a + 1) % m == b; };
    const R3Ends e = r3_ends(d, chords);
    const std::array<std::pair<int, int>, 3> pairs = {{{e.o3, e.o1}, {e.u1, e.o2}, {e.u2, e.u3}}};

    bool before = true, after = true;
    for (const auto& [x, y] : pairs) {
        before = before && follows(x, y);
        after = after && follows(y, x);
    }
    if (!before && !after)
        throw PatternNotFound("chords do not form a third-move triangle");

    std::vector<Token> seq = d.tokens();
    for (const auto& [x, y] : pairs)
        std::swap(seq[x], seq[y]);
    return GaussDiagram(std::move(seq));
}

GaussDiagram insert_r3_pattern(const GaussDiagram& d, const std::array<int, 3>& slots, R3Layout layout)
{
    for (int s : slots)
        check_anchor(d, s);
    if (!std::is_sorted(slots.begin(), slots.end()))
        throw OutOfRange("slots must be nondecreasing");
    const int c1 = d.max_id() + 1, c2 = d.max_id() + 2, c3 = d.max_id() + 3;
    const std::vector<Token> top = {{c3, Role::Over, -1}, {c1, Role::Over, 1}};
    const std::vector<Token> mid = {{c1, Role::Under, 1}, {c2, Role::Over, 1}};
    const std::vector<Token> bot = {{c2, Role::Under, 1}, {c3, Role::Under, -1}};
    if (layout == R3Layout::TMB)
        return splice(d, {{slots[0], top}, {slots[1], mid}, {slots[2], bot}});
    return splice(d, {{slots[0], top}, {slots[1], bot}, {slots[2], mid}});
}

ForbiddenResult apply_forbidden(const GaussDiagram& d, int pos)
{
    const int m = d.positions();
    if (pos < 0 || pos >= m)
        throw OutOfRange("position " + std::to_string(pos) + " out of range");
    const int next = (pos + 1) % m;
    const Token &a = d.at(pos), &b = d.at(next);
    if (a.label == b.label)
        throw MixedEndpoints("adjacent endpoints belong to one chord");
    if (a.role != b.role)
        throw MixedEndpoints("a head next to a tail is not a single forbidden move");
    std::vector<Token> seq = d.tokens();
    std::swap(seq[pos], seq[next]);
    return {GaussDiagram(std::move(seq)), a.role == Role::Over ? ForbiddenKind::FO : ForbiddenKind::FU,
            a.label, b.label};
}

const char* forbidden_kind_name(ForbiddenKind k)
{
    return k == ForbiddenKind::FO ? "FO" : "FU";
}

} // namespace vknot
