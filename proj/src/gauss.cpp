#include "vknot/gauss.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "vknot/errors.hpp"

namespace vknot {

namespace {

std::string describe(int label)
{
    return "label " + std::to_string(label);
}

} // namespace

GaussDiagram::GaussDiagram(std::vector<Token> seq) : seq_(std::move(seq))
{
    struct Seen {
        int count = 0;
        int over = -1, under = -1;
        int sign = 0;
    };
    std::map<int, Seen> seen;
    for (int p = 0; p < positions(); ++p) {
        const Token& t = seq_[p];
        if (t.label <= 0)
            throw ParseError(ParseError::Kind::MalformedToken, "non-positive " + describe(t.label));
        if (t.sign != 1 && t.sign != -1)
            throw ParseError(ParseError::Kind::MalformedToken, "bad sign for " + describe(t.label));
        Seen& s = seen[t.label];
        ++s.count;
        if (s.count > 2)
            continue;
        if (s.count == 2 && s.sign != t.sign)
            throw ParseError(ParseError::Kind::SignMismatch, describe(t.label) + " carries two signs");
        s.sign = t.sign;
        int& slot = t.role == Role::Over ? s.over : s.under;
        if (slot >= 0)
            throw ParseError(ParseError::Kind::RoleError,
                             describe(t.label) + (t.role == Role::Over ? " has two O endpoints" : " has two U endpoints"));
        slot = p;
    }
    for (const auto& [label, s] : seen) {
        if (s.count != 2)
            throw ParseError(ParseError::Kind::CrossingCountError,
                             describe(label) + " appears " + std::to_string(s.count) + " times");
        chords_.push_back(Chord{label, s.over, s.under, s.sign});
        writhe_ += s.sign;
    }

    index_.reserve(chords_.size());
    const int m = positions();
    for (const Chord& c : chords_) {
        IndexRecord r;
        for (int p = (c.over_pos + 1) % m; p != c.under_pos; p = (p + 1) % m)
            (seq_[p].role == Role::Over ? r.ro : r.ru) += endpoint_sign(p);
        for (int p = (c.under_pos + 1) % m; p != c.over_pos; p = (p + 1) % m)
            (seq_[p].role == Role::Over ? r.lo : r.lu) += endpoint_sign(p);
        r.ind = r.ro + r.ru;
        index_.push_back(r);
    }
}

int GaussDiagram::slot(int id) const
{
    auto it = std::lower_bound(chords_.begin(), chords_.end(), id,
                               [](const Chord& c, int v) { return c.id < v; });
    if (it == chords_.end() || it->id != id)
        throw OutOfRange("unknown chord id " + std::to_string(id));
    return static_cast<int>(it - chords_.begin());
}

const Chord& GaussDiagram::chord(int id) const
{
    return chords_[slot(id)];
}

bool GaussDiagram::has_chord(int id) const noexcept
{
    auto it = std::lower_bound(chords_.begin(), chords_.end(), id,
                               [](const Chord& c, int v) { return c.id < v; });
    return it != chords_.end() && it->id == id;
}

const Token& GaussDiagram::at(int pos) const
{
    if (pos < 0 || pos >= positions())
        throw OutOfRange("position " + std::to_string(pos) + " out of range");
    return seq_[pos];
}

int GaussDiagram::endpoint_sign(int pos) const
{
    const Token& t = at(pos);
    return t.role == Role::Over ? -t.sign : t.sign;
}

IndexRecord GaussDiagram::indices(int id) const
{
    return index_[slot(id)];
}

int GaussDiagram::n_writhe(int n) const
{
    int w = 0;
    for (std::size_t i = 0; i < chords_.size(); ++i)
        if (index_[i].ind == n)
            w += chords_[i].sign;
    return w;
}

GaussDiagram parse_gauss_code(std::string_view text)
{
    std::vector<Token> seq;
    std::size_t i = 0;
    auto malformed = [&](const std::string& why) {
        throw ParseError(ParseError::Kind::MalformedToken,
                         "malformed Gauss code at offset " + std::to_string(i) + ": " + why);
    };
    while (true) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        if (i == text.size())
            break;
        Token t;
        if (text[i] == 'O')
            t.role = Role::Over;
        else if (text[i] == 'U')
            t.role = Role::Under;
        else
            malformed("expected 'O' or 'U'");
        ++i;
        std::size_t start = i;
        long long label = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            label = label * 10 + (text[i] - '0');
            if (label > 1'000'000)
                malformed("label too large");
            ++i;
        }
        if (start == i || label == 0)
            malformed("expected a positive label");
        t.label = static_cast<int>(label);
        if (i == text.size() || (text[i] != '+' && text[i] != '-'))
            malformed("expected '+' or '-'");
        t.sign = text[i] == '+' ? 1 : -1;
        ++i;
        seq.push_back(t);
    }
    return canonical(GaussDiagram(std::move(seq)));
}

GaussDiagram canonical(const GaussDiagram& d)
{
    std::map<int, int> relabel;
    std::vector<Token> seq = d.tokens();
    for (Token& t : seq) {
        auto [it, fresh] = relabel.try_emplace(t.label, static_cast<int>(relabel.size()) + 1);
        t.label = it->second;
    }
    return GaussDiagram(std::move(seq));
}

std::string format_gauss_code(const GaussDiagram& d)
{
    std::string out;
    const GaussDiagram c = canonical(d);
    for (const Token& t : c.tokens()) {
        out += t.role == Role::Over ? 'O' : 'U';
        out += std::to_string(t.label);
        out += t.sign > 0 ? '+' : '-';
    }
    return out;
}

GaussDiagram transform(const GaussDiagram& d, Transform kind)
{
    std::vector<Token> seq = d.tokens();
    switch (kind) {
    case Transform::SwitchAll:
        for (Token& t : seq) {
            t.role = t.role == Role::Over ? Role::Under : Role::Over;
            t.sign = -t.sign;
        }
        break;
    case Transform::Mirror:
        // A planar reflection keeps the traversal order and every
        // over/under assignment; only the crossing signs flip.
        for (Token& t : seq)
            t.sign = -t.sign;
        break;
    case Transform::Reverse:
        std::reverse(seq.begin(), seq.end());
        break;
    }
    return GaussDiagram(std::move(seq));
}

const char* transform_name(Transform kind)
{
    switch (kind) {
    case Transform::SwitchAll:
        return "switch_all";
    case Transform::Mirror:
        return "mirror";
    case Transform::Reverse:
        return "reverse";
    }
    return "?";
}

GaussDiagram random_diagram(int n, Rng& rng)
{
    if (n < 0)
        throw OutOfRange("negative chord count");
    std::vector<int> pos(2 * static_cast<std::size_t>(n));
    std::iota(pos.begin(), pos.end(), 0);
    rng.shuffle(pos);
    std::vector<Token> seq(pos.size());
    for (int i = 0; i < n; ++i) {
        int sign = rng.coin() ? 1 : -1;
        seq[pos[2 * i]] = Token{i + 1, Role::Over, sign};
        seq[pos[2 * i + 1]] = Token{i + 1, Role::Under, sign};
    }
    return canonical(GaussDiagram(std::move(seq)));
}

GaussDiagram random_diagram(int n, std::uint64_t seed)
{
    Rng rng(seed);
    return random_diagram(n, rng);
}

} // namespace vknot
