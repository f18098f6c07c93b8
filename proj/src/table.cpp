#include "vknot/table.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "vknot/alexander.hpp"
#include "vknot/errors.hpp"
#include "vknot/gauss.hpp"
#include "vknot/writhe.hpp"

namespace vknot {

using nlohmann::json;

LoadedTable load_table(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path.string());
    return load_table(in);
}

LoadedTable load_table(std::istream& in)
{
    LoadedTable t;
    std::set<std::string> names;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> f;
        for (std::string s; fields >> s;)
            f.push_back(s);
        if (f.empty())
            continue;
        auto err = [&](const std::string& why) { t.errors.push_back("line " + std::to_string(lineno) + ": " + why); };
        if (f.size() < 2 || f.size() > 4) {
            err("expected 'name code [W [V]]'");
            continue;
        }
        if (!names.insert(f[0]).second) {
            err("duplicate name " + f[0]);
            continue;
        }
        KnotRecord rec{f[0], f[1], std::nullopt, std::nullopt};
        try {
            if (f.size() > 2)
                rec.expected_w = parse_uni(f[2]);
            if (f.size() > 3)
                rec.expected_v = parse_uni(f[3]);
        } catch (const ParseError& e) {
            err(e.what());
            continue;
        }
        t.records.push_back(std::move(rec));
    }
    return t;
}

const char* status_name(Status s)
{
    switch (s) {
    case Status::Ok:
        return "ok";
    case Status::WMismatch:
        return "w_mismatch";
    case Status::VMismatch:
        return "v_mismatch";
    case Status::ParseError:
        return "parse_error";
    }
    return "?";
}

Status status_from_name(const std::string& s)
{
    for (Status st : {Status::Ok, Status::WMismatch, Status::VMismatch, Status::ParseError})
        if (s == status_name(st))
            return st;
    throw ParseError(ParseError::Kind::MalformedToken, "unknown status " + s);
}

namespace {

bool v_matches(const UniLaurent& v, const UniLaurent& expected, const UniLaurent& modulus)
{
    return v_equivalent(VResidue{v, modulus}, VResidue{expected, modulus});
}

// Which symmetry images of the diagram (or which sign flip of V) would have
// produced the expected values. Does not change the status.
std::string triage(const GaussDiagram& d, const KnotRecord& rec)
{
    std::vector<std::string> notes;
    for (Transform t : {Transform::SwitchAll, Transform::Mirror, Transform::Reverse}) {
        const GaussDiagram img = transform(d, t);
        const VResidue v = v_polynomial(img);
        const bool w_ok = !rec.expected_w || *rec.expected_w == v.modulus;
        const bool v_ok = !rec.expected_v || v_matches(v.v_rep, *rec.expected_v, v.modulus);
        if (w_ok && v_ok)
            notes.push_back(std::string("matches ") + transform_name(t) + " image");
    }
    const VResidue v = v_polynomial(d);
    if (rec.expected_w && !v.modulus.is_zero() && *rec.expected_w == -v.modulus)
        notes.push_back("expected W is the negative of W");
    if (rec.expected_v && (!rec.expected_w || *rec.expected_w == v.modulus)
        && v_matches(-v.v_rep, *rec.expected_v, v.modulus))
        notes.push_back("expected V matches -V");
    std::string out;
    for (const auto& n : notes)
        out += (out.empty() ? "" : "; ") + n;
    return out;
}

} // namespace

KnotResult evaluate(const KnotRecord& rec, bool check)
{
    KnotResult r;
    r.name = rec.name;
    r.code = rec.code;
    GaussDiagram d;
    try {
        d = parse_gauss_code(rec.code);
    } catch (const ParseError& e) {
        r.status = Status::ParseError;
        r.diagnostic = e.what();
        return r;
    }
    const VResidue v = v_polynomial(d);
    r.delta0 = alexander_suite(d).delta0;
    r.w = v.modulus;
    r.v_rep = v.v_rep;
    r.bounds = bounds_report(d);
    if (!check)
        return r;
    if (rec.expected_w && *rec.expected_w != r.w)
        r.status = Status::WMismatch;
    else if (rec.expected_v && !v_matches(r.v_rep, *rec.expected_v, r.w))
        r.status = Status::VMismatch;
    if (r.status != Status::Ok)
        r.diagnostic = triage(d, rec);
    return r;
}

bool natural_less(const std::string& a, const std::string& b)
{
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const bool da = std::isdigit(static_cast<unsigned char>(a[i]));
        const bool db = std::isdigit(static_cast<unsigned char>(b[j]));
        if (da && db) {
            std::size_t ie = i, je = j;
            while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie])))
                ++ie;
            while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je])))
                ++je;
            std::string na = a.substr(i, ie - i), nb = b.substr(j, je - j);
            na.erase(0, std::min(na.find_first_not_of('0'), na.size()));
            nb.erase(0, std::min(nb.find_first_not_of('0'), nb.size()));
            if (na.size() != nb.size())
                return na.size() < nb.size();
            if (na != nb)
                return na < nb;
            i = ie;
            j = je;
        } else {
            if (a[i] != b[j])
                return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    if ((a.size() - i) != (b.size() - j))
        return a.size() - i < b.size() - j;
    return a < b;
}

std::vector<KnotResult> evaluate_table(const std::vector<KnotRecord>& records, bool check, unsigned threads)
{
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<std::size_t>(1, records.size()));

    std::vector<KnotResult> results(records.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < records.size();)
            results[i] = evaluate(records[i], check);
    };
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < threads; ++k)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    std::sort(results.begin(), results.end(),
              [](const KnotResult& a, const KnotResult& b) { return natural_less(a.name, b.name); });
    return results;
}

namespace {

json coeff_json(const Coeff& c)
{
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
        return static_cast<long long>(c);
    return c.str();
}

Coeff coeff_from_json(const json& j)
{
    if (j.is_string())
        return Coeff(j.get<std::string>());
    return Coeff(j.get<long long>());
}

json terms_json(const BiLaurent& p)
{
    json a = json::array();
    for (const auto& [e, c] : p.terms())
        a.push_back(json::array({e[0], e[1], coeff_json(c)}));
    return a;
}

json terms_json(const UniLaurent& p)
{
    json a = json::array();
    for (const auto& [e, c] : p.terms())
        a.push_back(json::array({e[0], coeff_json(c)}));
    return a;
}

BiLaurent bi_from_json(const json& a)
{
    BiLaurent p;
    for (const auto& t : a)
        p.add_term({t.at(0).get<int>(), t.at(1).get<int>()}, coeff_from_json(t.at(2)));
    return p;
}

UniLaurent uni_from_json(const json& a)
{
    UniLaurent p;
    for (const auto& t : a)
        p.add_term({t.at(0).get<int>()}, coeff_from_json(t.at(1)));
    return p;
}

json result_json(const KnotResult& r)
{
    json j;
    j["name"] = r.name;
    j["code"] = r.code;
    j["delta0"] = terms_json(r.delta0);
    j["delta0_render"] = render(r.delta0);
    j["w"] = terms_json(r.w);
    j["w_render"] = render(r.w);
    j["v_rep"] = terms_json(r.v_rep);
    j["v_render"] = render(r.v_rep);
    j["bounds"] = {{"vc_lower", r.bounds.vc_lower},
                   {"forbidden_lower_w", r.bounds.forbidden_lower_w},
                   {"forbidden_one_excluded", obstruction_name(r.bounds.forbidden_one_excluded)}};
    j["status"] = status_name(r.status);
    if (!r.diagnostic.empty())
        j["diagnostic"] = r.diagnostic;
    return j;
}

Obstruction obstruction_from_name(const std::string& s)
{
    for (Obstruction o : {Obstruction::Yes, Obstruction::No, Obstruction::Inconclusive})
        if (s == obstruction_name(o))
            return o;
    throw ParseError(ParseError::Kind::MalformedToken, "unknown obstruction value " + s);
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + '"';
}

} // namespace

void write_results(const std::vector<KnotResult>& results, Format fmt, std::ostream& out)
{
    std::vector<const KnotResult*> sorted;
    for (const auto& r : results)
        sorted.push_back(&r);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const KnotResult* a, const KnotResult* b) { return natural_less(a->name, b->name); });

    if (fmt == Format::Json) {
        json a = json::array();
        for (const KnotResult* r : sorted)
            a.push_back(result_json(*r));
        out << a.dump(2) << '\n';
        return;
    }
    out << "name,code,delta0,w,v_rep,vc_lower,forbidden_lower_w,forbidden_one_excluded,status\n";
    for (const KnotResult* r : sorted) {
        out << csv_field(r->name) << ',' << csv_field(r->code) << ',' << csv_field(render(r->delta0)) << ','
            << csv_field(render(r->w)) << ',' << csv_field(render(r->v_rep)) << ',' << r->bounds.vc_lower << ','
            << r->bounds.forbidden_lower_w << ',' << obstruction_name(r->bounds.forbidden_one_excluded) << ','
            << status_name(r->status) << '\n';
    }
}

void write_results(const std::vector<KnotResult>& results, Format fmt, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot write " + path.string());
    write_results(results, fmt, out);
    if (!out)
        throw IoError("write failed for " + path.string());
}

std::vector<KnotResult> read_results_json(std::istream& in)
{
    const json a = json::parse(in);
    std::vector<KnotResult> out;
    for (const auto& j : a) {
        KnotResult r;
        r.name = j.at("name").get<std::string>();
        r.code = j.at("code").get<std::string>();
        r.delta0 = bi_from_json(j.at("delta0"));
        r.w = uni_from_json(j.at("w"));
        r.v_rep = uni_from_json(j.at("v_rep"));
        const auto& b = j.at("bounds");
        r.bounds.vc_lower = b.at("vc_lower").get<long long>();
        r.bounds.forbidden_lower_w = b.at("forbidden_lower_w").get<long long>();
        r.bounds.forbidden_one_excluded = obstruction_from_name(b.at("forbidden_one_excluded").get<std::string>());
        r.status = status_from_name(j.at("status").get<std::string>());
        r.diagnostic = j.value("diagnostic", "");
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace vknot
