#include "vknot/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "vknot/alexander.hpp"
#include "vknot/bounds.hpp"
#include "vknot/config_oracle.hpp"
#include "vknot/errors.hpp"
#include "vknot/gauss.hpp"
#include "vknot/moves.hpp"
#include "vknot/selftest.hpp"
#include "vknot/table.hpp"
#include "vknot/writhe.hpp"

namespace vknot {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kParse = 2;
constexpr int kMismatch = 3;

json terms(const BiLaurent& p)
{
    json a = json::array();
    for (const auto& [e, c] : p.terms())
        a.push_back(json::array({e[0], e[1], c.str()}));
    return a;
}

json terms(const UniLaurent& p)
{
    json a = json::array();
    for (const auto& [e, c] : p.terms())
        a.push_back(json::array({e[0], c.str()}));
    return a;
}

template <class P>
json poly(const P& p)
{
    return {{"terms", terms(p)}, {"render", render(p)}};
}

struct Ctx {
    std::ostream& out;
    std::ostream& err;
    bool as_json = false;
    std::uint64_t seed = 1;
};

int cmd_index(Ctx& c, const GaussDiagram& d)
{
    json rows = json::array();
    for (const Chord& ch : d.chords()) {
        const IndexRecord r = d.indices(ch.id);
        rows.push_back({{"chord", ch.id}, {"sign", ch.sign}, {"ro", r.ro}, {"ru", r.ru}, {"lo", r.lo}, {"lu", r.lu},
                        {"ind", r.ind}});
    }
    if (c.as_json) {
        c.out << rows.dump(2) << '\n';
        return kOk;
    }
    c.out << "chord sign  RO  RU  LO  LU Ind\n";
    for (const auto& r : rows) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%5d %4s %3d %3d %3d %3d %3d\n", r["chord"].get<int>(),
                      r["sign"].get<int>() > 0 ? "+" : "-", r["ro"].get<int>(), r["ru"].get<int>(),
                      r["lo"].get<int>(), r["lu"].get<int>(), r["ind"].get<int>());
        c.out << buf;
    }
    return kOk;
}

int cmd_alexander(Ctx& c, const GaussDiagram& d)
{
    const AlexanderResult r = alexander_suite(d);
    const std::string pi = d.empty() ? "()" : arc_labeling(d).cycle_string();
    if (c.as_json) {
        json j = {{"pi", pi},
                  {"delta0_raw", poly(r.delta0_raw)},
                  {"delta0", poly(r.delta0)},
                  {"delta0_prime", poly(r.delta0_prime)},
                  {"delta0_prime_raw", poly(r.delta0_prime_raw)},
                  {"delta0_bar", poly(r.delta0_bar)},
                  {"phi", poly(r.phi)}};
        c.out << j.dump(2) << '\n';
        return kOk;
    }
    c.out << "pi: " << pi << '\n'
          << "delta0_raw: " << render(r.delta0_raw) << '\n'
          << "delta0: " << render(r.delta0) << '\n'
          << "delta0_prime: " << render(r.delta0_prime) << '\n'
          << "delta0_bar: " << render(r.delta0_bar) << '\n'
          << "phi: " << render(r.phi) << '\n';
    return kOk;
}

int cmd_writhe(Ctx& c, const GaussDiagram& d)
{
    const WritheInvariants w = writhe_invariants(d);
    if (c.as_json) {
        json wn = json::object();
        for (const auto& [n, v] : w.wn)
            wn[std::to_string(n)] = v;
        c.out << json{{"w", poly(w.w)}, {"wn", wn}, {"odd_writhe", w.odd_writhe}}.dump(2) << '\n';
        return kOk;
    }
    c.out << render(w.w) << '\n';
    for (const auto& [n, v] : w.wn)
        c.out << "w_" << n << " = " << v << '\n';
    c.out << "odd writhe = " << w.odd_writhe << '\n';
    return kOk;
}

int cmd_vwrithe(Ctx& c, const GaussDiagram& d)
{
    const VResidue v = v_polynomial(d);
    if (c.as_json) {
        c.out << json{{"v_rep", poly(v.v_rep)}, {"modulus", poly(v.modulus)}}.dump(2) << '\n';
        return kOk;
    }
    c.out << render(v.v_rep) << "  (mod " << render(v.modulus) << ")\n";
    return kOk;
}

json bounds_json(const BoundsReport& b)
{
    return {{"vc_lower", b.vc_lower},
            {"forbidden_lower_w", b.forbidden_lower_w},
            {"forbidden_one_excluded", obstruction_name(b.forbidden_one_excluded)}};
}

int cmd_bounds(Ctx& c, const GaussDiagram& d)
{
    const BoundsReport b = bounds_report(d);
    if (c.as_json) {
        c.out << bounds_json(b).dump(2) << '\n';
        return kOk;
    }
    c.out << "vc_lower: " << b.vc_lower << '\n'
          << "forbidden_lower_w: " << b.forbidden_lower_w << '\n'
          << "forbidden_one_excluded: " << obstruction_name(b.forbidden_one_excluded) << '\n';
    return kOk;
}

int cmd_verify(Ctx& c, const GaussDiagram& d)
{
    std::vector<std::pair<std::string, Failure>> results;
    results.emplace_back("index identities", checks::index_identities(d));
    results.emplace_back("bridge W", checks::bridge_w(d));
    results.emplace_back("bridge V", checks::bridge_v(d));
    results.emplace_back("factor divisibility", checks::factor_divisibility(d));
    results.emplace_back("W divisibility", checks::w_divisibility(d));
    results.emplace_back("odd writhe", checks::odd_writhe(d));
    if (d.size() <= 6) {
        results.emplace_back("oracle equivalence", checks::oracle_equivalence(d));
        results.emplace_back("grouped terms", checks::grouped_terms(d));
        results.emplace_back("f divisibility", checks::f_divisibility(d));
    }
    for (Transform t : {Transform::SwitchAll, Transform::Mirror, Transform::Reverse})
        results.emplace_back(std::string("symmetry ") + transform_name(t), checks::symmetry(d, t));

    bool all = true;
    json j = json::array();
    for (const auto& [name, f] : results) {
        all = all && !f;
        if (c.as_json)
            j.push_back({{"check", name}, {"ok", !f}, {"detail", f.value_or("")}});
        else
            c.out << (f ? "FAIL " : "ok   ") << name << (f ? ": " + *f : "") << '\n';
    }
    if (c.as_json)
        c.out << j.dump(2) << '\n';
    return all ? kOk : kMismatch;
}

std::string relation(const BiLaurent& before, const BiLaurent& after)
{
    if (before == after)
        return "unchanged";
    if (!before.is_zero() && after.size() == before.size()) {
        try {
            const BiLaurent q = divide_exact(after, before);
            if (q.size() == 1)
                return "times " + render(q);
        } catch (const NotDivisible&) {
        }
    }
    return "changed";
}

int cmd_moves(Ctx& c, const GaussDiagram& start, const std::string& script_path)
{
    std::ifstream in(script_path);
    if (!in) {
        c.err << "error: cannot open " << script_path << '\n';
        return kUsage;
    }
    json script;
    try {
        script = json::parse(in);
    } catch (const json::exception& e) {
        c.err << "error: " << e.what() << '\n';
        return kParse;
    }
    if (!script.is_array()) {
        c.err << "error: move script must be a JSON array\n";
        return kParse;
    }

    GaussDiagram d = start;
    json steps = json::array();
    int step = 0;
    for (const auto& mv : script) {
        ++step;
        const std::string kind = mv.value("kind", "");
        GaussDiagram next;
        if (kind == "Ia" || kind == "Ib") {
            next = insert_r1(d, mv.at("pos").get<int>(), kind == "Ia" ? R1Variant::Ia : R1Variant::Ib);
        } else if (kind == "IIa") {
            next = insert_r2(d, mv.at("pos_a").get<int>(), mv.at("pos_b").get<int>());
        } else if (kind == "IIIa") {
            const auto ids = mv.at("chords").get<std::vector<int>>();
            if (ids.size() != 3)
                throw PatternNotFound("IIIa needs three chord ids");
            next = apply_r3(d, {ids[0], ids[1], ids[2]});
        } else if (kind == "FO" || kind == "FU") {
            const ForbiddenResult fr = apply_forbidden(d, mv.at("pos").get<int>());
            if (forbidden_kind_name(fr.kind) != kind)
                throw MixedEndpoints("endpoints at that position call for " + std::string(forbidden_kind_name(fr.kind)));
            next = fr.diagram;
        } else {
            throw ParseError(ParseError::Kind::MalformedToken, "unknown move kind '" + kind + "'");
        }

        const VResidue v0 = v_polynomial(d), v1 = v_polynomial(next);
        const std::string rel = relation(delta0_raw(d), delta0_raw(next));
        const UniLaurent dw = v1.modulus - v0.modulus, dv = v1.v_rep - v0.v_rep;
        steps.push_back({{"step", step},
                         {"kind", kind},
                         {"code", format_gauss_code(next)},
                         {"delta0_raw", rel},
                         {"dW", poly(dw)},
                         {"dV", poly(dv)}});
        if (!c.as_json)
            c.out << step << ". " << kind << " -> " << format_gauss_code(next) << "\n   delta0_raw " << rel
                  << ", dW = " << render(dw) << ", dV = " << render(dv) << '\n';
        d = std::move(next);
    }
    if (c.as_json)
        c.out << json{{"steps", steps}, {"result", format_gauss_code(d)}}.dump(2) << '\n';
    else
        c.out << "result: " << format_gauss_code(d) << '\n';
    return kOk;
}

int cmd_mutants(Ctx& c, int k)
{
    const MutantPair mp = mutant_family(k);
    const VResidue vk = v_polynomial(mp.k), vmk = v_polynomial(mp.mk);
    const UniLaurent diff = vk.v_rep - vmk.v_rep;
    const bool same_w = vk.modulus == vmk.modulus;
    const bool multiple = same_w && integer_multiple(diff, vk.modulus).has_value();
    const char* tk = pair_type_name(classify_pair(mp.k, k + 1, k + 3));
    const char* tmk = pair_type_name(classify_pair(mp.mk, k + 1, k + 3));
    if (c.as_json) {
        c.out << json{{"k", k},
                      {"K", {{"code", format_gauss_code(mp.k)}, {"w", poly(vk.modulus)}, {"v_rep", poly(vk.v_rep)},
                             {"pair_type", tk}}},
                      {"MK", {{"code", format_gauss_code(mp.mk)}, {"w", poly(vmk.modulus)}, {"v_rep", poly(vmk.v_rep)},
                              {"pair_type", tmk}}},
                      {"v_difference", poly(diff)},
                      {"difference_is_multiple_of_w", multiple}}
                     .dump(2)
              << '\n';
        return kOk;
    }
    c.out << "K:  " << format_gauss_code(mp.k) << "\n    W = " << render(vk.modulus) << "\n    V = " << render(vk.v_rep)
          << "\n    chords " << k + 1 << "," << k + 3 << ": " << tk << '\n'
          << "MK: " << format_gauss_code(mp.mk) << "\n    W = " << render(vmk.modulus)
          << "\n    V = " << render(vmk.v_rep) << "\n    chords " << k + 1 << "," << k + 3 << ": " << tmk << '\n'
          << "V_K - V_MK = " << render(diff) << (multiple ? " (a multiple of W)" : " (not a multiple of W)") << '\n';
    return kOk;
}

int cmd_table(Ctx& c, const std::string& path, bool check, const std::string& out_path, const std::string& format)
{
    const LoadedTable t = load_table(path);
    for (const auto& e : t.errors)
        c.err << "warning: " << path << ": " << e << '\n';
    const auto results = evaluate_table(t.records, check);
    const Format fmt = format == "csv" ? Format::Csv : Format::Json;

    std::map<Status, int> counts;
    for (const auto& r : results)
        ++counts[r.status];
    if (out_path.empty()) {
        write_results(results, fmt, c.out);
    } else {
        write_results(results, fmt, out_path);
        c.out << results.size() << " knots";
        for (Status s : {Status::Ok, Status::WMismatch, Status::VMismatch, Status::ParseError})
            c.out << ", " << status_name(s) << "=" << counts[s];
        c.out << '\n';
    }
    if (check)
        for (const auto& r : results)
            if (r.status != Status::Ok)
                c.err << r.name << ": " << status_name(r.status) << (r.diagnostic.empty() ? "" : " (" + r.diagnostic + ")")
                      << '\n';
    const bool bad = counts[Status::WMismatch] + counts[Status::VMismatch] + counts[Status::ParseError] > 0;
    return check && bad ? kMismatch : kOk;
}

int cmd_selftest(Ctx& c, int n, int trials)
{
    const auto outcomes = run_selftest({n, trials, c.seed});
    bool all = true;
    json j = json::array();
    for (const auto& o : outcomes) {
        all = all && o.ok();
        if (c.as_json) {
            j.push_back({{"check", o.name}, {"trials", o.trials}, {"failures", o.failures},
                         {"first_failure", o.first_failure}});
            continue;
        }
        c.out << (o.ok() ? "PASS " : "FAIL ") << o.name << " (" << o.trials - o.failures << "/" << o.trials << ")";
        if (!o.ok() && !o.first_failure.empty())
            c.out << "\n     first: " << o.first_failure;
        c.out << '\n';
    }
    if (c.as_json)
        c.out << j.dump(2) << '\n';
    return all ? kOk : kMismatch;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Writhe and Alexander invariants of virtual knots from Gauss codes", "vknot"};
    app.require_subcommand(1);
    app.fallthrough();

    Ctx ctx{out, err};
    app.add_flag("--json", ctx.as_json, "Machine-readable JSON output");
    app.add_option("--seed", ctx.seed, "Random seed");

    std::string code;
    auto with_code = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("code", code, "Gauss code, e.g. O1-O2-U1-U2-O3+O4+U3+U4+")->required();
        return sub;
    };
    auto* index = with_code("index", "Per-chord RO, RU, LO, LU and index");
    auto* alexander = with_code("alexander", "Generalized Alexander polynomial and its quotients");
    auto* writhe = with_code("writhe", "Writhe polynomial W, n-writhes, odd writhe");
    auto* vwrithe = with_code("vwrithe", "Second-order writhe polynomial V and its modulus W");
    auto* bounds = with_code("bounds", "Virtual crossing and forbidden number bounds");
    auto* verify = with_code("verify", "Run all per-diagram identity checks");
    auto* moves = with_code("moves", "Apply a JSON move script");
    std::string script;
    moves->add_option("--script", script, "JSON move list")->required();

    auto* mutants = app.add_subcommand("mutants", "Mutant pair K, MK");
    int k = 1;
    mutants->add_option("--k", k, "Family parameter k >= 1")->required();

    auto* table = app.add_subcommand("table", "Batch evaluation of a knot table");
    std::string table_path, out_path, format = "json";
    bool check = false;
    table->add_option("file", table_path, "Table file: name code [W [V]] per line")->required();
    table->add_flag("--check", check, "Compare against expected W and V");
    table->add_option("--out", out_path, "Write results to a file");
    table->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto* selftest = app.add_subcommand("selftest", "Randomized property suite");
    int max_n = 6, trials = 500;
    selftest->add_option("--n", max_n, "Maximum chord count");
    selftest->add_option("--trials", trials, "Trials per property group");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kUsage;
    }

    try {
        if (*mutants)
            return cmd_mutants(ctx, k);
        if (*table)
            return cmd_table(ctx, table_path, check, out_path, format);
        if (*selftest)
            return cmd_selftest(ctx, max_n, trials);

        const GaussDiagram d = parse_gauss_code(code);
        if (*index)
            return cmd_index(ctx, d);
        if (*alexander)
            return cmd_alexander(ctx, d);
        if (*writhe)
            return cmd_writhe(ctx, d);
        if (*vwrithe)
            return cmd_vwrithe(ctx, d);
        if (*bounds)
            return cmd_bounds(ctx, d);
        if (*verify)
            return cmd_verify(ctx, d);
        if (*moves)
            return cmd_moves(ctx, d, script);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const json::exception& e) {
        err << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace vknot
