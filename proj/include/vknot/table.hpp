#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vknot/bounds.hpp"
#include "vknot/laurent.hpp"

namespace vknot {

struct KnotRecord {
    std::string name;
    std::string code;
    std::optional<UniLaurent> expected_w;
    std::optional<UniLaurent> expected_v;
};

struct LoadedTable {
    std::vector<KnotRecord> records;
    std::vector<std::string> errors; // "line N: reason"
};

// Line format: name code [expected_W [expected_V]]; '#' starts a comment.
LoadedTable load_table(const std::filesystem::path& path);
LoadedTable load_table(std::istream& in);

enum class Status { Ok, WMismatch, VMismatch, ParseError };

const char* status_name(Status s);
Status status_from_name(const std::string& s);

struct KnotResult {
    std::string name;
    std::string code;
    Status status = Status::Ok;
    BiLaurent delta0;
    UniLaurent w;
    UniLaurent v_rep;
    BoundsReport bounds;
    std::string diagnostic; // mismatch triage, informative only

    friend bool operator==(const KnotResult& a, const KnotResult& b)
    {
        return a.name == b.name && a.code == b.code && a.status == b.status && a.delta0 == b.delta0 && a.w == b.w
            && a.v_rep == b.v_rep && a.bounds.vc_lower == b.bounds.vc_lower
            && a.bounds.forbidden_lower_w == b.bounds.forbidden_lower_w
            && a.bounds.forbidden_one_excluded == b.bounds.forbidden_one_excluded && a.diagnostic == b.diagnostic;
    }
};

KnotResult evaluate(const KnotRecord& rec, bool check);

// Evaluates concurrently; the result is sorted by name (numeric-aware).
std::vector<KnotResult> evaluate_table(const std::vector<KnotRecord>& records, bool check, unsigned threads = 0);

bool natural_less(const std::string& a, const std::string& b);

enum class Format { Json, Csv };

void write_results(const std::vector<KnotResult>& results, Format fmt, std::ostream& out);
void write_results(const std::vector<KnotResult>& results, Format fmt, const std::filesystem::path& path);
std::vector<KnotResult> read_results_json(std::istream& in);

} // namespace vknot
