#pragma once

#include <map>
#include <string>
#include <vector>

namespace nil2 {

struct Verdict {
    std::string name;
    bool pass = false;
    std::string detail;  // witness text on failure, summary counts on pass
};

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct Report {
    std::vector<Verdict> verdicts;
    std::vector<Table> tables;

    bool all_pass() const;
    void add(const std::string& name, bool pass, const std::string& detail = "");
    void merge(const Report& o);
};

struct RunReport {
    std::string command;
    std::map<std::string, std::string> params;
    Report body;
    std::string sign_variant;  // frozen split-sign formula, "" when unused
    std::string version;
    long long elapsed_ms = 0;
};

// JSON wire format; parse(serialize(r)) == r, rationals ride as strings
std::string run_report_to_json(const RunReport& r);
RunReport run_report_from_json(const std::string& text);
bool run_report_equal(const RunReport& a, const RunReport& b);

std::string run_report_human(const RunReport& r);

}  // namespace nil2
