#include "nil2/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace nil2 {

using nlohmann::json;

bool Report::all_pass() const {
    return std::all_of(verdicts.begin(), verdicts.end(),
                       [](const Verdict& v) { return v.pass; });
}

void Report::add(const std::string& name, bool pass, const std::string& detail) {
    verdicts.push_back({name, pass, detail});
}

void Report::merge(const Report& o) {
    verdicts.insert(verdicts.end(), o.verdicts.begin(), o.verdicts.end());
    tables.insert(tables.end(), o.tables.begin(), o.tables.end());
}

std::string run_report_to_json(const RunReport& r) {
    json j;
    j["command"] = r.command;
    j["params"] = r.params;
    j["verdicts"] = json::array();
    for (const auto& v : r.body.verdicts)
        j["verdicts"].push_back({{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
    j["tables"] = json::array();
    for (const auto& t : r.body.tables) {
        json jt;
        jt["name"] = t.name;
        jt["columns"] = t.columns;
        jt["rows"] = t.rows;
        j["tables"].push_back(jt);
    }
    j["sign_variant"] = r.sign_variant;
    j["version"] = r.version;
    j["elapsed_ms"] = r.elapsed_ms;
    return j.dump(2) + "\n";
}

RunReport run_report_from_json(const std::string& text) {
    json j = json::parse(text);
    RunReport r;
    r.command = j.at("command").get<std::string>();
    r.params = j.at("params").get<std::map<std::string, std::string>>();
    for (const auto& jv : j.at("verdicts"))
        r.body.verdicts.push_back({jv.at("name").get<std::string>(),
                                   jv.at("pass").get<bool>(),
                                   jv.at("detail").get<std::string>()});
    for (const auto& jt : j.at("tables")) {
        Table t;
        t.name = jt.at("name").get<std::string>();
        t.columns = jt.at("columns").get<std::vector<std::string>>();
        t.rows = jt.at("rows").get<std::vector<std::vector<std::string>>>();
        r.body.tables.push_back(std::move(t));
    }
    r.sign_variant = j.at("sign_variant").get<std::string>();
    r.version = j.at("version").get<std::string>();
    r.elapsed_ms = j.at("elapsed_ms").get<long long>();
    return r;
}

bool run_report_equal(const RunReport& a, const RunReport& b) {
    auto key = [](const RunReport& r) { return run_report_to_json(r); };
    return key(a) == key(b);
}

static void print_table(std::ostream& os, const Table& t) {
    std::vector<std::size_t> w(t.columns.size(), 0);
    for (std::size_t c = 0; c < t.columns.size(); ++c) w[c] = t.columns[c].size();
    for (const auto& row : t.rows)
        for (std::size_t c = 0; c < row.size() && c < w.size(); ++c)
            w[c] = std::max(w[c], row[c].size());
    os << "  " << t.name << "\n";
    auto line = [&](const std::vector<std::string>& cells) {
        os << "    ";
        for (std::size_t c = 0; c < cells.size(); ++c) {
            os << cells[c];
            if (c + 1 < cells.size())
                os << std::string(w[c] > cells[c].size() ? w[c] - cells[c].size() + 2 : 2, ' ');
        }
        os << "\n";
    };
    line(t.columns);
    for (const auto& row : t.rows) line(row);
}

std::string run_report_human(const RunReport& r) {
    std::ostringstream os;
    os << r.command;
    for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
    os << "\n";
    for (const auto& t : r.body.tables) print_table(os, t);
    for (const auto& v : r.body.verdicts) {
        os << "  [" << (v.pass ? "pass" : "FAIL") << "] " << v.name;
        if (!v.detail.empty()) os << "  " << v.detail;
        os << "\n";
    }
    if (!r.sign_variant.empty()) os << "  sign variant: " << r.sign_variant << "\n";
    os << "  elapsed: " << r.elapsed_ms << " ms\n";
    return os.str();
}

}  // namespace nil2
