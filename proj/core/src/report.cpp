#include "cobarlab/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace cobarlab {

std::string Report::to_tsv() const {
    std::ostringstream out;
    out << "# command\t" << command << "\n";
    for (const auto& [k, v] : config) out << "# " << k << "\t" << v << "\n";
    for (const auto& t : tables) {
        out << "## " << t.name << "\n";
        for (size_t i = 0; i < t.columns.size(); ++i)
            out << (i ? "\t" : "") << t.columns[i];
        out << "\n";
        for (const auto& r : t.rows) {
            for (size_t i = 0; i < r.size(); ++i) out << (i ? "\t" : "") << r[i];
            out << "\n";
        }
    }
    out << "# pass\t" << (pass ? "true" : "false") << "\n";
    return out.str();
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& [k, v] : config) cfg[k] = v;
    j["config"] = cfg;
    j["tables"] = nlohmann::ordered_json::array();
    for (const auto& t : tables) {
        nlohmann::ordered_json jt;
        jt["name"] = t.name;
        jt["columns"] = t.columns;
        jt["rows"] = t.rows;
        j["tables"].push_back(jt);
    }
    j["pass"] = pass;
    return j.dump(2) + "\n";
}

}  // namespace cobarlab
