#pragma once

#include <string>
#include <vector>

namespace cobarlab {

/// Deterministic tabular output shared by the CLI and the verification
/// suites; renders to TSV or to the fixed JSON schema
/// {command, config, tables: [{name, columns, rows}], pass}.
struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<Table> tables;
    bool pass = true;

    std::string to_tsv() const;
    std::string to_json() const;
};

}  // namespace cobarlab
