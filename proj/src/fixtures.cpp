#include "artin/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef ARTIN_DEFAULT_FIXTURES
#define ARTIN_DEFAULT_FIXTURES "tests/fixtures"
#endif

namespace artin {

std::string fixtures_dir() {
    if (const char* env = std::getenv("ARTIN_FIXTURES")) return env;
    return ARTIN_DEFAULT_FIXTURES;
}

std::string fixture_path(const std::string& name) {
    return fixtures_dir() + "/" + name;
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

FixtureTable load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty fixture: " + path);
    std::vector<std::string> header = split_csv(trimmed(line));
    if (header.size() < 4 || header[0] != "auto" || header[1] != "generator" ||
        header.back() != "perm")
        throw std::runtime_error("bad fixture header: " + path);
    FixtureTable table;
    table.n = static_cast<int>(header.size()) - 3;
    for (int i = 1; i <= table.n; ++i)
        if (header[1 + i] != "t" + std::to_string(i))
            throw std::runtime_error("bad fixture header column: " + path);

    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        line = trimmed(line);
        if (line.empty()) continue;
        std::vector<std::string> cells = split_csv(line);
        if (static_cast<int>(cells.size()) != table.n + 3)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": wrong cell count");
        FixtureRow row;
        row.auto_name = trimmed(cells[0]);
        row.generator = std::stoi(trimmed(cells[1]));
        for (int i = 0; i < table.n; ++i) row.t.push_back(trimmed(cells[2 + i]));
        row.perm = trimmed(cells.back());
        table.rows.push_back(std::move(row));
    }
    return table;
}

namespace {

template <class S, class CellParse>
std::map<std::string, GenImages<S>> group_rows(const FixtureTable& t, CellParse parse) {
    std::map<std::string, GenImages<S>> out;
    std::map<std::string, int> next_gen;
    for (const FixtureRow& row : t.rows) {
        GenImages<S>& images = out[row.auto_name];
        int expected = ++next_gen[row.auto_name];
        if (row.generator != expected)
            throw std::runtime_error("fixture rows out of generator order for auto '" +
                                     row.auto_name + "'");
        std::vector<S> tr;
        tr.reserve(row.t.size());
        for (const std::string& cell : row.t) tr.push_back(parse(cell));
        images.push_back(AffineElem<S>(std::move(tr), Perm::parse_one_line(row.perm)));
    }
    return out;
}

}  // namespace

std::map<std::string, GenImagesInt> table_as_int(const FixtureTable& t) {
    return group_rows<Int>(t, [](const std::string& cell) { return Int(cell); });
}

std::map<std::string, GenImagesForm> table_as_form(const FixtureTable& t) {
    return group_rows<LinForm>(t,
                               [](const std::string& cell) { return LinForm::parse(cell); });
}

std::vector<std::vector<Int>> load_int_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture: " + path);
    std::vector<std::vector<Int>> rows;
    std::string line;
    while (std::getline(in, line)) {
        line = trimmed(line);
        if (line.empty()) continue;
        std::vector<Int> row;
        for (const std::string& cell : split_csv(line)) row.push_back(Int(trimmed(cell)));
        if (!rows.empty() && rows.back().size() != row.size())
            throw std::runtime_error("ragged matrix fixture: " + path);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::vector<LinForm>> load_form_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture: " + path);
    std::vector<std::vector<LinForm>> rows;
    std::string line;
    while (std::getline(in, line)) {
        line = trimmed(line);
        if (line.empty()) continue;
        std::vector<LinForm> row;
        for (const std::string& cell : split_csv(line)) row.push_back(LinForm::parse(trimmed(cell)));
        if (!rows.empty() && rows.back().size() != row.size())
            throw std::runtime_error("ragged matrix fixture: " + path);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace artin
