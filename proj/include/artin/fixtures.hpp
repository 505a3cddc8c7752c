#pragma once
//
// Reference tables stored as CSV fixtures that the engine must reproduce
// cell-for-cell.
//
// Table schema: a header line `auto,generator,t1,...,tn,perm`, then one row
// per (automorphism, generator) pair.  `auto` is a token from
// graph_auto_name (id, g, r, rg, r2, ...), `generator` the 1-based index,
// the t-columns hold integers or linear-form strings in x1..xk, `perm` the
// one-line permutation.  Plain integer-matrix fixtures are bare CSV rows of
// integers with no header.
//
// The fixture directory is compiled in (the source tree's tests/fixtures)
// and can be overridden with the ARTIN_FIXTURES environment variable.
//
#include "artin/linform.hpp"
#include "artin/word.hpp"

#include <map>
#include <string>
#include <vector>

namespace artin {

std::string fixtures_dir();
std::string fixture_path(const std::string& name);

struct FixtureRow {
    std::string auto_name;
    int generator = 0;
    std::vector<std::string> t;
    std::string perm;
};

struct FixtureTable {
    int n = 0;  // number of t-columns
    std::vector<FixtureRow> rows;
};

/// Throws std::runtime_error on I/O failure or schema violations.
FixtureTable load_table(const std::string& path);

/// Rows grouped by automorphism token, generator-ordered, cells as integers.
std::map<std::string, GenImagesInt> table_as_int(const FixtureTable& t);

/// Same with linear-form cells.
std::map<std::string, GenImagesForm> table_as_form(const FixtureTable& t);

/// Bare integer matrix (one row per line, comma-separated).
std::vector<std::vector<Int>> load_int_matrix(const std::string& path);

/// Bare matrix of linear forms (one row per line, comma-separated form strings).
std::vector<std::vector<LinForm>> load_form_matrix(const std::string& path);

}  // namespace artin
