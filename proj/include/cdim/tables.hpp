#ifndef CDIM_TABLES_HPP
#define CDIM_TABLES_HPP

#include <string>
#include <vector>

namespace cdim {

// CSV emitters in the published layout: header "k\n" (or "k\d"), one row per
// k, empty cells where the parameters are out of range, "inf" for the
// infinite entries of the n_{k,d} table.
std::string table_cd_csv(size_t n_lo, size_t n_hi, size_t k_lo, size_t k_hi);
std::string table_d_csv(size_t i, size_t n_lo, size_t n_hi, size_t k_lo, size_t k_hi);
std::string table_nkd_csv(size_t k_lo, size_t k_hi, size_t d_lo, size_t d_hi);

// Expected values transcribed from the published tables, in the same layout
// and at the published ranges (cd: n 2..18, k 1..9; d: i=2, n 3..18, k 1..9;
// n_{k,d}: k 1..7, d 1..14).
std::string expected_cd_csv();
std::string expected_d2_csv();
std::string expected_nkd_csv();

struct TableDiff {
    bool match = true;
    std::vector<std::string> mismatches;  // "row k=3 col n=7: got 5 expected 6"
};

TableDiff diff_tables(const std::string& got, const std::string& expected);

}  // namespace cdim

#endif
