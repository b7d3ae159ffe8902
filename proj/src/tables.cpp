#include "cdim/tables.hpp"

#include <sstream>

#include "cdim/constructions.hpp"
#include "cdim/theorems.hpp"

namespace cdim {

std::string table_cd_csv(size_t n_lo, size_t n_hi, size_t k_lo, size_t k_hi) {
    std::ostringstream out;
    out << "k\\n";
    for (size_t n = n_lo; n <= n_hi; ++n) out << ',' << n;
    out << '\n';
    for (size_t k = k_lo; k <= k_hi; ++k) {
        out << k;
        for (size_t n = n_lo; n <= n_hi; ++n) {
            out << ',';
            if (n >= 2 && k >= 1 && k + 1 <= n) out << cd_complete(n, k);
        }
        out << '\n';
    }
    return out.str();
}

std::string table_d_csv(size_t i, size_t n_lo, size_t n_hi, size_t k_lo, size_t k_hi) {
    std::ostringstream out;
    out << "k\\n";
    for (size_t n = n_lo; n <= n_hi; ++n) out << ',' << n;
    out << '\n';
    for (size_t k = k_lo; k <= k_hi; ++k) {
        out << k;
        for (size_t n = n_lo; n <= n_hi; ++n) {
            out << ',';
            if (k >= 1 && k + 1 <= n && i + 1 <= n) out << d_skeleton(n, k, i);
        }
        out << '\n';
    }
    return out.str();
}

std::string table_nkd_csv(size_t k_lo, size_t k_hi, size_t d_lo, size_t d_hi) {
    std::ostringstream out;
    out << "k\\d";
    for (size_t d = d_lo; d <= d_hi; ++d) out << ',' << d;
    out << '\n';
    for (size_t k = k_lo; k <= k_hi; ++k) {
        out << k;
        for (size_t d = d_lo; d <= d_hi; ++d) {
            out << ',';
            NkdValue v = n_kd(k, d);
            if (v.infinite) out << "inf";
            else out << v.value;
        }
        out << '\n';
    }
    return out.str();
}

namespace {

// Transcriptions of the published tables. -1 marks an empty cell, 0 marks
// "inf" in the n_{k,d} table.
constexpr int kCd[9][17] = {
    // n = 2..18, k = 1..9
    {1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2},
    {-1, 2, 2, 3, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4},
    {-1, -1, 2, 3, 4, 5, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6},
    {-1, -1, -1, 2, 4, 5, 6, 7, 8, 8, 8, 8, 8, 8, 8, 8, 8},
    {-1, -1, -1, -1, 2, 4, 6, 7, 8, 9, 10, 10, 10, 10, 10, 10, 10},
    {-1, -1, -1, -1, -1, 2, 4, 6, 8, 9, 10, 11, 12, 12, 12, 12, 12},
    {-1, -1, -1, -1, -1, -1, 2, 4, 6, 8, 10, 11, 12, 13, 14, 14, 14},
    {-1, -1, -1, -1, -1, -1, -1, 2, 4, 6, 8, 10, 12, 13, 14, 15, 16},
    {-1, -1, -1, -1, -1, -1, -1, -1, 2, 4, 6, 8, 10, 12, 14, 15, 16},
};

constexpr int kD2[9][16] = {
    // n = 3..18, k = 1..9, i = 2
    {2, 3, 4, 5, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6},
    {2, 3, 4, 5, 6, 7, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8},
    {-1, 3, 4, 5, 6, 7, 8, 9, 10, 10, 10, 10, 10, 10, 10, 10},
    {-1, -1, 4, 5, 6, 6, 7, 8, 9, 10, 11, 12, 12, 12, 12, 12},
    {-1, -1, -1, 5, 6, 7, 7, 8, 9, 10, 11, 12, 13, 14, 14, 14},
    {-1, -1, -1, -1, 6, 7, 8, 8, 9, 10, 11, 12, 13, 14, 15, 16},
    {-1, -1, -1, -1, -1, 6, 8, 9, 9, 10, 11, 12, 13, 14, 15, 16},
    {-1, -1, -1, -1, -1, -1, 6, 8, 10, 10, 11, 12, 13, 14, 15, 16},
    {-1, -1, -1, -1, -1, -1, -1, 6, 8, 10, 11, 12, 13, 14, 15, 16},
};

constexpr int kNkd[7][14] = {
    // d = 1..14, k = 1..7, 0 = inf
    {2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {2, 4, 5, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {3, 4, 5, 6, 7, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {4, 5, 5, 6, 7, 8, 9, 0, 0, 0, 0, 0, 0, 0},
    {5, 6, 6, 7, 7, 8, 9, 10, 11, 0, 0, 0, 0, 0},
    {6, 7, 7, 8, 8, 9, 9, 10, 11, 12, 13, 0, 0, 0},
    {7, 8, 8, 9, 9, 10, 10, 11, 11, 12, 13, 14, 15, 0},
};

template <size_t Rows, size_t Cols>
std::string render(const char* header, size_t col_lo, size_t k_lo, const int (&data)[Rows][Cols],
                   bool zero_is_inf) {
    std::ostringstream out;
    out << header;
    for (size_t c = 0; c < Cols; ++c) out << ',' << (col_lo + c);
    out << '\n';
    for (size_t r = 0; r < Rows; ++r) {
        out << (k_lo + r);
        for (size_t c = 0; c < Cols; ++c) {
            out << ',';
            int v = data[r][c];
            if (v == -1) continue;
            if (zero_is_inf && v == 0) out << "inf";
            else out << v;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace

std::string expected_cd_csv() { return render("k\\n", 2, 1, kCd, false); }
std::string expected_d2_csv() { return render("k\\n", 3, 1, kD2, false); }
std::string expected_nkd_csv() { return render("k\\d", 1, 1, kNkd, true); }

TableDiff diff_tables(const std::string& got, const std::string& expected) {
    TableDiff out;
    auto split_lines = [](const std::string& text) {
        std::vector<std::string> lines;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
        return lines;
    };
    auto split_cells = [](const std::string& line) {
        std::vector<std::string> cells;
        std::istringstream in(line);
        std::string cell;
        while (std::getline(in, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.push_back("");
        return cells;
    };
    std::vector<std::string> glines = split_lines(got), elines = split_lines(expected);
    if (glines.size() != elines.size()) {
        out.match = false;
        out.mismatches.push_back("row count " + std::to_string(glines.size()) + " vs " +
                                 std::to_string(elines.size()));
        return out;
    }
    std::vector<std::string> header = split_cells(elines.empty() ? "" : elines[0]);
    for (size_t r = 0; r < glines.size(); ++r) {
        std::vector<std::string> gc = split_cells(glines[r]), ec = split_cells(elines[r]);
        if (gc.size() != ec.size()) {
            out.match = false;
            out.mismatches.push_back("row " + std::to_string(r) + ": cell count differs");
            continue;
        }
        for (size_t c = 0; c < gc.size(); ++c) {
            if (gc[c] == ec[c]) continue;
            out.match = false;
            std::string where = r == 0 ? "header" : ("k=" + ec[0]);
            std::string col = (c == 0 || c - 1 >= header.size() - 1) ? std::to_string(c)
                                                                     : header[c];
            out.mismatches.push_back("row " + where + " col " + col + ": got '" + gc[c] +
                                     "' expected '" + ec[c] + "'");
        }
    }
    return out;
}

}  // namespace cdim
