#pragma once

// Robinson-Schensted-Knuth correspondence between nonnegative integer
// matrices and pairs of same-shape tableaux.
//
// Biword convention: cells are scanned row-major and cell (i, j) contributes
// A(i, j) copies of the pair (i+1, j+1). The column label j+1 is row-inserted
// into the insertion tableau; the row label i+1 records the new box. So the
// insertion tableau has content = column sums and the recording tableau has
// content = row sums.

#include <algorithm>
#include <cstddef>
#include <string>

#include "core.hpp"

namespace lrkit {

struct TableauPair {
    Tableau insertion;  // content: column sums of the matrix
    Tableau recording;  // content: row sums of the matrix
    Partition shape;
    std::size_t table_rows = 0;  // alphabet of the recording tableau
    std::size_t table_cols = 0;  // alphabet of the insertion tableau

    friend bool operator==(const TableauPair&, const TableauPair&) = default;
};

namespace detail {

/// Row insertion of x; returns the row index where a new box was created.
/// Bumps the leftmost entry strictly greater than the inserted value, which is
/// what keeps equal values in a row and columns strict.
inline std::size_t row_insert(Tableau& p, Tableau::Entry x) {
    for (std::size_t r = 0;; ++r) {
        if (r == p.rows.size()) {
            p.rows.push_back({x});
            return r;
        }
        auto& row = p.rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return r;
        }
        std::swap(*it, x);
    }
}

/// Removes the corner box at the end of row r and reverse-bumps it out of
/// the first row; returns the ejected value.
inline Tableau::Entry reverse_insert(Tableau& p, std::size_t r) {
    Tableau::Entry y = p.rows[r].back();
    p.rows[r].pop_back();
    if (p.rows[r].empty()) p.rows.erase(p.rows.begin() + static_cast<std::ptrdiff_t>(r));
    while (r-- > 0) {
        auto& row = p.rows[r];
        // rightmost entry strictly less than y
        auto it = std::lower_bound(row.begin(), row.end(), y);
        --it;
        std::swap(*it, y);
    }
    return y;
}

}  // namespace detail

inline TableauPair rsk_forward(const ContingencyTable& a, std::size_t budget = default_box_budget) {
    if (a.total() > budget)
        throw BudgetExceeded("matrix weight " + a.total().str() + " exceeds explicit budget " +
                             std::to_string(budget));
    TableauPair out;
    out.table_rows = a.rows();
    out.table_cols = a.cols();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const auto copies = a.at(i, j).convert_to<std::size_t>();
            for (std::size_t c = 0; c < copies; ++c) {
                const std::size_t r = detail::row_insert(out.insertion, j + 1);
                if (r == out.recording.rows.size()) out.recording.rows.emplace_back();
                out.recording.rows[r].push_back(i + 1);
            }
        }
    out.shape = out.insertion.shape();
    return out;
}

inline ContingencyTable rsk_inverse(const TableauPair& pair) {
    if (pair.insertion.rows.size() != pair.recording.rows.size())
        throw DomainError("tableau pair components have different shapes");
    for (std::size_t r = 0; r < pair.insertion.rows.size(); ++r)
        if (pair.insertion.rows[r].size() != pair.recording.rows[r].size())
            throw DomainError("tableau pair components differ in row " + std::to_string(r + 1));
    if (!pair.insertion.is_semistandard() || !pair.recording.is_semistandard())
        throw DomainError("tableau pair component is not semistandard");
    if (pair.insertion.shape() != pair.shape) throw DomainError("tableau pair shape field is inconsistent");
    if (pair.insertion.max_entry() > pair.table_cols || pair.recording.max_entry() > pair.table_rows)
        throw DomainError("tableau entries exceed the declared table dimensions");

    ContingencyTable a(pair.table_rows, pair.table_cols);
    Tableau p = pair.insertion;
    Tableau q = pair.recording;
    while (!q.rows.empty()) {
        // Largest recording entry; among ties the rightmost, which is a corner.
        std::size_t best_row = 0;
        Tableau::Entry best = 0;
        std::size_t best_col = 0;
        for (std::size_t r = 0; r < q.rows.size(); ++r) {
            const auto v = q.rows[r].back();
            const auto col = q.rows[r].size() - 1;
            if (v > best || (v == best && col > best_col)) {
                best = v;
                best_row = r;
                best_col = col;
            }
        }
        q.rows[best_row].pop_back();
        if (q.rows[best_row].empty()) q.rows.erase(q.rows.begin() + static_cast<std::ptrdiff_t>(best_row));
        const auto j = detail::reverse_insert(p, best_row);
        a.at(best - 1, j - 1) += 1;
    }
    return a;
}

}  // namespace lrkit
