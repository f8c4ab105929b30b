#pragma once

// Certificate verification on row-content matrices. Nothing here expands a
// certificate: all checks run on cumulative sums of matrix entries, so the
// cost depends on the matrix dimensions and not on the number of boxes.

#include <cstddef>
#include <string>

#include "core.hpp"

namespace lrkit {

enum class Constraint {
    None,
    RowSum,          // shape: row r holds the wrong number of boxes
    ColumnSum,       // content: value v used the wrong number of times
    ColumnStrict,    // row r+1 prefix up to value index+1 exceeds row r prefix up to index
    Ballot,          // value index+1 would outrun value index while reading row r
};

inline const char* to_string(Constraint c) {
    switch (c) {
        case Constraint::None: return "none";
        case Constraint::RowSum: return "row-sum";
        case Constraint::ColumnSum: return "column-sum";
        case Constraint::ColumnStrict: return "column-strict";
        case Constraint::Ballot: return "ballot";
    }
    return "?";
}

/// Outcome of a verification. On failure, `row` and `index` locate the first
/// violated constraint (both 0-based); `entries_visited` counts matrix reads.
struct Report {
    Constraint failed = Constraint::None;
    std::size_t row = 0;
    std::size_t index = 0;
    std::size_t entries_visited = 0;

    [[nodiscard]] bool ok() const noexcept { return failed == Constraint::None; }
    explicit operator bool() const noexcept { return ok(); }

    [[nodiscard]] std::string describe() const {
        switch (failed) {
            case Constraint::None: return "valid";
            case Constraint::RowSum:
                return "row " + std::to_string(row + 1) + " length does not match the shape";
            case Constraint::ColumnSum:
                return "value " + std::to_string(index + 1) + " count does not match the content";
            case Constraint::ColumnStrict:
                return "column strictness fails between rows " + std::to_string(row) + " and " +
                       std::to_string(row + 1) + " at value " + std::to_string(index + 1);
            case Constraint::Ballot:
                return "ballot condition fails in row " + std::to_string(row + 1) + ": value " +
                       std::to_string(index + 2) + " outruns value " + std::to_string(index + 1);
        }
        return "?";
    }
};

namespace detail {

inline Report fail(Report r, Constraint c, std::size_t row, std::size_t index) {
    r.failed = c;
    r.row = row;
    r.index = index;
    return r;
}

inline void require_dims(const RowContentMatrix& m, std::size_t rows, std::size_t values) {
    if (m.rows() != rows || m.values() != values)
        throw DimensionError("certificate is " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.values()) + ", instance requires " +
                             std::to_string(rows) + "x" + std::to_string(values));
}

/// Row sums against `lengths`, then column sums against `content`.
inline Report check_margins(const RowContentMatrix& m, std::span<const Nat> lengths,
                            std::span<const Nat> content) {
    Report rep;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Nat s = 0;
        for (const auto& x : m.row(r)) s += x;
        rep.entries_visited += m.values();
        if (s != lengths[r]) return fail(rep, Constraint::RowSum, r, 0);
    }
    for (std::size_t v = 0; v < m.values(); ++v) {
        Nat s = 0;
        for (std::size_t r = 0; r < m.rows(); ++r) s += m.at(r, v);
        rep.entries_visited += m.rows();
        if (s != content[v]) return fail(rep, Constraint::ColumnSum, 0, v);
    }
    return rep;
}

/// For the pair (upper, lower) of adjacent rows: for every k in [0, t-1],
/// count(upper, values < k+1) >= count(lower, values < k+2). The k = 0 case
/// says the lower row holds no 1.
inline bool column_strict(std::span<const Nat> upper, std::span<const Nat> lower, std::size_t& bad,
                          std::size_t& visited) {
    Nat upper_prefix = 0;
    Nat lower_prefix = 0;
    for (std::size_t k = 0; k < upper.size(); ++k) {
        lower_prefix += lower[k];
        visited += 2;
        if (lower_prefix > upper_prefix) {
            bad = k;
            return false;
        }
        upper_prefix += upper[k];
    }
    return true;
}

}  // namespace detail

/// Certificate m (rows(λ) x len(μ)) encodes a tableau of shape λ and content μ.
inline Report validate_tableau(const Partition& lambda, const Composition& mu,
                               const RowContentMatrix& m) {
    detail::require_dims(m, lambda.size(), mu.size());
    Report rep = detail::check_margins(m, lambda.parts(), mu.entries());
    if (!rep) return rep;
    for (std::size_t r = 0; r + 1 < m.rows(); ++r) {
        std::size_t bad = 0;
        if (!detail::column_strict(m.row(r), m.row(r + 1), bad, rep.entries_visited))
            return detail::fail(rep, Constraint::ColumnStrict, r + 1, bad);
    }
    return rep;
}

/// Certificate m ((v+s) x len(ν)) encodes a skew tableau of shape λ*α and content ν.
/// Column strictness is not imposed across the α/λ boundary: the blocks share no column.
inline Report validate_skew_tableau(const SkewShape& shape, const Composition& nu,
                                    const RowContentMatrix& m) {
    detail::require_dims(m, shape.rows(), nu.size());
    const auto lengths = shape.row_lengths();
    Report rep = detail::check_margins(m, lengths, nu.entries());
    if (!rep) return rep;
    for (std::size_t r = 1; r < m.rows(); ++r) {
        if (!shape.linked_to_previous(r)) continue;
        std::size_t bad = 0;
        if (!detail::column_strict(m.row(r - 1), m.row(r), bad, rep.entries_visited))
            return detail::fail(rep, Constraint::ColumnStrict, r, bad);
    }
    return rep;
}

/// Ballot inequalities on a certificate that already passed validate_skew_tableau:
/// for every row r and value j, uses of j in rows < r must be at least the uses of
/// j+1 in rows <= r. This is the right-to-left, top-to-bottom reading condition
/// evaluated where it is tightest.
inline Report validate_lr(const SkewShape& shape, const Composition& nu, const RowContentMatrix& m) {
    detail::require_dims(m, shape.rows(), nu.size());
    Report rep;
    std::vector<Nat> seen(m.values());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t j = 0; j + 1 < m.values(); ++j) {
            rep.entries_visited += 1;
            if (seen[j] < seen[j + 1] + m.at(r, j + 1)) return detail::fail(rep, Constraint::Ballot, r, j);
        }
        for (std::size_t j = 0; j < m.values(); ++j) seen[j] += m.at(r, j);
        rep.entries_visited += m.values();
    }
    return rep;
}

/// K_{λμ} > 0 iff λ dominates the non-increasing rearrangement of μ.
inline bool kostka_positive(const Partition& lambda, const Composition& mu) {
    const auto sorted = sort_to_partition(mu);
    return dominates_weakly(lambda.parts(), sorted.partition.parts());
}

}  // namespace lrkit
