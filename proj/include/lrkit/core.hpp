#pragma once

/*
 * Value types shared by every lrkit module: partitions, compositions,
 * skew shapes, compressed tableau certificates, explicit tableaux and
 * contingency tables.
 *
 * All multiplicities and parts are arbitrary precision (Nat). Explicit
 * tableaux are the only representation whose size grows with the number
 * of boxes, and they are guarded by a box budget.
 */

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lrkit {

using Nat = boost::multiprecision::cpp_int;

/// Invalid instance or operand (non-monotone partition, negative entry, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Operand dimensions disagree with each other.
class DimensionError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Explicit expansion would exceed the configured box budget.
class BudgetExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Default cap on boxes materialized by explicit tableaux.
inline constexpr std::size_t default_box_budget = std::size_t{1} << 22;

inline std::string to_string(const Nat& n) { return n.str(); }

inline std::string join(std::span<const Nat> xs, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += xs[i].str();
    }
    return out;
}

inline std::size_t to_size(const Nat& n, std::size_t budget = default_box_budget) {
    if (n < 0 || n > budget)
        throw BudgetExceeded("value " + n.str() + " exceeds explicit budget " +
                             std::to_string(budget));
    return n.convert_to<std::size_t>();
}

inline Nat weight(std::span<const Nat> xs) {
    return std::accumulate(xs.begin(), xs.end(), Nat{0});
}

/// Nonnegative integer vector. Explicit zeros are preserved.
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<Nat> xs) : Composition(std::vector<Nat>(xs)) {}
    explicit Composition(std::vector<Nat> xs) : entries_(std::move(xs)) {
        for (const auto& x : entries_)
            if (x < 0) throw DomainError("negative composition entry: " + x.str());
    }

    [[nodiscard]] std::span<const Nat> entries() const noexcept { return entries_; }
    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
    [[nodiscard]] const Nat& operator[](std::size_t i) const { return entries_[i]; }
    /// Entry i, or 0 past the end.
    [[nodiscard]] Nat at_or_zero(std::size_t i) const { return i < size() ? entries_[i] : Nat{0}; }
    [[nodiscard]] Nat weight() const { return lrkit::weight(entries_); }

    [[nodiscard]] auto begin() const noexcept { return entries_.begin(); }
    [[nodiscard]] auto end() const noexcept { return entries_.end(); }

    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<Nat> entries_;
};

/// Weakly decreasing positive parts; the empty partition is a valid value.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<Nat> xs) : Partition(std::vector<Nat>(xs)) {}
    explicit Partition(std::vector<Nat> xs) : parts_(std::move(xs)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw DomainError("partition part must be positive: " + parts_[i].str());
            if (i && parts_[i] > parts_[i - 1])
                throw DomainError("partition not weakly decreasing at part " +
                                  std::to_string(i + 1) + ": " + parts_[i].str());
        }
    }

    /// Drops zero parts, then validates monotonicity.
    static Partition strip_zeros(std::vector<Nat> xs) {
        std::erase_if(xs, [](const Nat& x) { return x == 0; });
        return Partition(std::move(xs));
    }

    [[nodiscard]] std::span<const Nat> parts() const noexcept { return parts_; }
    [[nodiscard]] std::size_t size() const noexcept { return parts_.size(); }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
    [[nodiscard]] const Nat& operator[](std::size_t i) const { return parts_[i]; }
    [[nodiscard]] Nat at_or_zero(std::size_t i) const { return i < size() ? parts_[i] : Nat{0}; }
    [[nodiscard]] Nat weight() const { return lrkit::weight(parts_); }
    [[nodiscard]] Composition as_composition() const { return Composition(parts_); }

    [[nodiscard]] auto begin() const noexcept { return parts_.begin(); }
    [[nodiscard]] auto end() const noexcept { return parts_.end(); }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<Nat> parts_;
};

inline Nat weight(const Composition& c) { return c.weight(); }
inline Nat weight(const Partition& p) { return p.weight(); }

enum class Dominance { Dominates, Dominated, Equal, Incomparable, DifferentWeight };

inline const char* to_string(Dominance d) {
    switch (d) {
        case Dominance::Dominates: return "dominates";
        case Dominance::Dominated: return "dominated";
        case Dominance::Equal: return "equal";
        case Dominance::Incomparable: return "incomparable";
        case Dominance::DifferentWeight: return "different-weight";
    }
    return "?";
}

/// Dominance order on zero-padded vectors.
inline Dominance dominance_compare(std::span<const Nat> x, std::span<const Nat> y) {
    if (weight(x) != weight(y)) return Dominance::DifferentWeight;
    const std::size_t n = std::max(x.size(), y.size());
    Nat px = 0, py = 0;
    bool x_ahead = false, y_ahead = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (i < x.size()) px += x[i];
        if (i < y.size()) py += y[i];
        if (px > py) x_ahead = true;
        if (py > px) y_ahead = true;
    }
    if (x_ahead && y_ahead) return Dominance::Incomparable;
    if (x_ahead) return Dominance::Dominates;
    if (y_ahead) return Dominance::Dominated;
    return Dominance::Equal;
}

inline Dominance dominance_compare(const Composition& x, const Composition& y) {
    return dominance_compare(x.entries(), y.entries());
}

/// x ⊵ y (weakly dominates, including equality).
inline bool dominates_weakly(std::span<const Nat> x, std::span<const Nat> y) {
    const auto d = dominance_compare(x, y);
    return d == Dominance::Dominates || d == Dominance::Equal;
}

struct SortedContent {
    Partition partition;
    /// permutation[i] is the original index of the i-th largest entry
    /// (zeros included, at the end). Ties keep their original order.
    std::vector<std::size_t> permutation;
};

inline SortedContent sort_to_partition(const Composition& c) {
    std::vector<std::size_t> perm(c.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::stable_sort(perm.begin(), perm.end(),
                     [&](std::size_t a, std::size_t b) { return c[a] > c[b]; });
    std::vector<Nat> parts;
    parts.reserve(perm.size());
    for (auto i : perm)
        if (c[i] != 0) parts.push_back(c[i]);
    return {Partition(std::move(parts)), std::move(perm)};
}

/// λ*α: the α block sits on top, shifted right by λ_1; the λ block sits below at offset 0.
/// The two blocks share no column.
class SkewShape {
public:
    SkewShape() = default;
    SkewShape(Partition lower, Partition upper)
        : lower_(std::move(lower)), upper_(std::move(upper)) {}

    [[nodiscard]] const Partition& lower_block() const noexcept { return lower_; }
    [[nodiscard]] const Partition& upper_block() const noexcept { return upper_; }

    [[nodiscard]] std::size_t rows() const noexcept { return upper_.size() + lower_.size(); }
    /// Index (0-based, top-down) of the first λ row.
    [[nodiscard]] std::size_t boundary() const noexcept { return upper_.size(); }
    [[nodiscard]] bool in_upper(std::size_t r) const noexcept { return r < upper_.size(); }

    [[nodiscard]] const Nat& row_length(std::size_t r) const {
        return in_upper(r) ? upper_[r] : lower_[r - upper_.size()];
    }
    [[nodiscard]] Nat row_offset(std::size_t r) const {
        return in_upper(r) ? lower_.at_or_zero(0) : Nat{0};
    }
    /// Whether row r is column-constrained by row r-1 (same block, r > 0).
    [[nodiscard]] bool linked_to_previous(std::size_t r) const noexcept {
        return r > 0 && r != boundary();
    }
    [[nodiscard]] std::vector<Nat> row_lengths() const {
        std::vector<Nat> out(upper_.begin(), upper_.end());
        out.insert(out.end(), lower_.begin(), lower_.end());
        return out;
    }
    [[nodiscard]] std::vector<Nat> row_offsets() const {
        std::vector<Nat> out;
        for (std::size_t r = 0; r < rows(); ++r) out.push_back(row_offset(r));
        return out;
    }
    [[nodiscard]] Nat weight() const { return lower_.weight() + upper_.weight(); }

    friend bool operator==(const SkewShape&, const SkewShape&) = default;

private:
    Partition lower_;
    Partition upper_;
};

inline SkewShape skew_concat(Partition lambda, Partition alpha) {
    return SkewShape(std::move(lambda), std::move(alpha));
}

/// Compressed certificate. counts(row, value) is the multiplicity of value+1
/// in row row+1 (both 0-based here; top row first).
class RowContentMatrix {
public:
    RowContentMatrix() = default;
    RowContentMatrix(std::size_t rows, std::size_t values)
        : rows_(rows), values_(values), counts_(rows * values) {}

    static RowContentMatrix from_rows(const std::vector<std::vector<Nat>>& rows, std::size_t values) {
        RowContentMatrix m(rows.size(), values);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != values)
                throw DimensionError("certificate row " + std::to_string(i + 1) + " has " +
                                     std::to_string(rows[i].size()) + " entries, expected " +
                                     std::to_string(values));
            for (std::size_t j = 0; j < values; ++j) {
                if (rows[i][j] < 0) throw DomainError("negative certificate entry");
                m.at(i, j) = rows[i][j];
            }
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t values() const noexcept { return values_; }

    [[nodiscard]] Nat& at(std::size_t r, std::size_t v) { return counts_[r * values_ + v]; }
    [[nodiscard]] const Nat& at(std::size_t r, std::size_t v) const { return counts_[r * values_ + v]; }

    [[nodiscard]] std::span<const Nat> row(std::size_t r) const {
        return std::span<const Nat>(counts_).subspan(r * values_, values_);
    }
    [[nodiscard]] std::span<Nat> row(std::size_t r) {
        return std::span<Nat>(counts_).subspan(r * values_, values_);
    }

    [[nodiscard]] Nat row_sum(std::size_t r) const { return weight(row(r)); }
    [[nodiscard]] Nat column_sum(std::size_t v) const {
        Nat s = 0;
        for (std::size_t r = 0; r < rows_; ++r) s += at(r, v);
        return s;
    }

    [[nodiscard]] std::vector<std::vector<Nat>> to_rows() const {
        std::vector<std::vector<Nat>> out;
        for (std::size_t r = 0; r < rows_; ++r) out.emplace_back(row(r).begin(), row(r).end());
        return out;
    }

    friend bool operator==(const RowContentMatrix&, const RowContentMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t values_ = 0;
    std::vector<Nat> counts_;
};

/// Explicit filling, one entry per box. Row r starts at column offsets[r].
struct Tableau {
    using Entry = std::size_t;
    std::vector<std::vector<Entry>> rows;
    std::vector<std::size_t> offsets;  // empty means all zero

    [[nodiscard]] std::size_t offset(std::size_t r) const { return r < offsets.size() ? offsets[r] : 0; }

    [[nodiscard]] std::size_t boxes() const {
        std::size_t n = 0;
        for (const auto& r : rows) n += r.size();
        return n;
    }

    [[nodiscard]] Partition shape() const {
        std::vector<Nat> parts;
        for (const auto& r : rows) parts.emplace_back(r.size());
        return Partition::strip_zeros(std::move(parts));
    }

    [[nodiscard]] Tableau::Entry max_entry() const {
        Entry m = 0;
        for (const auto& r : rows)
            for (auto e : r) m = std::max(m, e);
        return m;
    }

    /// Rows weakly increasing, columns strictly increasing (respecting offsets), entries ≥ 1.
    [[nodiscard]] bool is_semistandard() const {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for (std::size_t c = 0; c < rows[r].size(); ++c) {
                if (rows[r][c] < 1) return false;
                if (c && rows[r][c - 1] > rows[r][c]) return false;
                if (r == 0) continue;
                const std::size_t col = offset(r) + c;
                const std::size_t above_off = offset(r - 1);
                if (col >= above_off && col - above_off < rows[r - 1].size() &&
                    rows[r - 1][col - above_off] >= rows[r][c])
                    return false;
            }
        }
        return true;
    }

    friend bool operator==(const Tableau& a, const Tableau& b) {
        if (a.rows != b.rows) return false;
        for (std::size_t r = 0; r < a.rows.size(); ++r)
            if (a.offset(r) != b.offset(r)) return false;
        return true;
    }
};

/// Row r of the result holds counts(r, v) copies of v+1, left to right.
inline Tableau expand(const RowContentMatrix& m, std::span<const std::size_t> offsets = {},
                      std::size_t budget = default_box_budget) {
    Tableau t;
    std::size_t total = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto len = m.row_sum(r);
        if (len > budget)
            throw BudgetExceeded("row " + std::to_string(r + 1) + " holds " + len.str() +
                                 " boxes; use the compressed pipeline");
        total += len.convert_to<std::size_t>();
        if (total > budget)
            throw BudgetExceeded("certificate holds more than " + std::to_string(budget) + " boxes");
    }
    t.rows.resize(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t v = 0; v < m.values(); ++v)
            t.rows[r].insert(t.rows[r].end(), m.at(r, v).convert_to<std::size_t>(), v + 1);
    if (!offsets.empty()) t.offsets.assign(offsets.begin(), offsets.end());
    return t;
}

/// Inverse of expand. With values == 0 the alphabet is the largest entry.
inline RowContentMatrix compress(const Tableau& t, std::size_t values = 0) {
    const std::size_t alphabet = std::max(values, t.max_entry());
    RowContentMatrix m(t.rows.size(), alphabet);
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        for (auto e : t.rows[r]) {
            if (e < 1) throw DomainError("tableau entries must be positive");
            m.at(r, e - 1) += 1;
        }
    return m;
}

/// Nonnegative m x k matrix.
class ContingencyTable {
public:
    ContingencyTable() = default;
    ContingencyTable(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), cells_(rows * cols) {}

    static ContingencyTable from_rows(const std::vector<std::vector<Nat>>& rows) {
        const std::size_t cols = rows.empty() ? 0 : rows.front().size();
        ContingencyTable t(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw DimensionError("ragged contingency table");
            for (std::size_t j = 0; j < cols; ++j) {
                if (rows[i][j] < 0) throw DomainError("negative table cell");
                t.at(i, j) = rows[i][j];
            }
        }
        return t;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] Nat& at(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }
    [[nodiscard]] const Nat& at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }

    [[nodiscard]] Composition row_sums() const {
        std::vector<Nat> s(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) s[i] += at(i, j);
        return Composition(std::move(s));
    }
    [[nodiscard]] Composition col_sums() const {
        std::vector<Nat> s(cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) s[j] += at(i, j);
        return Composition(std::move(s));
    }
    [[nodiscard]] Nat total() const {
        return std::accumulate(cells_.begin(), cells_.end(), Nat{0});
    }
    [[nodiscard]] std::vector<std::vector<Nat>> to_rows() const {
        std::vector<std::vector<Nat>> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(at(i, j));
        return out;
    }

    friend bool operator==(const ContingencyTable&, const ContingencyTable&) = default;
    friend bool operator<(const ContingencyTable& a, const ContingencyTable& b) {
        if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
        if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
        return a.cells_ < b.cells_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Nat> cells_;
};

}  // namespace lrkit
