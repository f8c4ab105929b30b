#pragma once

/*
 * Exact counting and bounded enumeration.
 *
 * Tableau and LR counts run a row-by-row search over row-content matrices.
 * A row is a vector of value counts; the admissible rows are exactly those
 * satisfying the constraints checked by verify.hpp:
 *   - row length and remaining content budget,
 *   - column strictness against the previous row of the same block
 *     (prefix through value j+1 bounded by previous prefix through j),
 *   - for LR, the ballot bound: uses of j+1 through this row never exceed
 *     uses of j strictly before it.
 * The DP memoizes on (row, content used so far, previous row when the next
 * row is linked to it). Enumeration walks the same tree without memo, so
 * both count the solutions of the same inequality system.
 *
 * Enumeration order is lexicographic on the row-major flattening of the
 * matrix, smallest first.
 */

#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <vector>

#include "core.hpp"

namespace lrkit {

enum class Method { DynamicProgramming, Enumeration };

template <class T>
struct Enumeration {
    std::vector<T> items;
    /// True when at least one further item exists past `limit`.
    bool truncated = false;
};

inline constexpr std::size_t no_limit = std::numeric_limits<std::size_t>::max();

namespace detail {

struct RowSystem {
    std::vector<Nat> lengths;
    std::vector<bool> linked;  // linked[r]: row r is column-constrained by row r-1
    std::vector<Nat> content;
    bool ballot = false;

    [[nodiscard]] std::size_t rows() const { return lengths.size(); }
    [[nodiscard]] std::size_t values() const { return content.size(); }
};

inline RowSystem kostka_system(const Partition& lambda, const Composition& mu) {
    RowSystem s;
    s.lengths.assign(lambda.begin(), lambda.end());
    s.linked.resize(s.lengths.size());
    for (std::size_t r = 1; r < s.linked.size(); ++r) s.linked[r] = true;
    s.content.assign(mu.begin(), mu.end());
    return s;
}

inline RowSystem lr_system(const SkewShape& shape, const Composition& nu) {
    RowSystem s;
    s.lengths = shape.row_lengths();
    s.linked.resize(s.lengths.size());
    for (std::size_t r = 0; r < s.linked.size(); ++r) s.linked[r] = shape.linked_to_previous(r);
    s.content.assign(nu.begin(), nu.end());
    s.ballot = true;
    return s;
}

/// Calls emit(row) for every admissible row r in ascending lexicographic order;
/// stops early when emit returns false. Returns false iff stopped early.
class RowGenerator {
public:
    RowGenerator(const RowSystem& sys, std::size_t r, const std::vector<Nat>& used,
                 const std::vector<Nat>* prev)
        : sys_(sys), length_(sys.lengths[r]), used_(used), row_(sys.values()) {
        const std::size_t t = sys.values();
        remaining_.resize(t);
        suffix_cap_.assign(t + 1, Nat{0});
        for (std::size_t j = 0; j < t; ++j) remaining_[j] = sys.content[j] - used[j];
        for (std::size_t j = t; j-- > 0;) suffix_cap_[j] = suffix_cap_[j + 1] + remaining_[j];
        if (sys.linked[r] && prev) {
            prev_prefix_.assign(t, Nat{0});
            for (std::size_t j = 1; j < t; ++j) prev_prefix_[j] = prev_prefix_[j - 1] + (*prev)[j - 1];
        }
    }

    template <class Emit>
    bool run(Emit&& emit) {
        if (sys_.values() == 0) return length_ == 0 ? emit(row_) : true;
        return step(0, Nat{0}, emit);
    }

private:
    template <class Emit>
    bool step(std::size_t j, const Nat& prefix, Emit& emit) {
        const std::size_t t = sys_.values();
        Nat hi = std::min(remaining_[j], Nat(length_ - prefix));
        if (!prev_prefix_.empty()) {
            if (prev_prefix_[j] < prefix) return true;
            hi = std::min(hi, Nat(prev_prefix_[j] - prefix));
        }
        if (sys_.ballot && j > 0) {
            const Nat slack = used_[j - 1] - used_[j];
            if (slack < 0) return true;
            hi = std::min(hi, slack);
        }
        Nat lo = length_ - prefix - suffix_cap_[j + 1];
        if (lo < 0) lo = 0;
        if (j + 1 == t) {
            const Nat need = length_ - prefix;
            if (need < lo || need > hi) return true;
            row_[j] = need;
            return emit(row_);
        }
        for (Nat c = lo; c <= hi; ++c) {
            row_[j] = c;
            if (!step(j + 1, prefix + c, emit)) return false;
        }
        row_[j] = 0;
        return true;
    }

    const RowSystem& sys_;
    Nat length_;
    const std::vector<Nat>& used_;
    std::vector<Nat> row_;
    std::vector<Nat> remaining_;
    std::vector<Nat> suffix_cap_;
    std::vector<Nat> prev_prefix_;
};

class RowCounter {
public:
    explicit RowCounter(const RowSystem& sys) : sys_(sys), memo_(sys.rows()) {}

    Nat count() {
        if (weight(sys_.lengths) != weight(sys_.content)) return 0;
        std::vector<Nat> used(sys_.values());
        return count_from(0, used, nullptr);
    }

private:
    Nat count_from(std::size_t r, const std::vector<Nat>& used, const std::vector<Nat>* prev) {
        if (r == sys_.rows()) return used == sys_.content ? 1 : 0;
        std::vector<Nat> key = used;
        if (sys_.linked[r] && prev) key.insert(key.end(), prev->begin(), prev->end());
        if (auto it = memo_[r].find(key); it != memo_[r].end()) return it->second;

        Nat total = 0;
        std::vector<Nat> next(used.size());
        RowGenerator gen(sys_, r, used, prev);
        gen.run([&](const std::vector<Nat>& row) {
            for (std::size_t j = 0; j < row.size(); ++j) next[j] = used[j] + row[j];
            total += count_from(r + 1, next, &row);
            return true;
        });
        memo_[r].emplace(std::move(key), total);
        return total;
    }

    const RowSystem& sys_;
    std::vector<std::map<std::vector<Nat>, Nat>> memo_;
};

/// Visits every solution matrix; visit returns false to stop.
template <class Visit>
void for_each_solution(const RowSystem& sys, Visit&& visit) {
    if (weight(sys.lengths) != weight(sys.content)) return;
    RowContentMatrix m(sys.rows(), sys.values());
    std::function<bool(std::size_t, const std::vector<Nat>&, const std::vector<Nat>*)> go =
        [&](std::size_t r, const std::vector<Nat>& used, const std::vector<Nat>* prev) -> bool {
        if (r == sys.rows()) return used == sys.content ? visit(static_cast<const RowContentMatrix&>(m)) : true;
        RowGenerator gen(sys, r, used, prev);
        return gen.run([&](const std::vector<Nat>& row) {
            std::vector<Nat> next(used.size());
            for (std::size_t j = 0; j < row.size(); ++j) {
                next[j] = used[j] + row[j];
                m.at(r, j) = row[j];
            }
            return go(r + 1, next, &row);
        });
    };
    go(0, std::vector<Nat>(sys.values()), nullptr);
}

template <class T, class Producer>
Enumeration<T> collect(std::size_t limit, Producer&& produce) {
    Enumeration<T> out;
    produce([&](const T& item) {
        if (out.items.size() == limit) {
            out.truncated = true;
            return false;
        }
        out.items.push_back(item);
        return true;
    });
    return out;
}

inline Nat count_by_enumeration(const RowSystem& sys) {
    Nat n = 0;
    for_each_solution(sys, [&](const RowContentMatrix&) {
        ++n;
        return true;
    });
    return n;
}

}  // namespace detail

/// K_{λμ} = |T(λ, μ)|.
inline Nat count_kostka(const Partition& lambda, const Composition& mu,
                        Method method = Method::DynamicProgramming) {
    const auto sys = detail::kostka_system(lambda, mu);
    if (method == Method::Enumeration) return detail::count_by_enumeration(sys);
    return detail::RowCounter(sys).count();
}

/// c^ν_{λα} = |LRT(λ*α, ν)|.
inline Nat count_lr(const Partition& lambda, const Partition& alpha, const Composition& nu,
                    Method method = Method::DynamicProgramming) {
    const auto sys = detail::lr_system(skew_concat(lambda, alpha), nu);
    if (method == Method::Enumeration) return detail::count_by_enumeration(sys);
    return detail::RowCounter(sys).count();
}

template <class Visit>
void for_each_tableau(const Partition& lambda, const Composition& mu, Visit&& visit) {
    detail::for_each_solution(detail::kostka_system(lambda, mu), std::forward<Visit>(visit));
}

template <class Visit>
void for_each_lr(const Partition& lambda, const Partition& alpha, const Composition& nu, Visit&& visit) {
    detail::for_each_solution(detail::lr_system(skew_concat(lambda, alpha), nu),
                              std::forward<Visit>(visit));
}

inline Enumeration<RowContentMatrix> enumerate_tableaux(const Partition& lambda, const Composition& mu,
                                                        std::size_t limit = no_limit) {
    return detail::collect<RowContentMatrix>(limit, [&](auto&& sink) { for_each_tableau(lambda, mu, sink); });
}

inline Enumeration<RowContentMatrix> enumerate_lr(const Partition& lambda, const Partition& alpha,
                                                  const Composition& nu, std::size_t limit = no_limit) {
    return detail::collect<RowContentMatrix>(limit,
                                             [&](auto&& sink) { for_each_lr(lambda, alpha, nu, sink); });
}

// Contingency tables ---------------------------------------------------------

namespace detail {

class TableCounter {
public:
    explicit TableCounter(const Composition& b) : b_(b), memo_(b.size()) {}

    Nat count(const std::vector<Nat>& residual, std::size_t col) {
        if (col == b_.size()) {
            for (const auto& x : residual)
                if (x != 0) return 0;
            return 1;
        }
        // Two columns left: the last one is forced, so only bounded compositions of b_[col] remain.
        if (col + 2 == b_.size() && residual.size() <= 20) return bounded_compositions(residual, b_[col]);
        if (auto it = memo_[col].find(residual); it != memo_[col].end()) return it->second;
        Nat total = 0;
        std::vector<Nat> next = residual;
        distribute(residual, next, 0, b_[col], col, total);
        memo_[col].emplace(residual, total);
        return total;
    }

private:
    static Nat binomial(const Nat& n, std::size_t k) {
        Nat r = 1;
        for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
        return r;
    }

    // #{x : 0 <= x_i <= cap_i, sum x = total}, by inclusion-exclusion over the violated caps.
    static Nat bounded_compositions(const std::vector<Nat>& cap, const Nat& total) {
        const std::size_t m = cap.size();
        Nat plus = 0, minus = 0;
        for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
            Nat cut = 0;
            int bits = 0;
            for (std::size_t i = 0; i < m; ++i)
                if (mask >> i & 1) {
                    cut += cap[i] + 1;
                    ++bits;
                }
            if (cut > total) continue;
            const Nat c = binomial(total - cut + m - 1, m - 1);
            (bits % 2 ? minus : plus) += c;
        }
        return plus - minus;
    }

    void distribute(const std::vector<Nat>& residual, std::vector<Nat>& next, std::size_t i, const Nat& left,
                    std::size_t col, Nat& total) {
        if (i + 1 == residual.size()) {
            if (left > residual[i]) return;
            next[i] = residual[i] - left;
            total += count(next, col + 1);
            next[i] = residual[i];
            return;
        }
        const Nat hi = std::min(left, residual[i]);
        for (Nat x = 0; x <= hi; ++x) {
            next[i] = residual[i] - x;
            distribute(residual, next, i + 1, left - x, col, total);
        }
        next[i] = residual[i];
    }

    const Composition& b_;
    std::vector<std::map<std::vector<Nat>, Nat>> memo_;
};

}  // namespace detail

/// |I(a, b)|: nonnegative integer matrices with row sums a and column sums b.
inline Nat count_tables(const Composition& a, const Composition& b) {
    if (a.weight() != b.weight()) return 0;
    if (a.empty() || b.empty()) return 1;  // the 0 x k or m x 0 matrix, all margins zero
    detail::TableCounter counter(b);
    return counter.count(std::vector<Nat>(a.begin(), a.end()), 0);
}

/// Row-major lexicographic order, smallest first.
template <class Visit>
void for_each_table(const Composition& a, const Composition& b, Visit&& visit) {
    if (a.weight() != b.weight()) return;
    const std::size_t m = a.size(), k = b.size();
    ContingencyTable t(m, k);
    if (m == 0 || k == 0) {
        visit(static_cast<const ContingencyTable&>(t));
        return;
    }
    std::vector<Nat> col_left(b.begin(), b.end());
    std::function<bool(std::size_t, std::size_t, Nat, Nat)> fill = [&](std::size_t i, std::size_t j, Nat row_left,
                                                                     Nat cap_after) -> bool {
        if (i == m) return visit(static_cast<const ContingencyTable&>(t));
        if (j + 1 == k) {
            if (row_left > col_left[j]) return true;
            t.at(i, j) = row_left;
            col_left[j] -= row_left;
            bool go_on = true;
            if (i + 1 == m) {
                go_on = visit(static_cast<const ContingencyTable&>(t));
            } else {
                Nat cap = weight(col_left) - col_left[0];
                go_on = fill(i + 1, 0, a[i + 1], cap);
            }
            col_left[j] += row_left;
            return go_on;
        }
        // cap_after = sum of col_left over columns > j
        Nat lo = row_left - cap_after;
        if (lo < 0) lo = 0;
        const Nat hi = std::min(row_left, col_left[j]);
        for (Nat x = lo; x <= hi; ++x) {
            t.at(i, j) = x;
            col_left[j] -= x;
            const bool go_on = fill(i, j + 1, row_left - x, cap_after - col_left[j + 1]);
            col_left[j] += x;
            if (!go_on) return false;
        }
        return true;
    };
    fill(0, 0, a[0], weight(col_left) - col_left[0]);
}

inline Enumeration<ContingencyTable> enumerate_tables(const Composition& a, const Composition& b,
                                                      std::size_t limit = no_limit) {
    return detail::collect<ContingencyTable>(limit, [&](auto&& sink) { for_each_table(a, b, sink); });
}

}  // namespace lrkit
