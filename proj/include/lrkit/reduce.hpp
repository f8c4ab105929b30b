#pragma once

/*
 * The two counting reductions as instance maps, with explicit witness
 * bijections and their inverses.
 *
 *   tables -> Kostka:  a = (a1, a2), b  |->  λ = (a1+a2, a2), μ = b ++ (a2)
 *                      witness: RSK, drop the (forced) recording tableau,
 *                      pad the insertion tableau to λ with the value k+1.
 *
 *   Kostka -> LR:      λ, μ (length l)  |->  α_i = μ_{i+1} + ... + μ_l  (i < l),
 *                      ν_i = α_i + μ_i, ν_l = μ_l
 *                      witness: fill α row i with i, keep T as the λ block.
 */

#include <cstddef>
#include <stdexcept>
#include <string>

#include "core.hpp"
#include "rsk.hpp"
#include "verify.hpp"

namespace lrkit {

/// A map or inverse was fed something that contradicts a proved structural claim.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct KostkaInstance {
    Partition shape;
    Composition content;
    friend bool operator==(const KostkaInstance&, const KostkaInstance&) = default;
};

struct LrInstance {
    Partition shape;  // λ
    Partition alpha;
    Composition content;  // ν
    friend bool operator==(const LrInstance&, const LrInstance&) = default;
};

namespace detail {

inline void require_two_rows_sorted(const Composition& a) {
    if (a.size() != 2)
        throw DomainError("row margins must have exactly 2 entries, got " + std::to_string(a.size()));
    if (a[0] < a[1])
        throw DomainError("row margins must satisfy a1 >= a2 (got " + a[0].str() + " < " + a[1].str() +
                          "); swap the table rows first");
}

}  // namespace detail

inline KostkaInstance lemma1_instance(const Composition& a, const Composition& b) {
    detail::require_two_rows_sorted(a);
    std::vector<Nat> mu(b.begin(), b.end());
    mu.push_back(a[1]);
    return {Partition::strip_zeros({a[0] + a[1], a[1]}), Composition(std::move(mu))};
}

/// The only tableau of shape `shape` (at most 2 rows) and content (a1, a2):
/// the first a1 boxes of the top row hold 1, all others hold 2.
inline Tableau unique_two_row_tableau(const Partition& shape, const Composition& a,
                                      std::size_t budget = default_box_budget) {
    detail::require_two_rows_sorted(a);
    if (shape.size() > 2) throw DomainError("shape has more than 2 rows");
    if (!dominates_weakly(shape.parts(), a.entries()))
        throw DomainError("shape " + join(shape.parts()) + " does not dominate content " + join(a.entries()) +
                          "; no tableau exists");
    Tableau t;
    const auto top = to_size(shape.at_or_zero(0), budget);
    const auto ones = to_size(a[0], budget);
    if (top > 0) {
        t.rows.emplace_back(ones, 1);
        t.rows.back().resize(top, 2);
    }
    if (shape.size() == 2) t.rows.emplace_back(to_size(shape[1], budget), 2);
    return t;
}

/// Table (2 x k, a1 >= a2) -> certificate in T(λ, μ) of lemma1_instance(a, b).
inline RowContentMatrix lemma1_forward(const ContingencyTable& table, std::size_t budget = default_box_budget) {
    if (table.rows() != 2) throw DomainError("lemma-1 map needs a table with 2 rows");
    const auto a = table.row_sums();
    const auto b = table.col_sums();
    const auto inst = lemma1_instance(a, b);
    const std::size_t k = table.cols();

    const auto pair = rsk_forward(table, budget);
    RowContentMatrix p = compress(pair.insertion, k);
    RowContentMatrix m(inst.shape.size(), k + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Nat len = 0;
        if (r < p.rows())
            for (std::size_t v = 0; v < k; ++v) {
                m.at(r, v) = p.at(r, v);
                len += p.at(r, v);
            }
        m.at(r, k) = inst.shape[r] - len;
        if (m.at(r, k) < 0) throw InvariantViolation("insertion shape does not fit inside the target shape");
    }
    return m;
}

/// Inverse of lemma1_forward: delete the k+1 boxes, rebuild the forced
/// recording tableau, and run RSK backwards.
inline ContingencyTable lemma1_inverse(const RowContentMatrix& m, const Composition& a, const Composition& b,
                                       std::size_t budget = default_box_budget) {
    const auto inst = lemma1_instance(a, b);
    if (const auto rep = validate_tableau(inst.shape, inst.content, m); !rep)
        throw DomainError("not a certificate of the lemma-1 instance: " + rep.describe());
    const std::size_t k = b.size();

    RowContentMatrix p(m.rows(), k);
    std::vector<Nat> inner;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t v = 0; v < k; ++v) p.at(r, v) = m.at(r, v);
        inner.push_back(p.row_sum(r));
    }
    const auto inner_shape = Partition::strip_zeros(inner);
    while (p.rows() > inner_shape.size()) {
        RowContentMatrix trimmed(p.rows() - 1, k);
        for (std::size_t r = 0; r < trimmed.rows(); ++r)
            for (std::size_t v = 0; v < k; ++v) trimmed.at(r, v) = p.at(r, v);
        p = std::move(trimmed);
    }

    TableauPair pair;
    pair.insertion = expand(p, {}, budget);
    pair.recording = unique_two_row_tableau(inner_shape, a, budget);
    pair.shape = inner_shape;
    pair.table_rows = 2;
    pair.table_cols = k;
    return rsk_inverse(pair);
}

inline LrInstance lemma2_instance(const Partition& lambda, const Composition& mu) {
    if (mu.empty()) throw DomainError("content must have at least one entry");
    const std::size_t l = mu.size();
    std::vector<Nat> alpha(l - 1);
    std::vector<Nat> nu(l);
    Nat suffix = 0;
    for (std::size_t i = l; i-- > 0;) {
        if (i + 1 < l) alpha[i] = suffix;
        suffix += mu[i];
    }
    for (std::size_t i = 0; i + 1 < l; ++i) nu[i] = alpha[i] + mu[i];
    nu[l - 1] = mu[l - 1];
    return {lambda, Partition::strip_zeros(std::move(alpha)), Composition(std::move(nu))};
}

/// T in T(λ, μ) -> S in LRT(λ*α, ν): α row i is all i, λ block is T.
inline RowContentMatrix lemma2_forward(const Partition& lambda, const Composition& mu, const RowContentMatrix& t) {
    if (const auto rep = validate_tableau(lambda, mu, t); !rep)
        throw DomainError("not a tableau of the given shape and content: " + rep.describe());
    const auto inst = lemma2_instance(lambda, mu);
    const std::size_t v = inst.alpha.size();
    RowContentMatrix s(v + lambda.size(), mu.size());
    for (std::size_t i = 0; i < v; ++i) s.at(i, i) = inst.alpha[i];
    for (std::size_t r = 0; r < t.rows(); ++r)
        for (std::size_t j = 0; j < t.values(); ++j) s.at(v + r, j) = t.at(r, j);
    return s;
}

/// S in LRT(λ*α, ν) -> its λ block. Throws InvariantViolation if an α row is
/// not of the forced form.
inline RowContentMatrix lemma2_inverse(const Partition& lambda, const Composition& mu, const RowContentMatrix& s) {
    const auto inst = lemma2_instance(lambda, mu);
    const auto shape = skew_concat(inst.shape, inst.alpha);
    if (const auto rep = validate_skew_tableau(shape, inst.content, s); !rep)
        throw DomainError("not a skew tableau of the lemma-2 instance: " + rep.describe());
    if (const auto rep = validate_lr(shape, inst.content, s); !rep)
        throw DomainError("not an LR tableau: " + rep.describe());
    const std::size_t v = inst.alpha.size();
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = 0; j < s.values(); ++j)
            if (s.at(i, j) != (i == j ? inst.alpha[i] : Nat{0}))
                throw InvariantViolation("alpha row " + std::to_string(i + 1) + " is not filled with " +
                                         std::to_string(i + 1));
    RowContentMatrix t(lambda.size(), mu.size());
    for (std::size_t r = 0; r < t.rows(); ++r)
        for (std::size_t j = 0; j < t.values(); ++j) t.at(r, j) = s.at(v + r, j);
    return t;
}

}  // namespace lrkit
