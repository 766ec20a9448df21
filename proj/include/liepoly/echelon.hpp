#pragma once

#include "liepoly/rational.hpp"

#include <concepts>
#include <map>
#include <optional>
#include <vector>

namespace liepoly {

/// A sparse vector over Rat whose coordinates are totally ordered, largest
/// first. The leading key is the pivot candidate.
template <class V>
concept EchelonVector = std::copyable<V> && requires(V v, const V& cv, const Rat& c, const typename V::key_type& k) {
    typename V::key_compare;
    { cv.is_zero() } -> std::convertible_to<bool>;
    { cv.leading_key() } -> std::convertible_to<typename V::key_type>;
    { cv.coefficient(k) } -> std::convertible_to<Rat>;
    { cv.degree() } -> std::convertible_to<int>;
    v.add_scaled(cv, c);
    v.scale(c);
    cv.for_each_key([](const typename V::key_type&) {});
};

/// Reduced row echelon basis of a finite-dimensional subspace. Every stored
/// element has pivot coefficient 1 and no element contains another element's
/// pivot key.
template <EchelonVector V>
class EchelonBasis {
public:
    using Key = typename V::key_type;
    using Rows = std::map<Key, V, typename V::key_compare>;

    explicit EchelonBasis(unsigned degree_cap) : degree_cap_(degree_cap) {}

    [[nodiscard]] unsigned degree_cap() const { return degree_cap_; }
    [[nodiscard]] std::size_t size() const { return rows_.size(); }
    [[nodiscard]] bool empty() const { return rows_.empty(); }
    /// Pivot key -> element, largest pivot first.
    [[nodiscard]] const Rows& rows() const { return rows_; }

    [[nodiscard]] bool has_pivot(const Key& k) const { return rows_.contains(k); }

    [[nodiscard]] std::vector<Key> pivots() const {
        std::vector<Key> out;
        out.reserve(rows_.size());
        for (const auto& [k, row] : rows_) out.push_back(k);
        return out;
    }

    /// Remainder of v after eliminating every pivot coordinate.
    [[nodiscard]] V reduce(V v) const {
        std::vector<Key> hits;
        v.for_each_key([&](const Key& k) {
            if (rows_.contains(k)) hits.push_back(k);
        });
        // Rows carry no foreign pivots, so one pass clears every hit.
        for (const Key& k : hits) {
            const Rat c = v.coefficient(k);
            v.add_scaled(rows_.at(k), -c);
        }
        return v;
    }

    [[nodiscard]] bool contains(const V& v) const { return reduce(v).is_zero(); }

    /// Adds v to the span. Returns the new normalized row when the span grew.
    std::optional<V> insert(const V& v) {
        V r = reduce(v);
        if (r.is_zero()) return std::nullopt;
        const Key pivot = r.leading_key();
        const Rat lead = r.coefficient(pivot);
        r.scale(Rat(1) / lead);
        // Only rows with a larger pivot can mention the new one.
        const auto cmp = rows_.key_comp();
        for (auto it = rows_.begin(); it != rows_.end() && cmp(it->first, pivot); ++it) {
            const Rat c = it->second.coefficient(pivot);
            if (c != 0) it->second.add_scaled(r, -c);
        }
        rows_.emplace(pivot, r);
        return r;
    }

private:
    unsigned degree_cap_;
    Rows rows_;
};

}  // namespace liepoly
