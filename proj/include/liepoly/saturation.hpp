#pragma once

#include "liepoly/echelon.hpp"

#include <deque>
#include <span>
#include <vector>

namespace liepoly {

/// Worklist saturation of span(generators) under a bilinear bracket.
///
/// Every vector that enlarges the span is queued once and bracketed against
/// all rows present when it is dequeued. Rows only ever change by adding
/// multiples of vectors that are themselves queued, so each pair of inserted
/// vectors is covered by bilinearity. `pair_ok(u, v)` prunes pairs before the
/// bracket is computed; `keep(w)` drops results after.
template <EchelonVector V, class Bracket, class PairOk, class Keep>
EchelonBasis<V> saturate(std::span<const V> generators, unsigned degree_cap, Bracket&& bracket, PairOk&& pair_ok,
                         Keep&& keep) {
    EchelonBasis<V> basis(degree_cap);
    std::deque<V> pending;
    for (const V& g : generators) {
        if (auto row = basis.insert(g)) pending.push_back(std::move(*row));
    }
    while (!pending.empty()) {
        const V v = std::move(pending.front());
        pending.pop_front();
        for (const auto& key : basis.pivots()) {
            const V& row = basis.rows().at(key);
            if (!pair_ok(v, row)) continue;
            V w = bracket(v, row);
            if (w.is_zero() || !keep(w)) continue;
            if (auto added = basis.insert(w)) pending.push_back(std::move(*added));
        }
    }
    return basis;
}

}  // namespace liepoly
