#pragma once

#include "onsager/arith/gaussian.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace onsager::structure {

using arith::GR;

// Dense row-major matrix over Q(i).
using Row = std::vector<GR>;
using Matrix = std::vector<Row>;

// In-place reduced row echelon form. Pivots are taken in the first column
// holding a nonzero entry among the remaining rows, rows scanned top-down.
// Returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
// Basis of {v : m v = 0}, one vector per free column (free entry set to 1).
std::vector<Row> nullspace(Matrix m, std::size_t columns);

// Sparse vectors keyed by an ordered coordinate label, with an incremental
// row-echelon basis. Used where the ambient dimension is not known in
// advance.
template <typename Key>
class Echelon {
public:
    using Vec = std::map<Key, GR>;

    // Residual of v modulo the current span (zero iff v is in the span).
    Vec reduce(Vec v) const {
        auto it = v.begin();
        while (it != v.end()) {
            auto piv = rows_.find(it->first);
            if (piv == rows_.end()) {
                ++it;
                continue;
            }
            const GR factor = it->second;
            const Key key = it->first;
            for (const auto& [k, c] : piv->second) {
                GR& slot = v[k];
                slot -= factor * c;
            }
            // Drop cancelled entries; every key touched is >= `key`.
            for (auto j = v.lower_bound(key); j != v.end();) {
                if (j->second.is_zero()) {
                    j = v.erase(j);
                } else {
                    ++j;
                }
            }
            it = v.upper_bound(key);
        }
        return v;
    }

    // Adds v to the span; returns the (normalized) residual when v was
    // independent, or an empty vector when it was already in the span.
    Vec insert(const Vec& v) {
        Vec r = reduce(v);
        if (r.empty()) return r;
        const GR inv = r.begin()->second.inverse();
        for (auto& [k, c] : r) c *= inv;
        rows_.emplace(r.begin()->first, r);
        return r;
    }

    std::size_t dimension() const { return rows_.size(); }
    const std::map<Key, Vec>& rows() const { return rows_; }

private:
    std::map<Key, Vec> rows_;  // leading key -> row with leading coefficient 1
};

}  // namespace onsager::structure
