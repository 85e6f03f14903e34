#pragma once

#include "qsb/scalar.hpp"

#include <map>

namespace qsb {

// Incremental sparse row echelon form over a field K; each stored row has
// leading coefficient 1 at its smallest column.
template <class K>
struct BasicEchelon {
    using SRow = std::map<int, K>;
    std::map<int, SRow> piv;

    // Returns true when the row was independent of the stored ones.
    bool add(SRow r) {
        while (!r.empty()) {
            auto [c, v] = *r.begin();
            auto it = piv.find(c);
            if (it == piv.end()) {
                K inv = v.inv();
                for (auto& [k, x] : r) x *= inv;
                piv.emplace(c, std::move(r));
                return true;
            }
            for (const auto& [k, x] : it->second) {
                K& y = r[k];
                y -= v * x;
                if (y.is_zero()) r.erase(k);
            }
        }
        return false;
    }
    int rank() const { return int(piv.size()); }
};

using Echelon = BasicEchelon<Scalar>;
using SRow = Echelon::SRow;

}  // namespace qsb
