#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "ulsph/errors.hpp"
#include "ulsph/math.hpp"

namespace ulsph {

// Frozen adjacency for one advection step, CSR layout with rows sorted by
// neighbor index so floating-point accumulation order is deterministic.
// Pair geometry (r, e, dW/dr) is cached at build time; e[k] is the unit vector
// pointing from neighbor j toward the row owner i.
template <int D>
struct NeighborTable {
    std::vector<int> offset;  // size N+1
    std::vector<int> index;
    std::vector<double> r;
    std::vector<Vec<D>> e;
    std::vector<double> dwdr;
    double cutoff = 0.0;

    int size() const { return static_cast<int>(offset.size()) - 1; }
    int pair_count() const { return static_cast<int>(index.size()); }

    int begin(int i) const { return offset[i]; }
    int end(int i) const { return offset[i + 1]; }
};

// Current-position pair geometry. The tight distance threshold doubles as the
// crash signature of a collapsing (tensile-unstable) configuration.
template <int D>
inline void pair_geometry(int i, int j, const Vec<D>* pos, double dp, double& r_out,
                          Vec<D>& e_out) {
    Vec<D> d = pos[i] - pos[j];
    double r = norm(d);
    if (r < 1e-9 * dp)
        throw SimulationError("coincident particles " + std::to_string(i) + " and " +
                                  std::to_string(j),
                              i);
    r_out = r;
    e_out = d / r;
}

namespace detail {

inline std::int64_t pack_cell_key(const std::array<std::int32_t, 3>& c) {
    // 21 bits per axis, biased; domains here span far fewer cells.
    return (static_cast<std::int64_t>(c[0] & 0x1FFFFF) << 42) |
           (static_cast<std::int64_t>(c[1] & 0x1FFFFF) << 21) |
           static_cast<std::int64_t>(c[2] & 0x1FFFFF);
}

template <int D>
inline std::array<std::int32_t, 3> cell_of(const Vec<D>& p, double inv_cell) {
    std::array<std::int32_t, 3> c{0, 0, 0};
    for (int k = 0; k < D; ++k)
        c[k] = static_cast<std::int32_t>(std::floor(p[k] * inv_cell)) + 0x40000;
    return c;
}

}  // namespace detail

template <int D, class KernelT>
NeighborTable<D> build_neighbor_table(const std::vector<Vec<D>>& pos, const KernelT& kernel) {
    const int n = static_cast<int>(pos.size());
    const double cutoff = kernel.cutoff();
    const double cutoff2 = cutoff * cutoff;
    const double inv_cell = 1.0 / cutoff;
    const double coincident_tol = 1e-9 * (cutoff / 2.6);  // cutoff = 2.6 dp

    for (int i = 0; i < n; ++i)
        if (!finite(pos[i]))
            throw SimulationError("non-finite position for particle " + std::to_string(i), i);

    // Cell-sorted index: particles ordered by (cell key, index), cells located
    // by binary search. One ring of cells covers the cutoff exactly.
    std::vector<std::int64_t> key(n);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) {
        key[i] = detail::pack_cell_key(detail::cell_of(pos[i], inv_cell));
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return key[a] != key[b] ? key[a] < key[b] : a < b;
    });
    std::vector<std::int64_t> sorted_key(n);
    for (int k = 0; k < n; ++k) sorted_key[k] = key[order[k]];

    NeighborTable<D> table;
    table.cutoff = cutoff;
    table.offset.assign(n + 1, 0);

    const int rings = D == 2 ? 9 : 27;
    auto for_candidates = [&](int i, auto&& fn) {
        auto base = detail::cell_of(pos[i], inv_cell);
        for (int ring = 0; ring < rings; ++ring) {
            auto c = base;
            c[0] += ring % 3 - 1;
            c[1] += (ring / 3) % 3 - 1;
            if constexpr (D == 3) c[2] += ring / 9 - 1;
            std::int64_t k = detail::pack_cell_key(c);
            auto lo = std::lower_bound(sorted_key.begin(), sorted_key.end(), k);
            auto hi = std::upper_bound(lo, sorted_key.end(), k);
            for (auto it = lo; it != hi; ++it) {
                int j = order[it - sorted_key.begin()];
                if (j == i) continue;
                double r2 = norm2(pos[i] - pos[j]);
                if (r2 < cutoff2) fn(j);
            }
        }
    };

#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        int count = 0;
        for_candidates(i, [&](int) { ++count; });
        table.offset[i + 1] = count;
    }
    for (int i = 0; i < n; ++i) table.offset[i + 1] += table.offset[i];

    const int pairs = table.offset[n];
    table.index.resize(pairs);
    table.r.resize(pairs);
    table.e.resize(pairs);
    table.dwdr.resize(pairs);

    int coincident_row = -1;
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        int k = table.offset[i];
        for_candidates(i, [&](int j) { table.index[k++] = j; });
        std::sort(table.index.begin() + table.offset[i], table.index.begin() + k);
        for (int m = table.offset[i]; m < k; ++m) {
            int j = table.index[m];
            Vec<D> d = pos[i] - pos[j];
            double r = norm(d);
            if (r < coincident_tol) {
#pragma omp critical
                coincident_row = coincident_row < 0 ? m : std::min(coincident_row, m);
                r = coincident_tol;  // placeholder, run aborts below
            }
            table.r[m] = r;
            table.e[m] = d / r;
            table.dwdr[m] = kernel.dw_dr(r);
        }
    }
    if (coincident_row >= 0) {
        int j = table.index[coincident_row];
        int i = static_cast<int>(std::upper_bound(table.offset.begin(), table.offset.end(),
                                                  coincident_row) -
                                 table.offset.begin()) -
                1;
        throw SimulationError(
            "coincident particles " + std::to_string(i) + " and " + std::to_string(j), i);
    }
    return table;
}

}  // namespace ulsph
