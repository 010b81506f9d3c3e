#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <hhodge/errors.hpp>

namespace hhodge {

enum class RootSystem { D4, E6 };

// Simply-laced root system data in simple-root coordinates, with the
// McKay-correspondence node labels: white nodes carry the nontrivial
// irreducible representations of the SO(3) quotient group, black nodes the
// representations that do not descend.
//
// D4: center node 0 adjacent to outer nodes 1,2,3; the outer nodes are
// white. E6: chain 0-1-2-3-4 with node 5 attached to node 2; the chain ends
// and chain middle (0, 2, 4) are white. irrep_of_white maps each white node
// to a nontrivial-irrep index (1-based within the group's irrep list).
struct RootSystemData {
    RootSystem type;
    int nnodes = 0;
    std::vector<std::vector<int>> cartan;
    std::vector<std::vector<int>> positive_roots;
    std::vector<int> white_nodes;
    std::vector<int> irrep_of_white;

    bool is_positive_root(const std::vector<int>& alpha) const {
        return std::find(positive_roots.begin(), positive_roots.end(), alpha) !=
               positive_roots.end();
    }
};

namespace detail {

inline std::vector<std::vector<int>> cartan_from_edges(
    int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    for (auto [i, j] : edges) {
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -1;
        a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -1;
    }
    return a;
}

// Orbit of the simple roots under simple reflections, then the positive
// half. For a simply-laced system this is the whole root system.
inline std::vector<std::vector<int>> enumerate_positive(
    const std::vector<std::vector<int>>& cartan) {
    const int n = static_cast<int>(cartan.size());
    std::set<std::vector<int>> roots;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        roots.insert(e);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> current(roots.begin(), roots.end());
        for (const auto& alpha : current) {
            for (int i = 0; i < n; ++i) {
                long pairing = 0;
                for (int j = 0; j < n; ++j) pairing += static_cast<long>(alpha[static_cast<std::size_t>(j)]) * cartan[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
                auto beta = alpha;
                beta[static_cast<std::size_t>(i)] -= static_cast<int>(pairing);
                if (roots.insert(beta).second) grew = true;
            }
        }
    }
    std::vector<std::vector<int>> positive;
    for (const auto& r : roots) {
        bool nonneg = true, nonzero = false;
        for (int c : r) {
            if (c < 0) nonneg = false;
            if (c != 0) nonzero = true;
        }
        if (nonneg && nonzero) positive.push_back(r);
    }
    std::sort(positive.begin(), positive.end());
    return positive;
}

}  // namespace detail

// Build the root system with an optional relabeling of the simple roots
// (used to check the enumeration is order-independent). The E6 chain is
// unoriented in the abstract diagram; swap_e6_ends exchanges which end node
// carries which linear character.
inline RootSystemData positive_roots(RootSystem type, bool swap_e6_ends = false,
                                     const std::vector<int>& node_perm = {}) {
    RootSystemData rs;
    rs.type = type;
    std::vector<std::pair<int, int>> edges;
    if (type == RootSystem::D4) {
        rs.nnodes = 4;
        edges = {{0, 1}, {0, 2}, {0, 3}};
        rs.white_nodes = {1, 2, 3};
        rs.irrep_of_white = {1, 2, 3};
    } else {
        rs.nnodes = 6;
        edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}};
        rs.white_nodes = {0, 2, 4};
        rs.irrep_of_white = swap_e6_ends ? std::vector<int>{2, 3, 1} : std::vector<int>{1, 3, 2};
    }
    if (!node_perm.empty()) {
        for (auto& [i, j] : edges) {
            i = node_perm[static_cast<std::size_t>(i)];
            j = node_perm[static_cast<std::size_t>(j)];
        }
        for (auto& w : rs.white_nodes) w = node_perm[static_cast<std::size_t>(w)];
    }
    rs.cartan = detail::cartan_from_edges(rs.nnodes, edges);
    rs.positive_roots = detail::enumerate_positive(rs.cartan);
    return rs;
}

// Coefficients of a positive root at the white nodes, in diagram order.
inline std::vector<int> white_coordinates(const RootSystemData& rs,
                                          const std::vector<int>& alpha) {
    if (!rs.is_positive_root(alpha)) throw RootNotFound();
    std::vector<int> w;
    for (int node : rs.white_nodes) w.push_back(alpha[static_cast<std::size_t>(node)]);
    return w;
}

}  // namespace hhodge
