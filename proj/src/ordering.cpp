#include "symrect/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace symrect {

OrderingKind ordering_from_name(std::string_view name) {
    if (name == "nat" || name == "natural")
        return OrderingKind::natural;
    if (name == "deg" || name == "degree")
        return OrderingKind::degree;
    if (name == "rcm")
        return OrderingKind::rcm;
    throw std::invalid_argument("unknown ordering '" + std::string(name) + "'");
}

std::string_view to_string(OrderingKind kind) {
    switch (kind) {
    case OrderingKind::natural:
        return "nat";
    case OrderingKind::degree:
        return "deg";
    case OrderingKind::rcm:
        return "rcm";
    }
    return "?";
}

OrderingPermutation OrderingPermutation::from_order(OrderingKind kind, std::vector<vid_t> order) {
    OrderingPermutation p;
    p.kind_ = kind;
    const auto n = static_cast<vid_t>(order.size());
    p.perm_.assign(order.size(), -1);
    for (vid_t k = 0; k < n; k++) {
        const auto old = order[k];
        if (old < 0 || old >= n || p.perm_[old] != -1)
            throw std::invalid_argument("ordering is not a permutation");
        p.perm_[old] = k;
    }
    p.inv_ = std::move(order);
    return p;
}

OrderingPermutation OrderingPermutation::identity(vid_t n) {
    std::vector<vid_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    return from_order(OrderingKind::natural, std::move(order));
}

bool OrderingPermutation::is_identity() const noexcept {
    for (vid_t i = 0; i < n(); i++)
        if (perm_[i] != i)
            return false;
    return true;
}

OrderingPermutation natural_order(const SparseMatrix &A) { return OrderingPermutation::identity(A.n()); }

OrderingPermutation degree_order(const SparseMatrix &A) {
    std::vector<vid_t> order(A.n());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](vid_t a, vid_t b) { return A.degree(a) < A.degree(b); });
    return OrderingPermutation::from_order(OrderingKind::degree, std::move(order));
}

namespace {

struct LevelInfo {
    int depth = 0;
    std::vector<vid_t> last_level;
};

// BFS levels from root; `level` is scratch shared across calls (-1 = unseen).
LevelInfo level_structure(const SparseMatrix &G, vid_t root, std::vector<int> &level, std::vector<vid_t> &touched) {
    for (auto v : touched)
        level[v] = -1;
    touched.clear();
    std::vector<vid_t> frontier{root};
    level[root] = 0;
    touched.push_back(root);
    LevelInfo info;
    while (true) {
        std::vector<vid_t> next;
        for (auto u : frontier)
            for (auto w : G.row(u))
                if (level[w] < 0) {
                    level[w] = level[u] + 1;
                    touched.push_back(w);
                    next.push_back(w);
                }
        if (next.empty())
            break;
        info.depth++;
        frontier = std::move(next);
    }
    info.last_level = std::move(frontier);
    return info;
}

vid_t pseudo_peripheral(const SparseMatrix &G, vid_t start, std::vector<int> &level, std::vector<vid_t> &touched) {
    auto root = start;
    auto info = level_structure(G, root, level, touched);
    while (true) {
        auto best = info.last_level.front();
        for (auto v : info.last_level)
            if (G.degree(v) < G.degree(best) || (G.degree(v) == G.degree(best) && v < best))
                best = v;
        auto candidate = level_structure(G, best, level, touched);
        if (candidate.depth <= info.depth)
            return root;
        root = best;
        info = std::move(candidate);
    }
}

} // namespace

OrderingPermutation rcm_order(const SparseMatrix &A) {
    const auto G = A.symmetrized().without_diagonal();
    const auto n = G.n();
    std::vector<vid_t> order;
    order.reserve(n);
    std::vector<char> visited(n, 0);
    std::vector<int> level(n, -1);
    std::vector<vid_t> touched;
    std::vector<vid_t> nbrs;

    for (vid_t s = 0; s < n; s++) {
        if (visited[s])
            continue;
        const auto begin = order.size();
        const auto root = G.degree(s) == 0 ? s : pseudo_peripheral(G, s, level, touched);
        visited[root] = 1;
        order.push_back(root);
        for (auto head = begin; head < order.size(); head++) {
            nbrs.clear();
            for (auto w : G.row(order[head]))
                if (!visited[w])
                    nbrs.push_back(w);
            std::sort(nbrs.begin(), nbrs.end(), [&](vid_t a, vid_t b) {
                return G.degree(a) != G.degree(b) ? G.degree(a) < G.degree(b) : a < b;
            });
            for (auto w : nbrs) {
                visited[w] = 1;
                order.push_back(w);
            }
        }
        std::reverse(order.begin() + static_cast<std::ptrdiff_t>(begin), order.end());
    }
    return OrderingPermutation::from_order(OrderingKind::rcm, std::move(order));
}

OrderingPermutation compute_ordering(const SparseMatrix &A, OrderingKind kind) {
    switch (kind) {
    case OrderingKind::degree:
        return degree_order(A);
    case OrderingKind::rcm:
        return rcm_order(A);
    case OrderingKind::natural:
        break;
    }
    return natural_order(A);
}

SparseMatrix apply_ordering(const SparseMatrix &A, const OrderingPermutation &perm) {
    if (perm.n() != A.n())
        throw DimensionError("ordering has " + std::to_string(perm.n()) + " entries for a matrix of order " +
                             std::to_string(A.n()));
    if (perm.is_identity())
        return A;
    const auto p = perm.perm();
    const auto inv = perm.inv();
    std::vector<nnz_t> offsets(static_cast<std::size_t>(A.n()) + 1, 0);
    std::vector<vid_t> cols;
    cols.reserve(static_cast<std::size_t>(A.nnz()));
    for (vid_t u = 0; u < A.n(); u++) {
        const auto begin = cols.size();
        for (auto c : A.row(inv[u]))
            cols.push_back(p[c]);
        std::sort(cols.begin() + static_cast<std::ptrdiff_t>(begin), cols.end());
        offsets[u + 1] = static_cast<nnz_t>(cols.size());
    }
    return SparseMatrix(A.n(), std::move(offsets), std::move(cols));
}

vid_t bandwidth(const SparseMatrix &A) {
    vid_t bw = 0;
    for (vid_t i = 0; i < A.n(); i++)
        for (auto c : A.row(i))
            bw = std::max(bw, c > i ? c - i : i - c);
    return bw;
}

} // namespace symrect
