#pragma once

// Flag complexes presented by their 1-skeleton, clique enumeration, and
// rational simplicial homology.  Used for contraction complexes and
// descending links; connectivity is certified homologically (b0, b1, ...),
// not homotopically.

#include <cstdint>

#include "rearrange/graph.hpp"

namespace rearrange {

struct FlagComplex {
    std::vector<std::string> labels;   // one per vertex, for reports
    std::vector<std::vector<char>> adj;  // symmetric, irreflexive

    std::size_t size() const { return adj.size(); }

    static FlagComplex empty() { return FlagComplex{}; }

    static FlagComplex on(std::size_t n) {
        FlagComplex x;
        x.labels.resize(n);
        for (std::size_t i = 0; i < n; ++i) x.labels[i] = "v" + std::to_string(i);
        x.adj.assign(n, std::vector<char>(n, 0));
        return x;
    }

    void connect(std::size_t i, std::size_t j) {
        if (i == j) throw Error("flag complex adjacency is irreflexive");
        adj[i][j] = adj[j][i] = 1;
    }

    bool adjacent(std::size_t i, std::size_t j) const { return adj[i][j] != 0; }

    std::size_t degree(std::size_t i) const {
        std::size_t d = 0;
        for (std::size_t j = 0; j < size(); ++j)
            if (adj[i][j]) ++d;
        return d;
    }

    std::size_t edge_count() const {
        std::size_t m = 0;
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = i + 1; j < size(); ++j)
                if (adj[i][j]) ++m;
        return m;
    }

    std::size_t component_count() const {
        std::vector<std::size_t> parent(size());
        for (std::size_t i = 0; i < size(); ++i) parent[i] = i;
        auto find = [&](std::size_t v) {
            while (parent[v] != v) v = parent[v];
            return v;
        };
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = i + 1; j < size(); ++j)
                if (adj[i][j]) {
                    auto a = find(i), b = find(j);
                    if (a != b) parent[std::max(a, b)] = std::min(a, b);
                }
        std::set<std::size_t> roots;
        for (std::size_t i = 0; i < size(); ++i) roots.insert(find(i));
        return roots.size();
    }
};

namespace detail {

struct Rational {
    long long num = 0, den = 1;

    static long long gcd_ll(long long a, long long b) {
        while (b) {
            long long t = a % b;
            a = b;
            b = t;
        }
        return a < 0 ? -a : a;
    }

    void norm() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = gcd_ll(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { norm(); }

    bool zero() const { return num == 0; }

    Rational operator*(const Rational& o) const {
        Rational a(num, o.den), b(o.num, den);  // cross-reduce first
        return Rational(a.num * b.num, a.den * b.den);
    }
    Rational operator-(const Rational& o) const {
        long long g = gcd_ll(den, o.den);
        long long l = den / g * o.den;
        return Rational(num * (l / den) - o.num * (l / o.den), l);
    }
    Rational operator/(const Rational& o) const {
        if (o.zero()) throw Error("rational division by zero");
        return *this * Rational(o.den, o.num);
    }
};

}  // namespace detail

// Cliques of the adjacency graph by dimension: simplices[k] holds the
// (k)-dimensional simplices as sorted vertex lists.
inline std::vector<std::vector<std::vector<std::size_t>>> clique_simplices(
    const FlagComplex& x, std::size_t max_dim, std::size_t cap = 100000) {
    std::vector<std::vector<std::vector<std::size_t>>> simplices(max_dim + 1);
    std::size_t total = 0;
    for (std::size_t v = 0; v < x.size(); ++v) {
        simplices[0].push_back({v});
        ++total;
    }
    for (std::size_t k = 1; k <= max_dim; ++k) {
        for (const auto& s : simplices[k - 1]) {
            for (std::size_t v = s.back() + 1; v < x.size(); ++v) {
                bool ok = true;
                for (auto u : s)
                    if (!x.adjacent(u, v)) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                auto t = s;
                t.push_back(v);
                simplices[k].push_back(std::move(t));
                if (++total > cap)
                    throw Error("size cap exceeded: too many simplices");
            }
        }
    }
    return simplices;
}

namespace detail {

// Exact rank of the boundary map from k-simplices to (k-1)-simplices.
inline std::size_t boundary_rank(
    const std::vector<std::vector<std::size_t>>& faces,
    const std::vector<std::vector<std::size_t>>& cells) {
    if (faces.empty() || cells.empty()) return 0;
    std::map<std::vector<std::size_t>, std::size_t> face_index;
    for (std::size_t i = 0; i < faces.size(); ++i) face_index[faces[i]] = i;

    // dense rational elimination; these matrices are tiny
    std::vector<std::vector<Rational>> m(cells.size(),
                                         std::vector<Rational>(faces.size()));
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const auto& s = cells[c];
        long long sign = 1;
        for (std::size_t i = 0; i < s.size(); ++i) {
            std::vector<std::size_t> face;
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != i) face.push_back(s[j]);
            m[c][face_index.at(face)] = Rational(sign);
            sign = -sign;
        }
    }
    std::size_t rank = 0;
    std::size_t rows = cells.size(), colsn = faces.size();
    std::vector<char> done(rows, 0);
    for (std::size_t col = 0; col < colsn && rank < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = 0; r < rows; ++r)
            if (!done[r] && !m[r][col].zero()) {
                pivot = r;
                break;
            }
        if (pivot == rows) continue;
        done[pivot] = 1;
        ++rank;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot || m[r][col].zero()) continue;
            Rational factor = m[r][col] / m[pivot][col];
            for (std::size_t cc = col; cc < colsn; ++cc)
                m[r][cc] = m[r][cc] - factor * m[pivot][cc];
        }
    }
    return rank;
}

}  // namespace detail

// Rational Betti numbers b0..b_max_dim of the clique complex.
inline std::vector<std::size_t> betti(const FlagComplex& x, std::size_t max_dim,
                                      std::size_t cap = 100000) {
    if (x.size() == 0) return std::vector<std::size_t>(max_dim + 1, 0);
    auto simplices = clique_simplices(x, max_dim + 1, cap);
    std::vector<std::size_t> ranks(max_dim + 2, 0);  // ranks[k] = rank of boundary_k
    for (std::size_t k = 1; k <= max_dim + 1; ++k)
        ranks[k] = detail::boundary_rank(simplices[k - 1], simplices[k]);
    std::vector<std::size_t> b(max_dim + 1);
    for (std::size_t k = 0; k <= max_dim; ++k)
        b[k] = simplices[k].size() - ranks[k] - ranks[k + 1];
    return b;
}

// Least k such that every vertex is adjacent to all but at most k others.
inline std::size_t density(const FlagComplex& x) {
    if (x.size() == 0) throw Error("density of the empty complex");
    std::size_t k = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        k = std::max(k, x.size() - 1 - x.degree(i));
    return k;
}

// True iff some n-simplex is a k-ground: every vertex of the complex is
// adjacent to all but at most k vertices of the simplex (a vertex is not
// adjacent to itself).
inline bool is_grounded(const FlagComplex& x, std::size_t n, std::size_t k) {
    if (x.size() == 0) return false;
    auto simplices = clique_simplices(x, n);
    for (const auto& delta : simplices[n]) {
        bool ground = true;
        for (std::size_t v = 0; v < x.size() && ground; ++v) {
            std::size_t missed = 0;
            for (auto u : delta)
                if (u == v || !x.adjacent(u, v)) ++missed;
            if (missed > k) ground = false;
        }
        if (ground) return true;
    }
    return false;
}

}  // namespace rearrange
