#include "ursa/rootsystem.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ursa {

Kind kind_from_char(char c) {
    switch (c) {
        case 'A': case 'a': return Kind::A;
        case 'D': case 'd': return Kind::D;
        case 'E': case 'e': return Kind::E;
        default: throw std::invalid_argument("unsupported kind");
    }
}

std::string kind_str(Kind k) {
    switch (k) {
        case Kind::A: return "A";
        case Kind::D: return "D";
        case Kind::E: return "E";
    }
    return "?";
}

namespace {

std::vector<std::pair<int, int>> dynkin_edges(Kind kind, int rank) {
    std::vector<std::pair<int, int>> e;
    switch (kind) {
        case Kind::A:
            if (rank < 1) throw std::invalid_argument("A_n needs n >= 1");
            for (int i = 1; i < rank; ++i) e.emplace_back(i, i + 1);
            break;
        case Kind::D:
            if (rank < 4) throw std::invalid_argument("D_n needs n >= 4");
            for (int i = 1; i < rank - 1; ++i) e.emplace_back(i, i + 1);
            e.emplace_back(rank - 2, rank);
            break;
        case Kind::E:
            // node 2 attaches to node 4 on the chain 1-3-4-5-6(-7)(-8)
            if (rank < 6 || rank > 8) throw std::invalid_argument("E_n needs n in {6,7,8}");
            e.emplace_back(1, 3);
            e.emplace_back(3, 4);
            e.emplace_back(4, 5);
            e.emplace_back(5, 6);
            if (rank >= 7) e.emplace_back(6, 7);
            if (rank == 8) e.emplace_back(7, 8);
            e.emplace_back(2, 4);
            break;
    }
    return e;
}

}  // namespace

RootDatum build_root_datum(Kind kind, int rank) {
    RootDatum rd;
    rd.kind = kind;
    rd.rank = rank;
    rd.cartan.assign(size_t(rank), std::vector<int>(size_t(rank), 0));
    for (int i = 0; i < rank; ++i) rd.cartan[size_t(i)][size_t(i)] = 2;
    for (auto [i, j] : dynkin_edges(kind, rank)) {
        rd.cartan[size_t(i - 1)][size_t(j - 1)] = -1;
        rd.cartan[size_t(j - 1)][size_t(i - 1)] = -1;
    }

    // p_ij + q_ij = a_ij with the Remark convention: orthogonal pairs 0,0;
    // diagonal 1,1; adjacent i<j gives (0,-1), i>j gives (-1,0).
    rd.p_mat.assign(size_t(rank), std::vector<int>(size_t(rank), 0));
    rd.q_mat = rd.p_mat;
    for (int i = 1; i <= rank; ++i)
        for (int j = 1; j <= rank; ++j) {
            int aij = rd.a(i, j);
            int p = 0, q = 0;
            if (i == j) { p = q = 1; }
            else if (aij == -1) {
                if (i < j) { p = 0; q = -1; }
                else { p = -1; q = 0; }
            }
            rd.p_mat[size_t(i - 1)][size_t(j - 1)] = p;
            rd.q_mat[size_t(i - 1)][size_t(j - 1)] = q;
        }

    rd.pairing_mono.assign(size_t(rank), std::vector<Mono2>(size_t(rank)));
    for (int i = 1; i <= rank; ++i)
        for (int j = 1; j <= rank; ++j)
            rd.pairing_mono[size_t(i - 1)][size_t(j - 1)] = Mono2{rd.p(j, i), -rd.q(j, i)};

    // positive roots by closure: beta + alpha_i is a root iff (beta, alpha_i) < 0
    // (simply-laced), seeded with the simple roots.
    auto inner = [&](const LatticeVec& u, const LatticeVec& v) {
        long ip = 0;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                if (u[size_t(i)] && v[size_t(j)])
                    ip += long(u[size_t(i)]) * v[size_t(j)] * rd.cartan[size_t(i)][size_t(j)];
        return ip;
    };
    std::set<LatticeVec> roots;
    std::vector<LatticeVec> frontier;
    for (int i = 1; i <= rank; ++i) {
        roots.insert(lv_unit(rank, i));
        frontier.push_back(lv_unit(rank, i));
    }
    while (!frontier.empty()) {
        std::vector<LatticeVec> next;
        for (const auto& b : frontier)
            for (int i = 1; i <= rank; ++i) {
                if (inner(b, lv_unit(rank, i)) < 0) {
                    LatticeVec c = lv_add(b, lv_unit(rank, i));
                    if (roots.insert(c).second) next.push_back(c);
                }
            }
        frontier = std::move(next);
    }
    rd.positive_roots.assign(roots.begin(), roots.end());
    std::sort(rd.positive_roots.begin(), rd.positive_roots.end(),
              [](const LatticeVec& x, const LatticeVec& y) {
                  int hx = lv_height(x), hy = lv_height(y);
                  if (hx != hy) return hx < hy;
                  return x < y;
              });
    return rd;
}

RootDatum build_root_datum(const std::string& type) {
    if (type.size() < 2) throw std::invalid_argument("bad type string: " + type);
    Kind k = kind_from_char(type[0]);
    int rank = std::stoi(type.substr(1));
    return build_root_datum(k, rank);
}

bool RootDatum::is_positive_root(const LatticeVec& v) const {
    return std::binary_search(positive_roots.begin(), positive_roots.end(), v,
                              [](const LatticeVec& x, const LatticeVec& y) {
                                  int hx = lv_height(x), hy = lv_height(y);
                                  if (hx != hy) return hx < hy;
                                  return x < y;
                              });
}

std::optional<int> RootDatum::root_index(const LatticeVec& v) const {
    auto cmp = [](const LatticeVec& x, const LatticeVec& y) {
        int hx = lv_height(x), hy = lv_height(y);
        if (hx != hy) return hx < hy;
        return x < y;
    };
    auto it = std::lower_bound(positive_roots.begin(), positive_roots.end(), v, cmp);
    if (it != positive_roots.end() && *it == v)
        return int(it - positive_roots.begin());
    return std::nullopt;
}

Mono2 RootDatum::torus_pair(const LatticeVec& mu, const LatticeVec& nu) const {
    Mono2 m;
    for (int i = 0; i < rank; ++i) {
        if (mu[size_t(i)] == 0) continue;
        for (int j = 0; j < rank; ++j) {
            if (nu[size_t(j)] == 0) continue;
            const Mono2& e = pairing_mono[size_t(i)][size_t(j)];
            int c = mu[size_t(i)] * nu[size_t(j)];
            m.a += c * e.a;
            m.b += c * e.b;
        }
    }
    return m;
}

long RootDatum::kostant(const LatticeVec& mu) const {
    if (!lv_nonneg(mu)) return 0;
    // DP over the box of sub-weights of mu
    std::vector<int> dims(size_t(rank), 0);
    long box = 1;
    for (int i = 0; i < rank; ++i) {
        dims[size_t(i)] = mu[size_t(i)] + 1;
        box *= dims[size_t(i)];
    }
    auto index_of = [&](const LatticeVec& v) {
        long idx = 0;
        for (int i = 0; i < rank; ++i) idx = idx * dims[size_t(i)] + v[size_t(i)];
        return idx;
    };
    std::vector<long> ways(size_t(box), 0);
    ways[0] = 1;
    // iterate lattice points in increasing index; index order is compatible
    // with componentwise order since all coordinates are nonnegative
    std::vector<LatticeVec> pts;
    pts.reserve(size_t(box));
    LatticeVec v = lv_zero(rank);
    while (true) {
        pts.push_back(v);
        int i = rank - 1;
        while (i >= 0) {
            if (++v[size_t(i)] < dims[size_t(i)]) break;
            v[size_t(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
    std::sort(pts.begin(), pts.end(), [](const LatticeVec& x, const LatticeVec& y) {
        int hx = lv_height(x), hy = lv_height(y);
        if (hx != hy) return hx < hy;
        return x < y;
    });
    for (const auto& root : positive_roots) {
        for (const auto& pt : pts) {
            LatticeVec prev = lv_sub(pt, root);
            if (!lv_nonneg(prev)) continue;
            ways[size_t(index_of(pt))] += ways[size_t(index_of(prev))];
        }
    }
    return ways[size_t(box - 1)];
}

long kostant_bruteforce(const RootDatum& rd, const LatticeVec& mu) {
    // enumerate multisets of positive roots (non-increasing index sequences)
    long count = 0;
    auto& roots = rd.positive_roots;
    std::function<void(int, LatticeVec)> rec = [&](int maxidx, LatticeVec rem) {
        if (lv_is_zero(rem)) { ++count; return; }
        for (int i = maxidx; i >= 0; --i) {
            LatticeVec next = lv_sub(rem, roots[size_t(i)]);
            if (lv_nonneg(next)) rec(i, next);
        }
    };
    rec(int(roots.size()) - 1, mu);
    return count;
}

LaurentBi psi_poly(int n) {
    LaurentBi p = LaurentBi::one();
    for (int k = 1; k <= n; ++k) {
        LaurentBi f = LaurentBi::one();
        f += LaurentBi::mono(k, -k, Rational(-1));
        p *= f;
    }
    return p;
}

}  // namespace ursa
