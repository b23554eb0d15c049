#include "strata/origami.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace strata {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int x : images_) {
        if (x < 0 || x >= size() || seen[static_cast<size_t>(x)])
            throw ParseError("not a permutation");
        seen[static_cast<size_t>(x)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::parse_cycles(std::string_view text, int n) {
    // collect cycles of 1-based labels
    std::vector<std::vector<int>> cyc;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw ParseError("empty permutation");
    int max_label = 0;
    while (i < text.size()) {
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
        ++i;
        std::vector<int> cycle;
        while (true) {
            skip_ws();
            size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i) throw ParseError("expected a square label in cycle notation");
            int label = std::stoi(std::string(text.substr(start, i - start)));
            if (label < 1) throw ParseError("square labels start at 1");
            cycle.push_back(label);
            max_label = std::max(max_label, label);
            skip_ws();
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            if (i < text.size() && text[i] == ')') { ++i; break; }
            throw ParseError("expected ',' or ')' in cycle notation");
        }
        cyc.push_back(std::move(cycle));
        skip_ws();
    }
    if (n == 0) n = max_label;
    if (max_label > n) throw ParseError("cycle label exceeds square count");
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::vector<char> used(static_cast<size_t>(n), 0);
    for (const auto& cycle : cyc) {
        for (size_t t = 0; t < cycle.size(); ++t) {
            int from = cycle[t] - 1, to = cycle[(t + 1) % cycle.size()] - 1;
            if (used[static_cast<size_t>(from)])
                throw ParseError("square " + std::to_string(from + 1) + " appears twice");
            used[static_cast<size_t>(from)] = 1;
            img[static_cast<size_t>(from)] = to;
        }
    }
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < size(); ++i) inv[static_cast<size_t>(images_[static_cast<size_t>(i)])] = i;
    return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw ParseError("permutation sizes differ");
    std::vector<int> img(a.images_.size());
    for (int i = 0; i < a.size(); ++i) img[static_cast<size_t>(i)] = a(b(i));
    return Permutation(std::move(img));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size(), 0);
    for (int i = 0; i < size(); ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        std::vector<int> c;
        for (int j = i; !seen[static_cast<size_t>(j)]; j = images_[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = 1;
            c.push_back(j);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::string Permutation::cycle_str() const {
    std::ostringstream os;
    for (const auto& c : cycles()) {
        os << "(";
        for (size_t t = 0; t < c.size(); ++t) {
            if (t) os << ",";
            os << c[t] + 1;
        }
        os << ")";
    }
    return os.str();
}

namespace {

bool transitive(const std::vector<int>& h, const std::vector<int>& v) {
    const int n = static_cast<int>(h.size());
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : {h[static_cast<size_t>(x)], v[static_cast<size_t>(x)]}) {
            if (!seen[static_cast<size_t>(y)]) {
                seen[static_cast<size_t>(y)] = 1;
                ++count;
                stack.push_back(y);
            }
        }
    }
    return count == n;
}

// cone orders (cycle length - 1) of h v h^-1 v^-1, descending, zeros kept
std::vector<int> commutator_orders(const std::vector<int>& h, const std::vector<int>& v) {
    const int n = static_cast<int>(h.size());
    std::vector<int> hinv(static_cast<size_t>(n)), vinv(static_cast<size_t>(n)),
        c(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        hinv[static_cast<size_t>(h[static_cast<size_t>(i)])] = i;
        vinv[static_cast<size_t>(v[static_cast<size_t>(i)])] = i;
    }
    for (int i = 0; i < n; ++i)
        c[static_cast<size_t>(i)] =
            h[static_cast<size_t>(v[static_cast<size_t>(hinv[static_cast<size_t>(vinv[static_cast<size_t>(i)])])])];
    std::vector<int> orders;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        int len = 0;
        for (int j = i; !seen[static_cast<size_t>(j)]; j = c[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = 1;
            ++len;
        }
        orders.push_back(len - 1);
    }
    std::sort(orders.begin(), orders.end(), std::greater<>());
    return orders;
}

// BFS relabeling from base, exploring h then v; lex-min over all bases.
void canonical_pair(const std::vector<int>& h, const std::vector<int>& v,
                    std::vector<int>& best_h, std::vector<int>& best_v) {
    const int n = static_cast<int>(h.size());
    std::vector<int> label(static_cast<size_t>(n)), order(static_cast<size_t>(n)),
        ch(static_cast<size_t>(n)), cv(static_cast<size_t>(n));
    bool have_best = false;
    for (int base = 0; base < n; ++base) {
        std::fill(label.begin(), label.end(), -1);
        label[static_cast<size_t>(base)] = 0;
        order[0] = base;
        int filled = 1;
        for (int qi = 0; qi < filled; ++qi) {
            int x = order[static_cast<size_t>(qi)];
            for (int y : {h[static_cast<size_t>(x)], v[static_cast<size_t>(x)]}) {
                if (label[static_cast<size_t>(y)] < 0) {
                    label[static_cast<size_t>(y)] = filled;
                    order[static_cast<size_t>(filled)] = y;
                    ++filled;
                }
            }
        }
        assert(filled == n);
        for (int x = 0; x < n; ++x) {
            ch[static_cast<size_t>(label[static_cast<size_t>(x)])] =
                label[static_cast<size_t>(h[static_cast<size_t>(x)])];
            cv[static_cast<size_t>(label[static_cast<size_t>(x)])] =
                label[static_cast<size_t>(v[static_cast<size_t>(x)])];
        }
        if (!have_best || ch < best_h || (ch == best_h && cv < best_v)) {
            best_h = ch;
            best_v = cv;
            have_best = true;
        }
    }
}

}  // namespace

Origami::Origami(Permutation h, Permutation v) : h_(std::move(h)), v_(std::move(v)) {
    if (h_.size() != v_.size())
        throw ParseError("h and v act on different numbers of squares");
    if (h_.size() == 0) throw ParseError("an origami needs at least one square");
    if (!transitive(h_.images(), v_.images()))
        throw NotConnected("the two permutations do not act transitively");
}

std::vector<int> Origami::cone_orders() const {
    return commutator_orders(h_.images(), v_.images());
}

Signature Origami::stratum() const {
    std::vector<int> orders = cone_orders();
    std::erase(orders, 0);
    int sum = std::accumulate(orders.begin(), orders.end(), 0);
    return Signature::validate(sum / 2 + 1, 1, std::move(orders));
}

Origami Origami::canonical() const {
    std::vector<int> bh, bv;
    canonical_pair(h_.images(), v_.images(), bh, bv);
    return Origami(Permutation(std::move(bh)), Permutation(std::move(bv)));
}

Origami Origami::sheared() const { return Origami(h_, v_ * h_.inverse()); }

Origami Origami::rotated() const { return Origami(v_, h_.inverse()); }

CylinderDecomposition Origami::horizontal_cylinders() const {
    const auto& h = h_.images();
    const auto& v = v_.images();
    auto rows = h_.cycles();
    std::vector<int> row_of(static_cast<size_t>(squares()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (int x : rows[r]) row_of[static_cast<size_t>(x)] = static_cast<int>(r);

    // union rows across a singularity-free boundary: v conjugates the row
    // rigidly iff h(v(j)) = v(h(j)) for every j in the row
    std::vector<int> parent(rows.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (size_t r = 0; r < rows.size(); ++r) {
        bool flat = true;
        for (int j : rows[r]) {
            if (h[static_cast<size_t>(v[static_cast<size_t>(j)])] !=
                v[static_cast<size_t>(h[static_cast<size_t>(j)])]) {
                flat = false;
                break;
            }
        }
        if (flat) {
            int above = row_of[static_cast<size_t>(v[static_cast<size_t>(rows[r][0])])];
            parent[static_cast<size_t>(find(static_cast<int>(r)))] = find(above);
        }
    }
    std::map<int, std::pair<int, int>> groups;  // root -> (width, height)
    for (size_t r = 0; r < rows.size(); ++r) {
        auto& [w, hgt] = groups[find(static_cast<int>(r))];
        int len = static_cast<int>(rows[r].size());
        if (hgt == 0) w = len;
        else if (w != len)
            throw std::logic_error("rows of one cylinder must share circumference");
        ++hgt;
    }
    CylinderDecomposition out;
    for (const auto& [root, wh] : groups) out.cylinders.push_back({wh.first, wh.second});
    std::sort(out.cylinders.begin(), out.cylinders.end());
    int area = 0;
    for (const auto& c : out.cylinders) area += c.width * c.height;
    if (area != squares()) throw std::logic_error("cylinder areas must sum to the square count");
    return out;
}

Rational CylinderDecomposition::moduli_sum() const {
    Rational s(0);
    for (const auto& c : cylinders) s += Rational(c.height, c.width);
    return s;
}

// ---------------------------------------------------------------------------
// spin parity

namespace {

// Closed walks live on the midline graph: vertex i = center of square i,
// edge X_i = i -> h(i) (east), edge Y_i = i -> v(i) (north). Fundamental
// cycles of a spanning tree are vertex-simple, so the Arf form evaluates as
// turning number + 1; the intersection pairing is read off against the
// grid-shifted copy (X_i crosses the left side of h(i), Y_i the bottom of
// v(i)).
struct SpinBasis {
    std::vector<char> edges;  // indicator over 2n edge ids
    int q = 0;
};

int spin_pairing(const SpinBasis& a, const SpinBasis& b, const std::vector<int>& h,
                 const std::vector<int>& v) {
    const int n = static_cast<int>(h.size());
    int c = 0;
    for (int i = 0; i < n; ++i) {
        if (a.edges[static_cast<size_t>(i)] &&
            b.edges[static_cast<size_t>(n + h[static_cast<size_t>(i)])])
            c ^= 1;
        if (a.edges[static_cast<size_t>(n + i)] && b.edges[static_cast<size_t>(v[static_cast<size_t>(i)])])
            c ^= 1;
    }
    return c;
}

}  // namespace

int Origami::spin_parity() const {
    for (int m : cone_orders())
        if (m % 2 != 0)
            throw OddOrderZero("spin parity needs all cone orders even; stratum " +
                               stratum().str());

    const int n = squares();
    const auto& h = h_.images();
    const auto& v = v_.images();
    auto tail = [&](int e) { return e < n ? e : e - n; };
    auto head = [&](int e) {
        return e < n ? h[static_cast<size_t>(e)] : v[static_cast<size_t>(e - n)];
    };

    // spanning tree over the 2n undirected edges
    struct Hop { int edge; int parent; int dir; };  // dir +1 = tail->head
    std::vector<std::optional<Hop>> up(static_cast<size_t>(n));
    std::vector<char> in_tree(static_cast<size_t>(2 * n), 0), visited(static_cast<size_t>(n), 0);
    std::queue<int> bfs;
    bfs.push(0);
    visited[0] = 1;
    while (!bfs.empty()) {
        int x = bfs.front();
        bfs.pop();
        for (int e = 0; e < 2 * n; ++e) {
            int a = tail(e), b = head(e);
            int y = -1, dir = 0;
            if (a == x) { y = b; dir = 1; }
            else if (b == x) { y = a; dir = -1; }
            else continue;
            if (!visited[static_cast<size_t>(y)]) {
                visited[static_cast<size_t>(y)] = 1;
                up[static_cast<size_t>(y)] = Hop{e, x, dir};
                in_tree[static_cast<size_t>(e)] = 1;
                bfs.push(y);
            }
        }
    }

    using Walk = std::vector<std::pair<int, int>>;  // (edge, dir)
    auto tree_path = [&](int a) {  // root -> a
        Walk path;
        while (up[static_cast<size_t>(a)]) {
            const Hop& hop = *up[static_cast<size_t>(a)];
            path.emplace_back(hop.edge, hop.dir);
            a = hop.parent;
        }
        std::reverse(path.begin(), path.end());
        return path;
    };

    // compass direction of a traversed edge: E=0 N=1 W=2 S=3
    auto compass = [&](int e, int dir) { return (e < n ? 0 : 1) + (dir > 0 ? 0 : 2); };
    auto turning_q = [&](const Walk& walk) {
        int total = 0;
        for (size_t t = 0; t < walk.size(); ++t) {
            int cur = compass(walk[t].first, walk[t].second);
            const auto& nx = walk[(t + 1) % walk.size()];
            int diff = (compass(nx.first, nx.second) - cur + 4) % 4;
            if (diff == 2) throw std::logic_error("u-turn on a simple cycle");
            total += diff == 1 ? 1 : diff == 3 ? -1 : 0;
        }
        if (total % 4 != 0) throw std::logic_error("turning number must be integral");
        return ((total / 4) + 1) % 2 == 0 ? 0 : 1;
    };

    std::vector<SpinBasis> basis;
    for (int e = 0; e < 2 * n; ++e) {
        if (in_tree[static_cast<size_t>(e)]) continue;
        Walk pa = tree_path(tail(e)), pb = tree_path(head(e));
        size_t common = 0;
        while (common < pa.size() && common < pb.size() && pa[common] == pb[common]) ++common;
        Walk walk;
        for (size_t t = pa.size(); t > common; --t)
            walk.emplace_back(pa[t - 1].first, -pa[t - 1].second);  // tail(e) back to lca
        for (size_t t = common; t < pb.size(); ++t) walk.push_back(pb[t]);  // lca to head(e)
        walk.emplace_back(e, -1);                                           // head back to tail
        SpinBasis cyc;
        cyc.edges.assign(static_cast<size_t>(2 * n), 0);
        for (const auto& [edge, dir] : walk) cyc.edges[static_cast<size_t>(edge)] ^= 1;
        cyc.q = turning_q(walk);
        basis.push_back(std::move(cyc));
    }

    // symplectic reduction over GF(2); Arf = sum q(a_i) q(b_i)
    int arf = 0;
    int pairs = 0;
    std::vector<SpinBasis> pool = std::move(basis);
    while (true) {
        int pi = -1, pj = -1;
        for (size_t i = 0; i < pool.size() && pi < 0; ++i)
            for (size_t j = i + 1; j < pool.size(); ++j)
                if (spin_pairing(pool[i], pool[j], h, v)) {
                    pi = static_cast<int>(i);
                    pj = static_cast<int>(j);
                    break;
                }
        if (pi < 0) break;
        SpinBasis a = std::move(pool[static_cast<size_t>(pi)]);
        SpinBasis b = std::move(pool[static_cast<size_t>(pj)]);
        pool.erase(pool.begin() + pj);
        pool.erase(pool.begin() + pi);
        arf ^= a.q & b.q;
        ++pairs;
        for (auto& c : pool) {
            if (spin_pairing(c, b, h, v)) {
                c.q = (c.q + a.q + spin_pairing(c, a, h, v)) % 2;
                for (size_t t = 0; t < c.edges.size(); ++t) c.edges[t] ^= a.edges[t];
            }
            if (spin_pairing(c, a, h, v)) {
                c.q = (c.q + b.q + spin_pairing(c, b, h, v)) % 2;
                for (size_t t = 0; t < c.edges.size(); ++t) c.edges[t] ^= b.edges[t];
            }
        }
    }
    const int genus = stratum().genus();
    if (pairs != genus) throw std::logic_error("symplectic rank must be twice the genus");
    for (const auto& c : pool)
        if (c.q != 0) throw std::logic_error("residual classes must be null-homologous");
    return arf;
}

// ---------------------------------------------------------------------------
// orbits, enumeration, Lyapunov sums

OrbitData sl2_orbit(const Origami& o) {
    std::set<Origami> seen;
    std::vector<Origami> queue;
    Origami start = o.canonical();
    seen.insert(start);
    queue.push_back(start);
    while (!queue.empty()) {
        Origami cur = queue.back();
        queue.pop_back();
        for (const Origami& next : {cur.sheared().canonical(), cur.rotated().canonical()}) {
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return OrbitData{std::vector<Origami>(seen.begin(), seen.end())};
}

std::vector<Origami> enumerate_origamis(int squares, const Signature& target) {
    if (squares < 1) throw ParseError("square count must be >= 1");
    if (target.k() != 1)
        throw UnsupportedK("square-tiled surfaces carry abelian differentials (k=1) only");
    if (!target.orders().empty() && !target.holomorphic())
        throw MeromorphicUnsupported("origami strata are holomorphic; " + target.str());
    std::optional<int> want_parity;
    switch (target.component()) {
        case Component::generic: break;
        case Component::odd: want_parity = 1; break;
        case Component::even: want_parity = 0; break;
        default:
            throw NotApplicable("component '" + std::string(component_name(target.component())) +
                                "' is not detectable on origamis");
    }

    std::vector<int> want(target.orders().begin(), target.orders().end());
    std::sort(want.begin(), want.end(), std::greater<>());

    const int n = squares;
    std::set<Origami> found;

    // h runs over one representative per cycle type, v over all of S_n;
    // canonical dedup absorbs the centralizer overcounting
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int mx) -> void {
        if (remaining == 0) {
            parts.push_back(cur);
            return;
        }
        for (int first = std::min(remaining, mx); first >= 1; --first) {
            cur.push_back(first);
            self(self, remaining - first, first);
            cur.pop_back();
        }
    };
    rec(rec, n, n);

    std::vector<int> hinv(static_cast<size_t>(n)), vinv(static_cast<size_t>(n)),
        comm(static_cast<size_t>(n)), got;
    std::vector<char> seen(static_cast<size_t>(n));
    got.reserve(static_cast<size_t>(n));

    for (const auto& part : parts) {
        std::vector<int> h(static_cast<size_t>(n));
        int start = 0;
        for (int len : part) {
            for (int t = 0; t < len; ++t)
                h[static_cast<size_t>(start + t)] = start + (t + 1) % len;
            start += len;
        }
        for (int i = 0; i < n; ++i) hinv[static_cast<size_t>(h[static_cast<size_t>(i)])] = i;
        std::vector<int> v(static_cast<size_t>(n));
        std::iota(v.begin(), v.end(), 0);
        do {
            for (int i = 0; i < n; ++i) vinv[static_cast<size_t>(v[static_cast<size_t>(i)])] = i;
            for (int i = 0; i < n; ++i)
                comm[static_cast<size_t>(i)] =
                    h[static_cast<size_t>(v[static_cast<size_t>(hinv[static_cast<size_t>(
                        vinv[static_cast<size_t>(i)])])])];
            std::fill(seen.begin(), seen.end(), 0);
            got.clear();
            for (int i = 0; i < n; ++i) {
                if (seen[static_cast<size_t>(i)]) continue;
                int len = 0;
                for (int j = i; !seen[static_cast<size_t>(j)]; j = comm[static_cast<size_t>(j)]) {
                    seen[static_cast<size_t>(j)] = 1;
                    ++len;
                }
                if (len > 1) got.push_back(len - 1);
            }
            if (got.size() != want.size()) continue;
            std::sort(got.begin(), got.end(), std::greater<>());
            if (got != want) continue;
            if (!transitive(h, v)) continue;
            std::vector<int> bh, bv;
            canonical_pair(h, v, bh, bv);
            Origami cand(Permutation(std::move(bh)), Permutation(std::move(bv)));
            if (want_parity && cand.spin_parity() != *want_parity) continue;
            found.insert(std::move(cand));
        } while (std::next_permutation(v.begin(), v.end()));
    }
    return std::vector<Origami>(found.begin(), found.end());
}

LyapunovReport lyapunov_sum(const Origami& o) {
    Signature st = o.stratum();
    if (st.orders().empty())
        throw EmptyStratum("no cone points: a torus cover has no holomorphic zeros to report on");
    if (!st.holomorphic())
        throw MeromorphicUnsupported("Lyapunov sums are computed for holomorphic strata only");
    OrbitData orbit = sl2_orbit(o);
    Rational sv(0);
    for (const Origami& rep : orbit.representatives)
        sv += rep.horizontal_cylinders().moduli_sum();
    sv /= Rational(static_cast<long>(orbit.size()));
    Rational kappa = st.kappa_mu() / 12;
    return LyapunovReport{st, orbit.size(), kappa, sv, kappa + sv};
}

VaryingReport varying_test(const Signature& target, int max_squares) {
    if (target.k() != 1)
        throw UnsupportedK("varying detection runs on abelian strata (k=1)");
    if (target.orders().empty())
        throw EmptyStratum("the varying test needs a stratum with zeros");
    if (!target.holomorphic())
        throw MeromorphicUnsupported("the varying test needs a holomorphic stratum");
    if (max_squares < 1) throw ParseError("max squares must be >= 1");

    bool parity_defined = std::all_of(target.orders().begin(), target.orders().end(),
                                      [](int m) { return m % 2 == 0; });

    VaryingReport report{.stratum = target, .max_squares = max_squares};
    std::map<std::optional<int>, VaryingGroup> groups;
    std::map<std::optional<int>, std::set<Rational>> sums;
    std::set<Origami> seen;
    for (int n = 1; n <= max_squares; ++n) {
        for (const Origami& rep : enumerate_origamis(n, target)) {
            ++report.class_count;
            if (seen.contains(rep)) continue;
            OrbitData orbit = sl2_orbit(rep);
            seen.insert(orbit.representatives.begin(), orbit.representatives.end());
            Rational sv(0);
            for (const Origami& member : orbit.representatives)
                sv += member.horizontal_cylinders().moduli_sum();
            sv /= Rational(static_cast<long>(orbit.size()));
            Rational total = target.kappa_mu() / 12 + sv;
            std::optional<int> key;
            if (parity_defined) key = rep.spin_parity();
            auto& group = groups[key];
            group.parity = key;
            ++group.orbit_count;
            sums[key].insert(total);
        }
    }
    for (auto& [key, group] : groups) {
        group.sums.assign(sums[key].begin(), sums[key].end());
        if (group.sums.size() >= 2) report.varying = true;
        report.groups.push_back(group);
    }
    if (report.varying) {
        VaryingWitness w;
        for (const auto& group : report.groups)
            if (group.sums.size() >= 2) {
                w.sums = group.sums;
                break;
            }
        report.certificate = Certificate{
            target, Verdict::EtaNontrivial, w,
            {"two arithmetic Teichmueller curves in the stratum have distinct Lyapunov sums",
             "a trivial eta would force one ratio (lambda.C)/(eta.C) for every Teichmueller curve",
             "the distinct sums are assumed to lie in one connected component; grouping "
             "separates spin parity only, not hyperelliptic components"},
            "varying-test"};
    }
    return report;
}

}  // namespace strata
