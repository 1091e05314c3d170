#include "origami/origami.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace origami {

namespace {

bool pair_is_transitive(const Perm& h, const Perm& v) {
    const int n = h.degree();
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : {h(x), v(x), h.inverse()(x), v.inverse()(x)}) {
            if (!seen[y]) {
                seen[y] = 1;
                ++count;
                stack.push_back(y);
            }
        }
    }
    return count == n;
}

}  // namespace

Origami Origami::make(Perm h, Perm v) {
    if (h.degree() != v.degree())
        throw std::invalid_argument("h and v act on different numbers of squares");
    if (h.degree() == 0)
        throw std::invalid_argument("empty origami");
    if (!pair_is_transitive(h, v))
        throw ParseError(ParseError::Kind::NotTransitive,
                         "the pair (h, v) does not act transitively: the surface is disconnected");
    return Origami(std::move(h), std::move(v));
}

// --- parsing ---------------------------------------------------------------

namespace {

struct LineSpec {
    bool cycle_notation = false;
    std::vector<int> ints;                   // one-line images, 1-indexed
    std::vector<std::vector<int>> cycles;    // cycle entries, 1-indexed
    int max_mentioned = 0;
};

[[noreturn]] void syntax_error(const std::string& where, const std::string& what) {
    throw ParseError(ParseError::Kind::Syntax, "line " + where + ": " + what);
}

LineSpec parse_spec(const std::string& body, const std::string& where) {
    LineSpec spec;
    spec.cycle_notation = body.find('(') != std::string::npos;
    if (!spec.cycle_notation) {
        std::istringstream in(body);
        std::string tok;
        while (in >> tok) {
            char* end = nullptr;
            long val = std::strtol(tok.c_str(), &end, 10);
            if (*end != '\0' || val < 1)
                syntax_error(where, "expected a positive integer, got '" + tok + "'");
            spec.ints.push_back(static_cast<int>(val));
            spec.max_mentioned = std::max(spec.max_mentioned, static_cast<int>(val));
        }
        if (spec.ints.empty()) syntax_error(where, "empty permutation spec");
        return spec;
    }
    size_t i = 0;
    auto skip_ws = [&] { while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i; };
    skip_ws();
    while (i < body.size()) {
        if (body[i] != '(') syntax_error(where, "expected '(' in cycle notation");
        ++i;
        std::vector<int> cyc;
        for (;;) {
            skip_ws();
            if (i >= body.size()) syntax_error(where, "unterminated cycle");
            if (body[i] == ')') { ++i; break; }
            size_t j = i;
            while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j]))) ++j;
            if (j == i) syntax_error(where, std::string("unexpected character '") + body[i] + "' in cycle");
            int val = std::atoi(body.substr(i, j - i).c_str());
            if (val < 1) syntax_error(where, "squares are numbered from 1");
            cyc.push_back(val);
            spec.max_mentioned = std::max(spec.max_mentioned, val);
            i = j;
        }
        if (!cyc.empty()) spec.cycles.push_back(std::move(cyc));
        skip_ws();
    }
    return spec;
}

Perm build_perm(const LineSpec& spec, int n, const std::string& where) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    if (!spec.cycle_notation) {
        for (size_t i = 0; i < spec.ints.size(); ++i) img[i] = spec.ints[i] - 1;
        std::vector<char> seen(n, 0);
        for (int x : img) {
            if (seen[x])
                throw ParseError(ParseError::Kind::NotBijective,
                                 "line " + where + ": image " + std::to_string(x + 1) + " repeats; not a bijection");
            seen[x] = 1;
        }
        return Perm::from_images(std::move(img));
    }
    std::vector<char> used(n, 0);
    for (const auto& cyc : spec.cycles) {
        for (size_t k = 0; k < cyc.size(); ++k) {
            int a = cyc[k] - 1;
            int b = cyc[(k + 1) % cyc.size()] - 1;
            if (used[a])
                throw ParseError(ParseError::Kind::NotBijective,
                                 "line " + where + ": square " + std::to_string(a + 1) + " appears in two cycles");
            used[a] = 1;
            img[a] = b;
        }
    }
    return Perm::from_images(std::move(img));
}

}  // namespace

Origami parse_origami(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n_override = 0;
    bool have_h = false, have_v = false;
    LineSpec h_spec, v_spec;
    std::string h_where, v_where;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        size_t colon = line.find(':');
        if (colon == std::string::npos)
            syntax_error(std::to_string(lineno), "expected 'h:', 'v:' or 'n:' prefix");
        std::string key = line.substr(first, colon - first);
        std::string body = line.substr(colon + 1);
        std::string where = std::to_string(lineno) + " (" + key + ")";
        if (key == "n") {
            char* end = nullptr;
            long val = std::strtol(body.c_str(), &end, 10);
            while (*end && std::isspace(static_cast<unsigned char>(*end))) ++end;
            if (*end != '\0' || val < 1) syntax_error(where, "invalid square count");
            n_override = static_cast<int>(val);
        } else if (key == "h") {
            if (have_h) syntax_error(where, "duplicate h line");
            h_spec = parse_spec(body, where);
            h_where = where;
            have_h = true;
        } else if (key == "v") {
            if (have_v) syntax_error(where, "duplicate v line");
            v_spec = parse_spec(body, where);
            v_where = where;
            have_v = true;
        } else {
            syntax_error(where, "unknown key '" + key + "'");
        }
    }
    if (!have_h || !have_v)
        throw ParseError(ParseError::Kind::Syntax, "input must contain an 'h:' and a 'v:' line");
    int n = std::max({h_spec.max_mentioned, v_spec.max_mentioned,
                      static_cast<int>(h_spec.ints.size()), static_cast<int>(v_spec.ints.size())});
    if (n_override) {
        if (n_override < n)
            throw ParseError(ParseError::Kind::Syntax,
                             "n: " + std::to_string(n_override) + " is smaller than the largest square mentioned (" +
                                 std::to_string(n) + ")");
        n = n_override;
    }
    Perm h = build_perm(h_spec, n, h_where);
    Perm v = build_perm(v_spec, n, v_where);
    return Origami::make(std::move(h), std::move(v));
}

std::string serialize(const Origami& o) {
    auto images = [](const Perm& p) {
        std::string s;
        for (int i = 0; i < p.degree(); ++i) {
            if (i) s += ' ';
            s += std::to_string(p(i) + 1);
        }
        return s;
    };
    return "h: " + images(o.h()) + "\nv: " + images(o.v()) + "\n";
}

// --- invariants ------------------------------------------------------------

Perm vertex_permutation(const Origami& o) {
    return compose(o.v(), compose(o.h(), compose(o.v().inverse(), o.h().inverse())));
}

StratumSignature stratum(const Origami& o) {
    const auto cyc = vertex_permutation(o).cycles();
    StratumSignature sig;
    for (const auto& c : cyc)
        if (c.size() > 1) sig.zero_orders.push_back(static_cast<int>(c.size()) - 1);
    std::sort(sig.zero_orders.begin(), sig.zero_orders.end());

    const int n = o.n();
    const int vertices = static_cast<int>(cyc.size());
    if ((n - vertices) % 2 != 0)
        throw std::logic_error("vertex count parity violates the Euler characteristic");
    const int genus_euler = 1 + (n - vertices) / 2;
    const int degree_sum = std::accumulate(sig.zero_orders.begin(), sig.zero_orders.end(), 0);
    if (degree_sum % 2 != 0 || 1 + degree_sum / 2 != genus_euler)
        throw std::logic_error("genus from zero orders disagrees with the Euler computation");
    sig.genus = genus_euler;
    sig.m_q = 2 * degree_sum;
    return sig;
}

namespace {

// Relabel by BFS discovery order from `base`, moves tried as h, v, h^-1, v^-1.
void bfs_key(const Origami& o, const Perm& hinv, const Perm& vinv, int base,
             std::vector<int>& old2new, std::vector<int>& new2old,
             std::vector<int>& key) {
    const int n = o.n();
    std::fill(old2new.begin(), old2new.end(), -1);
    old2new[base] = 0;
    new2old[0] = base;
    int assigned = 1;
    for (int k = 0; k < n; ++k) {
        const int x = new2old[k];
        for (int y : {o.h()(x), o.v()(x), hinv(x), vinv(x)}) {
            if (old2new[y] < 0) {
                old2new[y] = assigned;
                new2old[assigned] = y;
                ++assigned;
            }
        }
    }
    for (int i = 0; i < n; ++i) key[old2new[i]] = old2new[o.h()(i)];
    for (int i = 0; i < n; ++i) key[n + old2new[i]] = old2new[o.v()(i)];
}

}  // namespace

Origami canonical_form(const Origami& o) {
    const int n = o.n();
    const Perm hinv = o.h().inverse(), vinv = o.v().inverse();
    std::vector<int> old2new(n), new2old(n), key(2 * n), best;
    for (int base = 0; base < n; ++base) {
        bfs_key(o, hinv, vinv, base, old2new, new2old, key);
        if (best.empty() || key < best) best = key;
    }
    std::vector<int> h_img(best.begin(), best.begin() + n);
    std::vector<int> v_img(best.begin() + n, best.end());
    return Origami::make(Perm::from_images(std::move(h_img)), Perm::from_images(std::move(v_img)));
}

bool is_isomorphic(const Origami& a, const Origami& b) {
    if (a.n() != b.n()) return false;
    return canonical_form(a) == canonical_form(b);
}

namespace {

struct Lattice2 {
    std::int64_t a = 0, b = 0, d = 0;  // rows (a,b) and (0,d)

    static std::int64_t ext_gcd(std::int64_t x, std::int64_t y, std::int64_t& s, std::int64_t& t) {
        if (y == 0) { s = x >= 0 ? 1 : -1; t = 0; return std::abs(x); }
        std::int64_t s2, t2;
        std::int64_t g = ext_gcd(y, x % y, s2, t2);
        s = t2;
        t = s2 - (x / y) * t2;
        return g;
    }

    void add(std::int64_t x, std::int64_t y) {
        if (x == 0 && y == 0) return;
        if (x < 0) { x = -x; y = -y; }
        if (x == 0) { d = std::gcd(d, std::abs(y)); return; }
        if (a == 0) { a = x; b = y; return; }
        std::int64_t s, t;
        std::int64_t g = ext_gcd(a, x, s, t);
        std::int64_t z = (a / g) * y - (x / g) * b;
        b = s * b + t * y;
        a = g;
        d = std::gcd(d, std::abs(z));
    }

    Hnf2 normal_form() const {
        if (a == 0 || d == 0)
            throw std::logic_error("holonomy lattice is not full rank");
        std::int64_t bb = ((b % d) + d) % d;
        return Hnf2{a, bb, d};
    }
};

}  // namespace

Hnf2 holonomy_lattice(const Origami& o, int root) {
    const int n = o.n();
    if (root < 0 || root >= n) throw std::invalid_argument("root square out of range");
    const Perm hinv = o.h().inverse(), vinv = o.v().inverse();
    std::vector<std::int64_t> px(n), py(n);
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    seen[root] = 1;
    q.push(root);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        const int moves[4] = {o.h()(x), o.v()(x), hinv(x), vinv(x)};
        const std::int64_t dx[4] = {1, 0, -1, 0};
        const std::int64_t dy[4] = {0, 1, 0, -1};
        for (int k = 0; k < 4; ++k) {
            int y = moves[k];
            if (!seen[y]) {
                seen[y] = 1;
                px[y] = px[x] + dx[k];
                py[y] = py[x] + dy[k];
                q.push(y);
            }
        }
    }
    Lattice2 lat;
    for (int i = 0; i < n; ++i) {
        lat.add(px[i] + 1 - px[o.h()(i)], py[i] - py[o.h()(i)]);
        lat.add(px[i] - px[o.v()(i)], py[i] + 1 - py[o.v()(i)]);
    }
    return lat.normal_form();
}

bool is_normal(const Origami& o) {
    const int n = o.n();
    std::set<std::vector<int>> group;
    std::vector<std::vector<int>> frontier;
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    group.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& g : frontier) {
            for (const Perm* gen : {&o.h(), &o.v()}) {
                std::vector<int> prod(n);
                for (int i = 0; i < n; ++i) prod[i] = (*gen)(g[i]);
                if (group.insert(prod).second) {
                    if (static_cast<int>(group.size()) > n) return false;
                    next.push_back(std::move(prod));
                }
            }
        }
        frontier = std::move(next);
    }
    return static_cast<int>(group.size()) == n;
}

}  // namespace origami
