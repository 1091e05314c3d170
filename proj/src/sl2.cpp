#include "origami/sl2.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace origami {

std::string Mat2::to_string() const {
    return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" +
           std::to_string(c) + "," + std::to_string(d) + "]]";
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Direction::Direction(int x, int y) {
    if (x == 0 && y == 0) throw std::invalid_argument("direction (0,0)");
    int g = std::gcd(std::abs(x), std::abs(y));
    x /= g;
    y /= g;
    if (x < 0 || (x == 0 && y < 0)) { x = -x; y = -y; }
    dx = x;
    dy = y;
}

Origami apply_T(const Origami& o) {
    return Origami::make(o.h(), compose(o.v(), o.h().inverse()));
}

Origami apply_T_inverse(const Origami& o) {
    return Origami::make(o.h(), compose(o.v(), o.h()));
}

Origami apply_S(const Origami& o) {
    return Origami::make(o.v().inverse(), o.h());
}

Origami apply_S_inverse(const Origami& o) {
    return Origami::make(o.v(), o.h().inverse());
}

std::vector<Generator> factor_sl2(const Mat2& A) {
    if (A.det() != 1) throw std::invalid_argument("matrix is not unimodular: " + A.to_string());
    // Peel generators off the left while reducing M to the identity,
    // keeping the invariant A = product(word) * M.
    std::vector<Generator> word;
    Mat2 M = A;
    auto emit_T = [&](std::int64_t k) {
        for (std::int64_t i = 0; i < std::abs(k); ++i)
            word.push_back(k > 0 ? Generator::T : Generator::TInv);
        M.a -= k * M.c;
        M.b -= k * M.d;
    };
    auto emit_S = [&] {
        word.push_back(Generator::S);
        // S^-1 * M
        M = Mat2{M.c, M.d, -M.a, -M.b};
    };
    while (M.c != 0) {
        std::int64_t k = M.a / M.c;  // makes |a - k c| < |c|
        if (M.a % M.c != 0 && ((M.a < 0) != (M.c < 0))) k -= 1;
        emit_T(k);
        emit_S();
    }
    if (M.a == 1) {
        emit_T(M.b);
    } else {
        // M = [[-1,b],[0,-1]] = S^2 T^{-b}
        emit_S();
        emit_S();
        emit_T(M.b);
    }

    Mat2 check = Mat2::identity();
    for (Generator g : word) {
        switch (g) {
            case Generator::T: check = check * Mat2::shear(); break;
            case Generator::TInv: check = check * Mat2{1, -1, 0, 1}; break;
            case Generator::S: check = check * Mat2::rotation(); break;
        }
    }
    if (!(check == A)) throw std::logic_error("factorization check failed for " + A.to_string());
    return word;
}

Origami apply_matrix(const Origami& o, const Mat2& A) {
    const auto word = factor_sl2(A);
    Origami result = o;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        switch (*it) {
            case Generator::T: result = apply_T(result); break;
            case Generator::TInv: result = apply_T_inverse(result); break;
            case Generator::S: result = apply_S(result); break;
        }
    }
    return result;
}

namespace {

std::int64_t ext_gcd(std::int64_t p, std::int64_t q, std::int64_t& s, std::int64_t& t) {
    if (q == 0) { s = p >= 0 ? 1 : -1; t = 0; return std::abs(p); }
    std::int64_t s2, t2;
    std::int64_t g = ext_gcd(q, p % q, s2, t2);
    s = t2;
    t = s2 - (p / q) * t2;
    return g;
}

}  // namespace

Mat2 direction_matrix(const Direction& d) {
    if (d.horizontal()) return Mat2::identity();
    if (d.vertical()) return Mat2{0, 1, -1, 0};  // S^-1, sends (0,1) to (1,0)
    // Smallest positive x with x dx + y dy = 1.
    std::int64_t x0 = 0, y0 = 0;
    ext_gcd(d.dx, d.dy, x0, y0);
    const std::int64_t mod = std::abs(d.dy);
    std::int64_t x = ((x0 % mod) + mod) % mod;
    if (x == 0) x = mod;
    std::int64_t y = (1 - x * d.dx) / d.dy;
    return Mat2{x, y, -d.dy, d.dx};
}

Origami reduce_to_horizontal(const Origami& o, const Direction& d) {
    if (d.horizontal()) return o;
    if (d.vertical()) return apply_S(o);
    return apply_matrix(o, direction_matrix(d));
}

namespace {

std::vector<Origami> orbit_bfs(const Origami& o) {
    std::vector<Origami> order;
    std::set<Origami> seen;
    std::queue<Origami> queue;
    Origami start = canonical_form(o);
    seen.insert(start);
    order.push_back(start);
    queue.push(start);
    while (!queue.empty()) {
        Origami cur = queue.front();
        queue.pop();
        for (const Origami& next : {apply_S(cur), apply_T(cur), apply_T_inverse(cur)}) {
            Origami canon = canonical_form(next);
            if (seen.insert(canon).second) {
                order.push_back(canon);
                queue.push(canon);
            }
        }
    }
    return order;
}

}  // namespace

std::vector<Origami> orbit_members_bfs(const Origami& o) { return orbit_bfs(o); }

OrbitRecord orbit(const Origami& o) {
    OrbitRecord rec;
    rec.members = orbit_bfs(o);
    std::sort(rec.members.begin(), rec.members.end());
    rec.n = o.n();
    rec.stratum = stratum(o);
    return rec;
}

double disk_param(double r) {
    if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("disk radius must lie in [0,1)");
    return std::log((1.0 + r) / (1.0 - r));
}

}  // namespace origami
