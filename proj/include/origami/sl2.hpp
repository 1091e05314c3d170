#ifndef ORIGAMI_SL2_HPP
#define ORIGAMI_SL2_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "origami/origami.hpp"

namespace origami {

/// An integer matrix [[a,b],[c,d]] acting on column vectors.
struct Mat2 {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    std::int64_t det() const { return a * d - b * c; }
    bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    std::string to_string() const;

    static Mat2 identity() { return {}; }
    static Mat2 shear() { return {1, 1, 0, 1}; }      // T
    static Mat2 rotation() { return {0, -1, 1, 0}; }  // S
};

Mat2 operator*(const Mat2& x, const Mat2& y);

/// A rational direction, unoriented (theta in R mod pi).  Normalized so
/// gcd(|dx|,|dy|) = 1 and dx > 0, or (dx,dy) = (0,1).
struct Direction {
    int dx = 1, dy = 0;

    Direction() = default;
    /// Throws std::invalid_argument on (0,0).
    Direction(int x, int y);

    bool horizontal() const { return dy == 0; }
    bool vertical() const { return dx == 0; }
    std::int64_t norm2() const { return std::int64_t(dx) * dx + std::int64_t(dy) * dy; }
    bool operator==(const Direction& o) const { return dx == o.dx && dy == o.dy; }
    bool operator<(const Direction& o) const { return dx != o.dx ? dx < o.dx : dy < o.dy; }
};

// --- generators -------------------------------------------------------------
//
// T = [[1,1],[0,1]] maps (h,v) to (h, v h^-1); it fixes the horizontal
// cylinder decomposition square-for-square.  S = [[0,-1],[1,0]] maps (h,v)
// to (v^-1, h); the horizontal cylinders of S(o) are the vertical
// cylinders of o.  Those two facts pin the sign conventions and are
// asserted in the test suite.

Origami apply_T(const Origami& o);
Origami apply_T_inverse(const Origami& o);
Origami apply_S(const Origami& o);
Origami apply_S_inverse(const Origami& o);

/// Applies A (det 1 required) by factoring it into T, T^-1 and S through
/// the Euclidean algorithm on the first column.  Results for different
/// factorizations agree up to isomorphism.
Origami apply_matrix(const Origami& o, const Mat2& A);

/// The factorization used by apply_matrix, for inspection: A equals the
/// product of the returned generators from left to right.
enum class Generator { T, TInv, S };
std::vector<Generator> factor_sl2(const Mat2& A);

/// A unimodular matrix sending (dx,dy) to (1,0): [[x,y],[-dy,dx]] with
/// x dx + y dy = 1 and x the smallest positive solution.  Any two valid
/// choices differ by a left power of T, which leaves the induced
/// horizontal decomposition unchanged.
Mat2 direction_matrix(const Direction& d);

/// The orbit element whose horizontal direction realizes d on o:
/// apply_matrix(o, direction_matrix(d)), except that the vertical
/// direction goes through a single S to keep normalization total.
Origami reduce_to_horizontal(const Origami& o, const Direction& d);

/// An SL(2,Z) orbit: members are canonical forms, sorted.  The property
/// flags start out unevaluated and are filled by the properties layer.
struct OrbitRecord {
    std::vector<Origami> members;
    StratumSignature stratum;
    int n = 0;

    bool balanced = false;
    bool corners = false;
    bool contains_normal = false;
    bool flags_evaluated = false;

    int size() const { return static_cast<int>(members.size()); }
};

/// Breadth-first closure of canonical_form(o) under S, T and T^-1 with
/// canonical-form deduplication.  Member order: discovery order is used
/// while searching, the result is sorted by serialization.
OrbitRecord orbit(const Origami& o);

/// Orbit members in BFS discovery order from canonical_form(o),
/// neighbors expanded as [S, T, T^-1].  Used where "first failing
/// member" must be deterministic.
std::vector<Origami> orbit_members_bfs(const Origami& o);

/// Hyperbolic displacement of the disk point at radius r: log((1+r)/(1-r)).
/// Throws std::invalid_argument outside [0,1).
double disk_param(double r);

}  // namespace origami

#endif
