#ifndef ORIGAMI_ORIGAMI_HPP
#define ORIGAMI_ORIGAMI_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "origami/permutation.hpp"

namespace origami {

/// Raised by parse_origami; `kind` distinguishes the three failure modes
/// the text format can exhibit.
class ParseError : public std::runtime_error {
public:
    enum class Kind { Syntax, NotBijective, NotTransitive };

    ParseError(Kind k, const std::string& msg)
        : std::runtime_error(msg), kind_(k) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// A square-tiled translation surface: n unit squares glued by the
/// right-neighbor permutation h and the upper-neighbor permutation v.
/// The pair must act transitively (connected surface); instances are
/// immutable after construction.
class Origami {
public:
    /// Validates degrees and transitivity; throws ParseError(NotTransitive)
    /// on a disconnected pair, std::invalid_argument on degree mismatch.
    static Origami make(Perm h, Perm v);

    int n() const { return h_.degree(); }
    const Perm& h() const { return h_; }
    const Perm& v() const { return v_; }

    bool operator==(const Origami& o) const { return h_ == o.h_ && v_ == o.v_; }
    bool operator!=(const Origami& o) const { return !(*this == o); }
    bool operator<(const Origami& o) const {
        if (h_ != o.h_) return h_ < o.h_;
        return v_ < o.v_;
    }

private:
    Origami(Perm h, Perm v) : h_(std::move(h)), v_(std::move(v)) {}
    Perm h_, v_;
};

/// Orders of the zeros of the abelian differential, plus the genus
/// computed from them.  m_q is the total multiplicity of the induced
/// quadratic differential q = w^2 (4g-4 for genus >= 2, 0 on the torus).
struct StratumSignature {
    std::vector<int> zero_orders;  // sorted ascending
    int genus = 1;
    int m_q = 0;

    bool operator==(const StratumSignature& o) const {
        return zero_orders == o.zero_orders && genus == o.genus && m_q == o.m_q;
    }
};

/// Row-generator Hermite normal form [[a,b],[0,d]] of a rank-2 sublattice
/// of Z^2, with a,d > 0 and 0 <= b < d.
struct Hnf2 {
    std::int64_t a = 0, b = 0, d = 0;
    bool operator==(const Hnf2& o) const { return a == o.a && b == o.b && d == o.d; }
};

// --- text format ---------------------------------------------------------
//
//   [n: <N>]
//   h: <spec>
//   v: <spec>
//
// where <spec> is either one-line image notation ("2 1 3") or disjoint
// cycles ("(1 2)(3)", fixed points omissible).  N defaults to the largest
// integer mentioned.

Origami parse_origami(const std::string& text);

/// One-line image notation, "h: ...\nv: ...\n"; parse_origami inverts it.
std::string serialize(const Origami& o);

// --- intrinsic invariants -------------------------------------------------

/// The corner permutation s = v . h . v^-1 . h^-1 (rightmost applied
/// first).  The cycle of s through square i lists the squares whose
/// bottom-left corners are glued to one surface vertex; the cone angle
/// there is 2*pi*(cycle length).
Perm vertex_permutation(const Origami& o);

/// Computes the genus both from the vertex cycles (Euler characteristic)
/// and from the zero orders; throws std::logic_error if they disagree.
StratumSignature stratum(const Origami& o);

/// Lexicographically smallest relabeling of o: for each base square,
/// relabel by BFS discovery order over the moves [h, v, h^-1, v^-1] and
/// keep the minimum of (h-images ++ v-images).  Constant on isomorphism
/// classes and idempotent.
Origami canonical_form(const Origami& o);

bool is_isomorphic(const Origami& a, const Origami& b);

/// Lattice of translation vectors of closed loops on the surface, as a
/// Hermite normal form.  Positions are assigned along a BFS spanning tree
/// rooted at `root`; the result does not depend on the root.
Hnf2 holonomy_lattice(const Origami& o, int root = 0);

/// True iff the monodromy group <h,v> acts regularly, i.e. has order
/// exactly n.  The closure stops as soon as n+1 elements are seen.
bool is_normal(const Origami& o);

}  // namespace origami

#endif
