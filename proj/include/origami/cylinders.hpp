#ifndef ORIGAMI_CYLINDERS_HPP
#define ORIGAMI_CYLINDERS_HPP

#include <vector>

#include "origami/ratio.hpp"
#include "origami/sl2.hpp"

namespace origami {

/// A maximal flat cylinder.  Combinatorial data (width = circumference in
/// squares, height = rows of squares) refers to the reduced origami whose
/// horizontal direction realizes the cylinder; the geometric values carry
/// the direction's norm back to the original metric.  Lengths are kept as
/// (integer, squared norm) pairs so comparisons stay exact.
struct Cylinder {
    std::vector<int> squares;   // 0-indexed squares of the reduced origami
    int width = 0;
    int height = 0;
    std::int64_t len2_scale = 1;  // dx^2 + dy^2 of the direction

    int area() const { return width * height; }
    /// Squared flat length of the core curve: width^2 * (dx^2+dy^2).
    std::int64_t geometric_length_sq() const {
        return std::int64_t(width) * width * len2_scale;
    }
    /// Squared flat height as an exact fraction: height^2 / (dx^2+dy^2).
    Ratio geometric_height_sq() const {
        return Ratio(std::int64_t(height) * height, len2_scale);
    }
    double geometric_length() const;
    double geometric_height() const;
};

struct CylinderDecomposition {
    Direction direction;
    std::vector<Cylinder> cylinders;  // ordered by smallest square index
    Origami reduced;                  // realizes `direction` horizontally

    int total_area() const;
    /// Equal combinatorial heights across all cylinders.
    bool balanced() const;
    std::vector<std::pair<int, int>> width_height_multiset() const;  // sorted
};

/// Rows are the h-cycles; the boundary circle above a row is regular when
/// the vertex permutation fixes every corner on it, and rows glued across
/// regular circles form one cylinder.  Throws std::logic_error if a
/// regular circle joins rows of different lengths.
CylinderDecomposition horizontal_cylinders(const Origami& o);

/// Reduces d to the horizontal direction of an orbit element and reads
/// the decomposition there; combinatorial data is independent of the
/// reduction word chosen.
CylinderDecomposition cylinders_in_direction(const Origami& o, const Direction& d);

/// Lengths of horizontal saddle connections: gaps between consecutive
/// singular vertices along each corner-level circle that carries at least
/// one singularity.  Throws std::invalid_argument on the torus.
std::vector<int> horizontal_saddle_connections(const Origami& o);

/// Maximum over directions |dx|,|dy| <= max_norm of max/min saddle
/// connection length in that direction (measured on the reduced origami).
/// A lower estimate for the uniform ratio bound a lattice surface admits.
Ratio saddle_ratio(const Origami& o, int max_norm);

/// A positive quantity of the form coeff * e^exponent with the rational
/// part exact; products cancel exactly, so identities like
/// modulus * ext_upper_bound == 1 can be asserted without rounding.
struct ScaledReal {
    Ratio coeff{1};
    double exponent = 0.0;

    double value() const;
    friend ScaledReal operator*(const ScaledReal& a, const ScaledReal& b) {
        return {a.coeff * b.coeff, a.exponent + b.exponent};
    }
    bool is_one() const { return coeff == Ratio(1) && exponent == 0.0; }
};

struct RayModulus {
    double modulus = 0.0;
    double ext_upper_bound = 0.0;
};

/// Modulus of a flat cylinder after time t of the Teichmueller flow,
/// e^{2t} * mod0, and the induced upper bound 1/modulus on the extremal
/// length of its core curve.  Throws std::invalid_argument if mod0 <= 0.
RayModulus ray_modulus(double mod0, double t);

/// Same quantities in exact-coefficient form.
struct RayModulusExact {
    ScaledReal modulus;
    ScaledReal ext_upper_bound;
};
RayModulusExact ray_modulus_exact(const Ratio& mod0, double t);

/// Normalized directions with |dx|,|dy| <= max_norm, in the fixed order
/// (1,0), (0,1), then dx ascending with dy = 1,-1,2,-2,...
std::vector<Direction> directions_up_to(int max_norm);

}  // namespace origami

#endif
