#ifndef ORIGAMI_PERMUTATION_HPP
#define ORIGAMI_PERMUTATION_HPP

#include <string>
#include <vector>

namespace origami {

/// A permutation of {0, ..., n-1}, stored as its image table.
///
/// Squares are 1-indexed in all text formats; the off-by-one conversion
/// happens at parse/serialize boundaries only.
class Perm {
public:
    Perm() = default;

    /// Identity on n points.
    explicit Perm(int n);

    /// Takes ownership of an image table. Throws std::invalid_argument
    /// if the table is not a bijection of {0..n-1}.
    static Perm from_images(std::vector<int> images);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    Perm inverse() const;
    bool is_identity() const;

    /// Cycles of length >= 1, each rotated to start at its smallest
    /// element, ordered by that element.
    std::vector<std::vector<int>> cycles() const;

    /// Disjoint-cycle notation with 1-indexed entries, fixed points
    /// omitted; "()" for the identity.
    std::string cycle_string() const;

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

private:
    explicit Perm(std::vector<int> img, bool) : img_(std::move(img)) {}
    std::vector<int> img_;
};

/// compose(f, g) applies g first: x -> f(g(x)).
Perm compose(const Perm& f, const Perm& g);

inline Perm operator*(const Perm& f, const Perm& g) { return compose(f, g); }

}  // namespace origami

#endif
