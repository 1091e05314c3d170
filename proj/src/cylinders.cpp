#include "origami/cylinders.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace origami {

double Cylinder::geometric_length() const {
    return width * std::sqrt(static_cast<double>(len2_scale));
}

double Cylinder::geometric_height() const {
    return height / std::sqrt(static_cast<double>(len2_scale));
}

int CylinderDecomposition::total_area() const {
    int sum = 0;
    for (const auto& c : cylinders) sum += c.area();
    return sum;
}

bool CylinderDecomposition::balanced() const {
    for (const auto& c : cylinders)
        if (c.height != cylinders.front().height) return false;
    return true;
}

std::vector<std::pair<int, int>> CylinderDecomposition::width_height_multiset() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& c : cylinders) out.emplace_back(c.width, c.height);
    std::sort(out.begin(), out.end());
    return out;
}

CylinderDecomposition horizontal_cylinders(const Origami& o) {
    const int n = o.n();
    const Perm sigma = vertex_permutation(o);
    const auto rows = o.h().cycles();
    const int nrows = static_cast<int>(rows.size());

    std::vector<int> row_of(n);
    for (int r = 0; r < nrows; ++r)
        for (int sq : rows[r]) row_of[sq] = r;

    // Union rows across regular boundary circles.
    std::vector<int> parent(nrows);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int r = 0; r < nrows; ++r) {
        bool regular = true;
        for (int sq : rows[r]) {
            int corner = o.v()(sq);
            if (sigma(corner) != corner) { regular = false; break; }
        }
        if (regular) {
            int above = row_of[o.v()(rows[r].front())];
            parent[find(r)] = find(above);
        }
    }

    std::map<int, Cylinder> classes;  // keyed by class root
    for (int r = 0; r < nrows; ++r) {
        int root = find(r);
        Cylinder& cyl = classes[root];
        if (cyl.width == 0) cyl.width = static_cast<int>(rows[r].size());
        if (cyl.width != static_cast<int>(rows[r].size()))
            throw std::logic_error("regular circle joins rows of different lengths");
        cyl.height += 1;
        cyl.squares.insert(cyl.squares.end(), rows[r].begin(), rows[r].end());
    }

    CylinderDecomposition dec{Direction(1, 0), {}, o};
    for (auto& [root, cyl] : classes) {
        std::sort(cyl.squares.begin(), cyl.squares.end());
        cyl.len2_scale = 1;
        dec.cylinders.push_back(std::move(cyl));
    }
    std::sort(dec.cylinders.begin(), dec.cylinders.end(),
              [](const Cylinder& a, const Cylinder& b) { return a.squares.front() < b.squares.front(); });
    if (dec.total_area() != n) throw std::logic_error("cylinder areas do not partition the squares");
    return dec;
}

CylinderDecomposition cylinders_in_direction(const Origami& o, const Direction& d) {
    CylinderDecomposition dec = horizontal_cylinders(reduce_to_horizontal(o, d));
    dec.direction = d;
    for (auto& c : dec.cylinders) c.len2_scale = d.norm2();
    return dec;
}

std::vector<int> horizontal_saddle_connections(const Origami& o) {
    const Perm sigma = vertex_permutation(o);
    if (sigma.is_identity())
        throw std::invalid_argument("surface has no singularities; no saddle connections exist");
    std::vector<int> lengths;
    for (const auto& row : o.h().cycles()) {
        const int w = static_cast<int>(row.size());
        std::vector<int> singular_at;
        for (int k = 0; k < w; ++k)
            if (sigma(row[k]) != row[k]) singular_at.push_back(k);
        if (singular_at.empty()) continue;  // circle carries no singularity
        for (size_t i = 0; i < singular_at.size(); ++i) {
            int from = singular_at[i];
            int to = singular_at[(i + 1) % singular_at.size()];
            int gap = (to - from + w) % w;
            lengths.push_back(gap == 0 ? w : gap);
        }
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

Ratio saddle_ratio(const Origami& o, int max_norm) {
    if (max_norm < 1) throw std::invalid_argument("max_norm must be positive");
    Ratio best(0);
    for (const Direction& d : directions_up_to(max_norm)) {
        const Origami reduced = reduce_to_horizontal(o, d);
        const auto lengths = horizontal_saddle_connections(reduced);
        Ratio ratio(lengths.back(), lengths.front());
        if (ratio > best) best = ratio;
    }
    return best;
}

double ScaledReal::value() const { return coeff.to_double() * std::exp(exponent); }

RayModulus ray_modulus(double mod0, double t) {
    if (!(mod0 > 0.0)) throw std::invalid_argument("modulus must be positive");
    const double m = std::exp(2.0 * t) * mod0;
    return {m, 1.0 / m};
}

RayModulusExact ray_modulus_exact(const Ratio& mod0, double t) {
    if (!(mod0 > Ratio(0))) throw std::invalid_argument("modulus must be positive");
    return {ScaledReal{mod0, 2.0 * t}, ScaledReal{Ratio(1) / mod0, -2.0 * t}};
}

std::vector<Direction> directions_up_to(int max_norm) {
    if (max_norm < 1) throw std::invalid_argument("max_norm must be positive");
    std::vector<Direction> out;
    out.emplace_back(1, 0);
    out.emplace_back(0, 1);
    for (int dx = 1; dx <= max_norm; ++dx)
        for (int mag = 1; mag <= max_norm; ++mag)
            for (int dy : {mag, -mag})
                if (std::gcd(dx, mag) == 1) out.emplace_back(dx, dy);
    return out;
}

}  // namespace origami
