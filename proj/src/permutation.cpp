#include "origami/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace origami {

Perm::Perm(int n) : img_(n) {
    std::iota(img_.begin(), img_.end(), 0);
}

Perm Perm::from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<char> seen(n, 0);
    for (int x : images) {
        if (x < 0 || x >= n || seen[x])
            throw std::invalid_argument("image table is not a bijection");
        seen[x] = 1;
    }
    return Perm(std::move(images), true);
}

Perm Perm::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
    return Perm(std::move(inv), true);
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

std::vector<std::vector<int>> Perm::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(img_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        for (int j = i; !seen[j]; j = img_[j]) {
            seen[j] = 1;
            cyc.push_back(j);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::string Perm::cycle_string() const {
    std::string s;
    for (const auto& cyc : cycles()) {
        if (cyc.size() < 2) continue;
        s += '(';
        for (size_t k = 0; k < cyc.size(); ++k) {
            if (k) s += ' ';
            s += std::to_string(cyc[k] + 1);
        }
        s += ')';
    }
    return s.empty() ? "()" : s;
}

Perm compose(const Perm& f, const Perm& g) {
    if (f.degree() != g.degree())
        throw std::invalid_argument("composing permutations of different degree");
    std::vector<int> img(f.degree());
    for (int i = 0; i < f.degree(); ++i) img[i] = f(g(i));
    return Perm::from_images(std::move(img));
}

}  // namespace origami
