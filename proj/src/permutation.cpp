#include "cohomlab/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cohomlab {

Permutation::Permutation(int lo, std::vector<int> images) : lo_(lo), images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < lo_ || v > hi() || seen[static_cast<size_t>(v - lo_)])
            throw std::domain_error("images do not describe a bijection of the ground set");
        seen[static_cast<size_t>(v - lo_)] = true;
    }
}

Permutation Permutation::identity(int lo, int hi) {
    std::vector<int> img(static_cast<size_t>(hi - lo + 1));
    std::iota(img.begin(), img.end(), lo);
    return Permutation(lo, std::move(img));
}

Permutation Permutation::transposition(int lo, int hi, int a, int b) {
    Permutation p = identity(lo, hi);
    std::swap(p.images_[static_cast<size_t>(a - lo)], p.images_[static_cast<size_t>(b - lo)]);
    return p;
}

Permutation Permutation::from_cycles(int lo, int hi, const std::vector<std::vector<int>>& cycles) {
    Permutation p = identity(lo, hi);
    for (const auto& cyc : cycles)
        for (size_t i = 0; i < cyc.size(); ++i)
            p.images_[static_cast<size_t>(cyc[i] - lo)] = cyc[(i + 1) % cyc.size()];
    // re-run the invariant check
    return Permutation(lo, p.images_);
}

Permutation Permutation::random(int lo, int hi, std::mt19937_64& rng) {
    std::vector<int> img(static_cast<size_t>(hi - lo + 1));
    std::iota(img.begin(), img.end(), lo);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(lo, std::move(img));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (lo_ != other.lo_ || images_.size() != other.images_.size())
        throw std::domain_error("ground set mismatch in composition");
    std::vector<int> img(images_.size());
    for (int x = lo_; x <= hi(); ++x) img[static_cast<size_t>(x - lo_)] = (*this)(other(x));
    return Permutation(lo_, std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(images_.size());
    for (int x = lo_; x <= hi(); ++x) img[static_cast<size_t>((*this)(x)-lo_)] = x;
    return Permutation(lo_, std::move(img));
}

bool Permutation::is_identity() const {
    for (int x = lo_; x <= hi(); ++x)
        if ((*this)(x) != x) return false;
    return true;
}

Partition cycle_type(const Permutation& p) {
    std::vector<bool> seen(static_cast<size_t>(p.ground_size()), false);
    std::vector<int> lengths;
    for (int x = p.lo(); x <= p.hi(); ++x) {
        if (seen[static_cast<size_t>(x - p.lo())]) continue;
        int len = 0, y = x;
        do {
            seen[static_cast<size_t>(y - p.lo())] = true;
            y = p(y);
            ++len;
        } while (y != x);
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return Partition(lengths);
}

std::vector<int> coxeter_word(const Permutation& p) {
    // Repeatedly right-multiply by adjacent transpositions until the identity
    // is reached: p o s_{x_1} o ... o s_{x_r} = id, hence
    // p = s_{x_r} o ... o s_{x_1}.
    std::vector<int> img(static_cast<size_t>(p.ground_size()));
    for (int x = p.lo(); x <= p.hi(); ++x) img[static_cast<size_t>(x - p.lo())] = p(x);
    std::vector<int> picked;
    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t i = 0; i + 1 < img.size(); ++i) {
            if (img[i] > img[i + 1]) {
                std::swap(img[i], img[i + 1]);
                picked.push_back(p.lo() + static_cast<int>(i));
                progress = true;
            }
        }
    }
    std::reverse(picked.begin(), picked.end());
    return picked;
}

Permutation class_representative(int lo, const Partition& type) {
    std::vector<std::vector<int>> cycles;
    int next = lo;
    for (int len : type.parts()) {
        std::vector<int> cyc(static_cast<size_t>(len));
        std::iota(cyc.begin(), cyc.end(), next);
        next += len;
        cycles.push_back(std::move(cyc));
    }
    return Permutation::from_cycles(lo, next - 1, cycles);
}

}  // namespace cohomlab
