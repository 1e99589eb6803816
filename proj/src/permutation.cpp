#include "gyro/permutation.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "gyro/error.hpp"

namespace gyro {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = degree();
    std::vector<char> seen(n, 0);
    for (int x : images_) {
        if (x < 0 || x >= n)
            throw GyroError("permutation image " + std::to_string(x) + " out of range [0," +
                            std::to_string(n) + ")");
        if (seen[x])
            throw GyroError("permutation repeats image " + std::to_string(x));
        seen[x] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
    for (int x = 0; x < degree(); ++x)
        if (images_[x] != x) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int x = 0; x < degree(); ++x) inv[images_[x]] = x;
    return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& next) const {
    if (next.degree() != degree()) throw GyroError("composing permutations of unequal degree");
    std::vector<int> out(images_.size());
    for (int x = 0; x < degree(); ++x) out[x] = next.images_[images_[x]];
    return Permutation(std::move(out));
}

}  // namespace gyro
