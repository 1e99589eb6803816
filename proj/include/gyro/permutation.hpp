#pragma once

#include <compare>
#include <vector>

namespace gyro {

// A bijection on {0..n-1}, stored as its image list.
class Permutation {
public:
    Permutation() = default;

    // Throws GyroError unless `images` is a bijection on {0..n-1}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[x]; }

    bool is_identity() const;
    Permutation inverse() const;

    // Composition: (a.then(b))(x) == b(a(x)).
    Permutation then(const Permutation& next) const;

    const std::vector<int>& images() const { return images_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

}  // namespace gyro
