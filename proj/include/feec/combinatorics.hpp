#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "feec/errors.hpp"

namespace feec {

/// Multiplicative sign, value in {+1, -1}.
class Sign {
public:
    Sign() = default;
    explicit Sign(int v) : value_(v >= 0 ? 1 : -1) {
        if (v != 1 && v != -1) throw Malformed("sign must be +1 or -1");
    }
    int value() const { return value_; }
    Sign operator*(Sign o) const { return Sign(value_ * o.value_); }
    Sign& operator*=(Sign o) {
        value_ *= o.value_;
        return *this;
    }
    Sign operator-() const { return Sign(-value_); }
    bool operator==(const Sign&) const = default;

    static Sign plus() { return Sign(1); }
    static Sign minus() { return Sign(-1); }
    /// (-1)^e
    static Sign pow_minus_one(int e) { return (e % 2 == 0) ? plus() : minus(); }

private:
    int value_ = 1;
};

/// The least element of a support set, with a dedicated infinity for the
/// empty support. Infinity compares greater than every finite index.
class FloorIndex {
public:
    static FloorIndex infinity() { return FloorIndex(); }
    static FloorIndex of(int v) {
        FloorIndex f;
        f.finite_ = true;
        f.value_ = v;
        return f;
    }

    bool is_infinite() const { return !finite_; }
    int value() const {
        if (!finite_) throw OutOfRange("floor of empty support");
        return value_;
    }

    friend std::strong_ordering operator<=>(const FloorIndex& a, const FloorIndex& b) {
        if (a.finite_ && b.finite_) return a.value_ <=> b.value_;
        if (a.finite_) return std::strong_ordering::less;       // finite < inf
        if (b.finite_) return std::strong_ordering::greater;    // inf > finite
        return std::strong_ordering::equal;
    }
    friend bool operator==(const FloorIndex& a, const FloorIndex& b) = default;
    friend std::strong_ordering operator<=>(const FloorIndex& a, int b) {
        return a <=> FloorIndex::of(b);
    }
    friend bool operator==(const FloorIndex& a, int b) { return a == FloorIndex::of(b); }

private:
    FloorIndex() = default;
    bool finite_ = false;
    int value_ = 0;
};

/// Exponent vector over the index window [lo:hi].
class MultiIndex {
public:
    /// Zero multiindex on [lo:hi].
    MultiIndex(int lo, int hi);
    /// Explicit exponents, exp[i] belongs to index lo+i.
    MultiIndex(int lo, std::vector<int> exp);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(exp_.size()) - 1; }
    int at(int i) const;
    int degree() const;
    std::vector<int> bracket() const;
    FloorIndex floor() const;

    MultiIndex plus(int p) const;
    MultiIndex minus(int p) const;
    /// Slot-wise sum; windows must agree.
    MultiIndex plus(const MultiIndex& other) const;

    const std::vector<int>& exponents() const { return exp_; }

    /// Orders multiindices of a common window and degree in the canonical
    /// enumeration order (first slot decreasing).
    std::strong_ordering operator<=>(const MultiIndex& o) const;
    bool operator==(const MultiIndex& o) const = default;

    std::string str() const;

private:
    int lo_ = 0;
    std::vector<int> exp_;
};

/// Strictly ascending index map with domain window [lo : lo+size-1] and
/// values in [0 : ambient]. The empty map is allowed.
class Alternator {
public:
    Alternator() = default;
    Alternator(int lo, std::vector<int> image, int ambient);

    /// Sigma(k,n) convention: domain starts at 1.
    static Alternator sigma(std::vector<int> image, int ambient) {
        return Alternator(1, std::move(image), ambient);
    }
    /// Sigma_0(k,n) convention: domain starts at 0.
    static Alternator sigma0(std::vector<int> image, int ambient) {
        return Alternator(0, std::move(image), ambient);
    }

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(image_.size()) - 1; }
    int size() const { return static_cast<int>(image_.size()); }
    bool empty() const { return image_.empty(); }
    int ambient() const { return ambient_; }
    int at(int slot) const;  ///< value at domain position `slot` in [lo:hi]
    const std::vector<int>& image() const { return image_; }
    bool contains(int q) const;
    FloorIndex floor() const;

    Alternator plus(int q) const;   ///< extends the domain by one on the right
    Alternator minus(int p) const;  ///< shrinks the domain by one on the right
    Alternator with_ambient(int n) const;
    /// Complement in [0:ambient]; swaps the Sigma/Sigma_0 convention (lo 1<->0).
    Alternator complement() const;

    std::strong_ordering operator<=>(const Alternator& o) const = default;
    bool operator==(const Alternator& o) const = default;

    std::string str() const;

private:
    int lo_ = 1;
    std::vector<int> image_;
    int ambient_ = 0;
};

/// All alpha with |alpha| = r on [lo:hi], canonical order (first slot decreasing).
std::vector<MultiIndex> enum_multiindices(int r, int lo, int hi);

/// All strictly ascending maps [a:b] -> [lo:hi], lexicographic by image.
/// For a > b returns exactly the empty map.
std::vector<Alternator> enum_alternators(int a, int b, int lo, int hi);

/// Parity of the sort of (q, sigma(lo), ..., sigma(hi)). Requires q outside [sigma].
Sign eps_before(int q, const Alternator& sigma);
/// Parity of the sort of (sigma(lo), ..., sigma(hi), q).
Sign eps_after(const Alternator& sigma, int q);
/// Parity of the sort of the concatenation (sigma..., rho...) together with
/// the merged ascending map on the union. Images must be disjoint.
std::pair<Sign, Alternator> merge_sign(const Alternator& sigma, const Alternator& rho);

/// Complement of [x] in [0:n]; swaps the Sigma <-> Sigma_0 convention.
Alternator complement(const Alternator& x, int n);

} // namespace feec
