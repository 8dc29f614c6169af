#include "feec/combinatorics.hpp"

#include <algorithm>
#include <sstream>

namespace feec {

namespace {

// Insertion-sort parity of an integer sequence. All epsilon signs go
// through here; the closed-form shortcut identities are checked in tests.
Sign sort_parity(std::vector<int> seq) {
    int swaps = 0;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        int x = seq[i];
        std::size_t j = i;
        while (j > 0 && seq[j - 1] > x) {
            seq[j] = seq[j - 1];
            --j;
            ++swaps;
        }
        seq[j] = x;
    }
    return Sign::pow_minus_one(swaps);
}

} // namespace

MultiIndex::MultiIndex(int lo, int hi) : lo_(lo) {
    if (lo > hi) throw InvalidRange("multiindex window empty");
    exp_.assign(static_cast<std::size_t>(hi - lo + 1), 0);
}

MultiIndex::MultiIndex(int lo, std::vector<int> exp) : lo_(lo), exp_(std::move(exp)) {
    if (exp_.empty()) throw InvalidRange("multiindex window empty");
    for (int e : exp_)
        if (e < 0) throw Malformed("negative exponent");
}

int MultiIndex::at(int i) const {
    if (i < lo_ || i > hi()) throw OutOfRange("multiindex slot out of window");
    return exp_[static_cast<std::size_t>(i - lo_)];
}

int MultiIndex::degree() const {
    int d = 0;
    for (int e : exp_) d += e;
    return d;
}

std::vector<int> MultiIndex::bracket() const {
    std::vector<int> out;
    for (int i = lo_; i <= hi(); ++i)
        if (at(i) > 0) out.push_back(i);
    return out;
}

FloorIndex MultiIndex::floor() const {
    for (int i = lo_; i <= hi(); ++i)
        if (at(i) > 0) return FloorIndex::of(i);
    return FloorIndex::infinity();
}

MultiIndex MultiIndex::plus(int p) const {
    MultiIndex out = *this;
    if (p < lo_ || p > hi()) throw OutOfRange("slot out of window");
    ++out.exp_[static_cast<std::size_t>(p - lo_)];
    return out;
}

MultiIndex MultiIndex::minus(int p) const {
    if (p < lo_ || p > hi() || at(p) == 0) throw OutOfRange("index not in support");
    MultiIndex out = *this;
    --out.exp_[static_cast<std::size_t>(p - lo_)];
    return out;
}

MultiIndex MultiIndex::plus(const MultiIndex& other) const {
    if (lo_ != other.lo_ || exp_.size() != other.exp_.size())
        throw ShapeMismatch("multiindex windows differ");
    MultiIndex out = *this;
    for (std::size_t i = 0; i < exp_.size(); ++i) out.exp_[i] += other.exp_[i];
    return out;
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& o) const {
    if (auto c = lo_ <=> o.lo_; c != 0) return c;
    if (auto c = exp_.size() <=> o.exp_.size(); c != 0) return c;
    if (auto c = degree() <=> o.degree(); c != 0) return c;
    // Enumeration order within a degree class: first slot decreasing.
    for (std::size_t i = 0; i < exp_.size(); ++i)
        if (auto c = o.exp_[i] <=> exp_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::string MultiIndex::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < exp_.size(); ++i) {
        if (i) os << ',';
        os << exp_[i];
    }
    os << ')';
    return os.str();
}

Alternator::Alternator(int lo, std::vector<int> image, int ambient)
    : lo_(lo), image_(std::move(image)), ambient_(ambient) {
    for (std::size_t i = 0; i + 1 < image_.size(); ++i)
        if (image_[i] >= image_[i + 1]) throw Malformed("alternator image not strictly ascending");
    for (int v : image_)
        if (v < 0 || v > ambient_) throw OutOfRange("alternator image outside [0:ambient]");
}

int Alternator::at(int slot) const {
    if (slot < lo_ || slot > hi()) throw OutOfRange("alternator slot out of domain");
    return image_[static_cast<std::size_t>(slot - lo_)];
}

bool Alternator::contains(int q) const {
    return std::binary_search(image_.begin(), image_.end(), q);
}

FloorIndex Alternator::floor() const {
    if (image_.empty()) return FloorIndex::infinity();
    return FloorIndex::of(image_.front());
}

Alternator Alternator::plus(int q) const {
    if (contains(q)) throw NotDisjoint("index already present");
    std::vector<int> img = image_;
    img.insert(std::upper_bound(img.begin(), img.end(), q), q);
    return Alternator(lo_, std::move(img), std::max(ambient_, q));
}

Alternator Alternator::minus(int p) const {
    if (!contains(p)) throw OutOfRange("index not present");
    std::vector<int> img;
    img.reserve(image_.size() - 1);
    for (int v : image_)
        if (v != p) img.push_back(v);
    return Alternator(lo_, std::move(img), ambient_);
}

Alternator Alternator::with_ambient(int n) const {
    return Alternator(lo_, image_, n);
}

Alternator Alternator::complement() const {
    return feec::complement(*this, ambient_);
}

std::string Alternator::str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (i) os << ',';
        os << image_[i];
    }
    os << '}';
    return os.str();
}

std::vector<MultiIndex> enum_multiindices(int r, int lo, int hi) {
    if (lo > hi) throw InvalidRange("lo > hi");
    if (r < 0) throw InvalidRange("negative degree");
    std::vector<MultiIndex> out;
    std::vector<int> cur(static_cast<std::size_t>(hi - lo + 1), 0);
    auto rec = [&](auto&& self, std::size_t slot, int remaining) -> void {
        if (slot + 1 == cur.size()) {
            cur[slot] = remaining;
            out.emplace_back(lo, cur);
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            cur[slot] = v;
            self(self, slot + 1, remaining - v);
        }
    };
    rec(rec, 0, r);
    return out;
}

std::vector<Alternator> enum_alternators(int a, int b, int lo, int hi) {
    std::vector<Alternator> out;
    if (a > b) {
        out.emplace_back(a, std::vector<int>{}, std::max(hi, 0));
        return out;
    }
    const int k = b - a + 1;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.emplace_back(a, cur, hi);
            return;
        }
        for (int v = next; v <= hi; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, lo);
    return out;
}

Sign eps_before(int q, const Alternator& sigma) {
    if (sigma.contains(q)) throw NotDisjoint("q in [sigma]");
    std::vector<int> seq;
    seq.reserve(sigma.image().size() + 1);
    seq.push_back(q);
    seq.insert(seq.end(), sigma.image().begin(), sigma.image().end());
    return sort_parity(std::move(seq));
}

Sign eps_after(const Alternator& sigma, int q) {
    if (sigma.contains(q)) throw NotDisjoint("q in [sigma]");
    std::vector<int> seq(sigma.image());
    seq.push_back(q);
    return sort_parity(std::move(seq));
}

std::pair<Sign, Alternator> merge_sign(const Alternator& sigma, const Alternator& rho) {
    std::vector<int> seq(sigma.image());
    for (int v : rho.image()) {
        if (sigma.contains(v)) throw NotDisjoint("overlapping alternators");
        seq.push_back(v);
    }
    Sign s = sort_parity(seq);
    std::sort(seq.begin(), seq.end());
    int ambient = std::max(sigma.ambient(), rho.ambient());
    return {s, Alternator(0, std::move(seq), ambient)};
}

Alternator complement(const Alternator& x, int n) {
    for (int v : x.image())
        if (v < 0 || v > n) throw OutOfRange("image not inside [0:n]");
    std::vector<int> img;
    img.reserve(static_cast<std::size_t>(n + 1) - x.image().size());
    for (int v = 0; v <= n; ++v)
        if (!x.contains(v)) img.push_back(v);
    const int lo = (x.lo() == 1) ? 0 : 1;
    return Alternator(lo, std::move(img), n);
}

} // namespace feec
