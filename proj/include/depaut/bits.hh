// bits.hh -- fixed-width dynamic bitset used for relation rows and set families

#ifndef DEPAUT_BITS_HH_
#define DEPAUT_BITS_HH_

#include <cassert>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace depaut {

class Bits {
public:
    Bits() : nbits_(0) {}
    explicit Bits(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    static Bits full(int nbits) {
        Bits b(nbits);
        for (int i = 0; i < nbits; ++i) b.set(i);
        return b;
    }
    static Bits single(int nbits, int i) {
        Bits b(nbits);
        b.set(i);
        return b;
    }

    int size() const { return nbits_; }

    bool test(int i) const {
        assert(0 <= i && i < nbits_);
        return (w_[i >> 6] >> (i & 63)) & 1;
    }
    void set(int i) {
        assert(0 <= i && i < nbits_);
        w_[i >> 6] |= uint64_t(1) << (i & 63);
    }
    void reset(int i) {
        assert(0 <= i && i < nbits_);
        w_[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }
    void assign(int i, bool v) { v ? set(i) : reset(i); }

    Bits& operator|=(const Bits& o) {
        assert(nbits_ == o.nbits_);
        for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        assert(nbits_ == o.nbits_);
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }

    Bits complement() const {
        Bits r(nbits_);
        for (size_t k = 0; k < w_.size(); ++k) r.w_[k] = ~w_[k];
        r.trim();
        return r;
    }
    Bits andnot(const Bits& o) const {
        assert(nbits_ == o.nbits_);
        Bits r(nbits_);
        for (size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & ~o.w_[k];
        return r;
    }

    bool operator==(const Bits& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }
    bool operator!=(const Bits& o) const { return !(*this == o); }
    // total order: popcount first, then word comparison; used to sort families
    bool operator<(const Bits& o) const {
        int ca = count(), cb = o.count();
        if (ca != cb) return ca < cb;
        for (size_t k = w_.size(); k-- > 0;)
            if (w_[k] != o.w_[k]) return w_[k] < o.w_[k];
        return false;
    }

    bool subset_of(const Bits& o) const {
        assert(nbits_ == o.nbits_);
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }
    bool intersects(const Bits& o) const {
        assert(nbits_ == o.nbits_);
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }
    bool none() const {
        for (uint64_t x : w_)
            if (x) return false;
        return true;
    }
    bool any() const { return !none(); }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += __builtin_popcountll(x);
        return c;
    }

    // index of next set bit >= i, or -1
    int next(int i) const {
        while (i < nbits_) {
            uint64_t rest = w_[i >> 6] >> (i & 63);
            if (rest) return i + __builtin_ctzll(rest);
            i = (i / 64 + 1) * 64;
        }
        return -1;
    }

    template <class F>
    void for_each(F f) const {
        for (int i = next(0); i >= 0; i = next(i + 1)) f(i);
    }
    std::vector<int> members() const {
        std::vector<int> v;
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    size_t hash() const {
        size_t h = std::hash<int>()(nbits_);
        for (uint64_t x : w_) h = h * 1000003u + std::hash<uint64_t>()(x);
        return h;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for_each([&](int i) {
            if (!first) s += ",";
            s += std::to_string(i);
            first = false;
        });
        return s + "}";
    }

private:
    void trim() {
        if (nbits_ % 64 && !w_.empty()) w_.back() &= (uint64_t(1) << (nbits_ % 64)) - 1;
    }

    int nbits_;
    std::vector<uint64_t> w_;
};

struct BitsHash {
    size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace depaut

#endif
