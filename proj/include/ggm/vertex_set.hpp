#ifndef GGM_VERTEX_SET_HPP
#define GGM_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ggm {

// Set of vertex labels in 0..63 backed by a single 64-bit mask. Vertices are
// 0-based internally; conversion to the 1-based external labelling happens at
// the JSON/CLI boundary.
class VertexSet {
  public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) add(v);
    }

    static constexpr VertexSet full(int p) {
        return VertexSet(p >= 64 ? ~0ull : ((1ull << p) - 1ull));
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1ull; }
    void add(int v) { bits_ |= (1ull << v); }
    void remove(int v) { bits_ &= ~(1ull << v); }

    constexpr bool subset_of(const VertexSet& o) const { return (bits_ & ~o.bits_) == 0; }

    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }

    int lowest() const { return std::countr_zero(bits_); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size());
        for (std::uint64_t m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v : to_vector()) {
            if (!first) s += ",";
            s += std::to_string(v + 1);
            first = false;
        }
        return s + "}";
    }

  private:
    std::uint64_t bits_ = 0;
};

// Orders sets as ascending vertex sequences ({1} < {1,2} < {1,3} < {2}).
inline bool lex_less(VertexSet a, VertexSet b) {
    std::uint64_t ma = a.bits(), mb = b.bits();
    while (ma != 0 && mb != 0) {
        int va = std::countr_zero(ma), vb = std::countr_zero(mb);
        if (va != vb) return va < vb;
        ma &= ma - 1;
        mb &= mb - 1;
    }
    return ma == 0 && mb != 0;
}

}  // namespace ggm

#endif
