#include "symchain/vertex.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace symchain {

namespace {

void check_length(int length) {
    if (length < 0 || length > Vertex::max_length)
        throw std::invalid_argument("vertex length out of range: " + std::to_string(length));
}

}  // namespace

Vertex::Vertex(int length) {
    check_length(length);
    length_ = static_cast<std::uint8_t>(length);
}

Vertex Vertex::from_string(std::string_view bits) {
    Vertex v(static_cast<int>(bits.size()));
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(static_cast<int>(i) + 1, true);
        else if (bits[i] != '0')
            throw std::invalid_argument("not a bitstring: " + std::string(bits));
    }
    return v;
}

Vertex Vertex::from_word(int length, std::uint64_t word) {
    if (length > 64) throw std::invalid_argument("from_word needs length <= 64");
    Vertex v(length);
    if (length < 64) word &= (std::uint64_t{1} << length) - 1;
    v.words_[0] = word;
    return v;
}

Vertex Vertex::ones(int length) {
    Vertex v(length);
    for (int p = 1; p <= length; ++p) v.set(p, true);
    return v;
}

bool Vertex::at(int pos) const {
    if (pos < 1 || pos > length_) throw std::out_of_range("position out of range");
    int i = pos - 1;
    return (words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1U;
}

void Vertex::set(int pos, bool value) {
    if (pos < 1 || pos > length_) throw std::out_of_range("position out of range");
    int i = pos - 1;
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    auto& w = words_[static_cast<std::size_t>(i >> 6)];
    w = value ? (w | mask) : (w & ~mask);
}

Vertex Vertex::flipped(int pos) const {
    Vertex v = *this;
    v.set(pos, !at(pos));
    return v;
}

int Vertex::weight() const { return std::popcount(words_[0]) + std::popcount(words_[1]); }

std::string Vertex::to_string() const {
    std::string s(static_cast<std::size_t>(length_), '0');
    for (int p = 1; p <= length_; ++p)
        if (at(p)) s[static_cast<std::size_t>(p - 1)] = '1';
    return s;
}

std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) {
    int common = std::min(a.length_, b.length_);
    for (int w = 0; w < 2 && w * 64 < common; ++w) {
        std::uint64_t diff = a.words_[static_cast<std::size_t>(w)] ^ b.words_[static_cast<std::size_t>(w)];
        int bits = std::min(64, common - w * 64);
        if (bits < 64) diff &= (std::uint64_t{1} << bits) - 1;
        if (diff != 0) {
            int i = std::countr_zero(diff);
            bool a_bit = (a.words_[static_cast<std::size_t>(w)] >> i) & 1U;
            return a_bit ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return a.length_ <=> b.length_;
}

int weight(const Vertex& v) { return v.weight(); }

Vertex complement(const Vertex& v) {
    Vertex c(v.length());
    for (int p = 1; p <= v.length(); ++p)
        if (!v.at(p)) c.set(p, true);
    return c;
}

Vertex reverse(const Vertex& v) {
    int n = v.length();
    Vertex r(n);
    for (int p = 1; p <= n; ++p)
        if (v.at(p)) r.set(n + 1 - p, true);
    return r;
}

Vertex comp_rev(const Vertex& v) { return complement(reverse(v)); }

Vertex concat(const Vertex& a, const Vertex& b) {
    Vertex c(a.length() + b.length());
    for (int p = 1; p <= a.length(); ++p)
        if (a.at(p)) c.set(p, true);
    for (int p = 1; p <= b.length(); ++p)
        if (b.at(p)) c.set(a.length() + p, true);
    return c;
}

Vertex concat(std::initializer_list<Vertex> parts) {
    Vertex c;
    for (const auto& p : parts) c = concat(c, p);
    return c;
}

Vertex slice(const Vertex& v, int pos, int len) {
    if (len < 0 || pos < 1 || pos + len - 1 > v.length())
        throw std::out_of_range("slice out of range");
    Vertex s(len);
    for (int i = 0; i < len; ++i)
        if (v.at(pos + i)) s.set(i + 1, true);
    return s;
}

std::vector<int> heights(const Vertex& v) {
    std::vector<int> h(static_cast<std::size_t>(v.length()) + 1, 0);
    for (int p = 1; p <= v.length(); ++p)
        h[static_cast<std::size_t>(p)] = h[static_cast<std::size_t>(p - 1)] + (v.at(p) ? 1 : -1);
    return h;
}

int flip_position(const Vertex& a, const Vertex& b) {
    if (a.length() != b.length()) return 0;
    int found = 0;
    for (int w = 0; w < 2; ++w) {
        std::uint64_t diff = a.words()[static_cast<std::size_t>(w)] ^ b.words()[static_cast<std::size_t>(w)];
        if (diff == 0) continue;
        if (found != 0 || std::popcount(diff) != 1) return 0;
        found = w * 64 + std::countr_zero(diff) + 1;
    }
    return found;
}

std::string to_string(DyckClass c) {
    switch (c) {
        case DyckClass::StrictlyPositive: return "StrictlyPositive";
        case DyckClass::TouchesZero: return "TouchesZero";
        case DyckClass::BelowOnce: return "BelowOnce";
        case DyckClass::Other: return "Other";
    }
    return "?";
}

DyckClass classify_dyck(const Vertex& v) {
    int h = 0;
    int negative = 0;
    bool touches = false;
    for (int p = 1; p <= v.length(); ++p) {
        h += v.at(p) ? 1 : -1;
        if (h < 0) ++negative;
        if (h == 0) touches = true;
    }
    if (negative == 1) return DyckClass::BelowOnce;
    if (negative > 1) return DyckClass::Other;
    return touches ? DyckClass::TouchesZero : DyckClass::StrictlyPositive;
}

bool is_dyck_word(const Vertex& v) {
    auto c = classify_dyck(v);
    return (c == DyckClass::StrictlyPositive || c == DyckClass::TouchesZero) && 2 * v.weight() == v.length();
}

CanonicalDecomposition canonical_decompose(const Vertex& x) {
    if (classify_dyck(x) != DyckClass::TouchesZero)
        throw std::invalid_argument("canonical_decompose needs a path touching zero: " + x.to_string());
    int h = 0;
    for (int p = 1; p <= x.length(); ++p) {
        h += x.at(p) ? 1 : -1;
        if (h == 0) return {slice(x, 2, p - 2), slice(x, p + 1, x.length() - p)};
    }
    throw std::logic_error("unreachable");
}

std::vector<Component> components(const Vertex& dyck) {
    std::vector<Component> out;
    int h = 0;
    int start = 1;
    for (int p = 1; p <= dyck.length(); ++p) {
        h += dyck.at(p) ? 1 : -1;
        if (h < 0) throw std::invalid_argument("not a Dyck word: " + dyck.to_string());
        if (h == 0) {
            out.push_back({start, p - start + 1});
            start = p + 1;
        }
    }
    if (h != 0) throw std::invalid_argument("not a Dyck word: " + dyck.to_string());
    return out;
}

int RootedTree::add_child(int parent) {
    int id = vertex_count();
    children_.at(static_cast<std::size_t>(parent)).push_back(id);
    children_.emplace_back();
    return id;
}

RootedTree dyck_to_tree(const Vertex& dyck) {
    if (!is_dyck_word(dyck)) throw std::invalid_argument("not a Dyck word: " + dyck.to_string());
    RootedTree t;
    std::vector<int> stack{t.root()};
    for (int p = 1; p <= dyck.length(); ++p) {
        if (dyck.at(p))
            stack.push_back(t.add_child(stack.back()));
        else
            stack.pop_back();
    }
    return t;
}

Vertex tree_to_dyck(const RootedTree& t) {
    std::string s;
    // Iterative preorder; an entry with child index == size emits the return.
    std::vector<std::pair<int, std::size_t>> stack{{t.root(), 0}};
    while (!stack.empty()) {
        auto& [v, i] = stack.back();
        const auto& ch = t.children(v);
        if (i < ch.size()) {
            int c = ch[i++];
            s.push_back('1');
            stack.emplace_back(c, 0);
        } else {
            stack.pop_back();
            if (!stack.empty()) s.push_back('0');
        }
    }
    return Vertex::from_string(s);
}

std::vector<Vertex> level_vertices(int n, int k) {
    if (n < 0 || n > 64 || k < 0 || k > n) throw std::invalid_argument("level out of range");
    std::vector<Vertex> out;
    if (k == 0) {
        out.emplace_back(n);
        return out;
    }
    std::uint64_t w = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    while (true) {
        out.push_back(Vertex::from_word(n, w));
        if (n < 64 && (w >> (n - k)) == ((std::uint64_t{1} << k) - 1)) break;
        if (n == 64 && k == 64) break;
        std::uint64_t c = w & (~w + 1);
        std::uint64_t r = w + c;
        if (r == 0) break;
        w = (((r ^ w) >> 2) / c) | r;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace symchain
