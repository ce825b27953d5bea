#ifndef LOVASZ_VERTEX_SET_HPP
#define LOVASZ_VERTEX_SET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace lovasz {

/**
 * Subset of the vertex range 0..n-1, stored as a packed bitset.
 *
 * Two sets compare equal only if they have the same universe size. The
 * canonical encoding of a set is its ascending index list; ordering is by
 * cardinality first, then lexicographically on that list.
 */
class VertexSet
{
    public:
        VertexSet() = default;

        explicit VertexSet(int universe)
            : universe_(universe), words_((universe + 63) / 64, 0)
        {
        }

        VertexSet(int universe, std::initializer_list<int> members)
            : VertexSet(universe)
        {
            for (int v : members)
                insert(v);
        }

        static VertexSet from_indices(int universe, const std::vector<int>& members)
        {
            VertexSet s(universe);
            for (int v : members)
                s.insert(v);
            return s;
        }

        static VertexSet full(int universe)
        {
            VertexSet s(universe);
            for (int v = 0; v < universe; ++v)
                s.insert(v);
            return s;
        }

        int universe() const noexcept { return universe_; }

        bool contains(int v) const noexcept
        {
            return (words_[v >> 6] >> (v & 63)) & 1u;
        }

        void insert(int v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
        void erase(int v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

        int size() const noexcept
        {
            int count = 0;
            for (auto w : words_)
                count += std::popcount(w);
            return count;
        }

        bool empty() const noexcept
        {
            for (auto w : words_)
                if (w)
                    return false;
            return true;
        }

        VertexSet& operator&=(const VertexSet& other) noexcept
        {
            for (std::size_t i = 0; i < words_.size(); ++i)
                words_[i] &= other.words_[i];
            return *this;
        }

        VertexSet& operator|=(const VertexSet& other) noexcept
        {
            for (std::size_t i = 0; i < words_.size(); ++i)
                words_[i] |= other.words_[i];
            return *this;
        }

        friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
        friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }

        bool subset_of(const VertexSet& other) const noexcept
        {
            for (std::size_t i = 0; i < words_.size(); ++i)
                if (words_[i] & ~other.words_[i])
                    return false;
            return true;
        }

        bool intersects(const VertexSet& other) const noexcept
        {
            for (std::size_t i = 0; i < words_.size(); ++i)
                if (words_[i] & other.words_[i])
                    return true;
            return false;
        }

        std::vector<int> indices() const
        {
            std::vector<int> out;
            for (std::size_t i = 0; i < words_.size(); ++i)
            {
                std::uint64_t w = words_[i];
                while (w)
                {
                    out.push_back(static_cast<int>(i * 64) + std::countr_zero(w));
                    w &= w - 1;
                }
            }
            return out;
        }

        /// The lowest member, or -1 for the empty set.
        int first() const noexcept
        {
            for (std::size_t i = 0; i < words_.size(); ++i)
                if (words_[i])
                    return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
            return -1;
        }

        /// "{0,2,5}" using 0-based indices.
        std::string to_string() const
        {
            std::string out = "{";
            bool first_item = true;
            for (int v : indices())
            {
                if (!first_item)
                    out += ',';
                out += std::to_string(v);
                first_item = false;
            }
            return out + "}";
        }

        bool operator==(const VertexSet& other) const noexcept = default;

        std::strong_ordering operator<=>(const VertexSet& other) const
        {
            if (auto c = size() <=> other.size(); c != 0)
                return c;
            return indices() <=> other.indices();
        }

        std::size_t hash() const noexcept
        {
            std::size_t h = static_cast<std::size_t>(universe_);
            for (auto w : words_)
                h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            return h;
        }

    private:
        int universe_ = 0;
        std::vector<std::uint64_t> words_;
};

struct VertexSetHash
{
    std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

}   // namespace lovasz

#endif
