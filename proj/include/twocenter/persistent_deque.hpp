#ifndef TWOCENTER_PERSISTENT_DEQUE_HPP
#define TWOCENTER_PERSISTENT_DEQUE_HPP

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

namespace twocenter {

/*
 * Confluently-shared deque built from two persistent cons lists. Every
 * operation returns a new version and never touches an older one, so all
 * versions stay readable. Nodes live in one arena owned by the deque.
 *
 * When one side runs dry the other is split in half; along a single chain of
 * versions this keeps push/pop amortized O(1) in time and in new nodes.
 */
template <class T>
class PersistentDeque {
public:
    struct Version {
        std::int32_t front = -1;
        std::int32_t back = -1;
        std::uint32_t front_len = 0;
        std::uint32_t back_len = 0;

        std::size_t size() const { return front_len + back_len; }
        bool empty() const { return size() == 0; }
    };

    Version push_front(Version v, const T& value) {
        v.front = make(value, v.front);
        ++v.front_len;
        return normalize(v);
    }

    Version push_back(Version v, const T& value) {
        v.back = make(value, v.back);
        ++v.back_len;
        return normalize(v);
    }

    Version pop_front(Version v) {
        assert(!v.empty());
        if (v.front_len == 0) {
            // size 1, element sits on the back list
            return Version{};
        }
        v.front = nodes_[v.front].next;
        --v.front_len;
        return normalize(v);
    }

    Version pop_back(Version v) {
        assert(!v.empty());
        if (v.back_len == 0) return Version{};
        v.back = nodes_[v.back].next;
        --v.back_len;
        return normalize(v);
    }

    const T& front(Version v) const {
        assert(!v.empty());
        return v.front_len > 0 ? nodes_[v.front].value : nodes_[v.back].value;
    }

    const T& back(Version v) const {
        assert(!v.empty());
        return v.back_len > 0 ? nodes_[v.back].value : nodes_[v.front].value;
    }

    std::vector<T> to_vector(Version v) const {
        std::vector<T> out;
        out.reserve(v.size());
        for (std::int32_t n = v.front; n >= 0; n = nodes_[n].next) out.push_back(nodes_[n].value);
        const std::size_t mid = out.size();
        for (std::int32_t n = v.back; n >= 0; n = nodes_[n].next) out.push_back(nodes_[n].value);
        std::reverse(out.begin() + static_cast<std::ptrdiff_t>(mid), out.end());
        return out;
    }

    Version from_vector(std::span<const T> values) {
        const std::size_t half = values.size() / 2 + values.size() % 2;
        Version v;
        for (std::size_t i = half; i-- > 0;) v.front = make(values[i], v.front);
        v.front_len = static_cast<std::uint32_t>(half);
        for (std::size_t i = half; i < values.size(); ++i) v.back = make(values[i], v.back);
        v.back_len = static_cast<std::uint32_t>(values.size() - half);
        return v;
    }

    std::size_t node_count() const { return nodes_.size(); }

private:
    struct Node {
        T value;
        std::int32_t next;
    };

    std::int32_t make(const T& value, std::int32_t next) {
        nodes_.push_back(Node{value, next});
        return static_cast<std::int32_t>(nodes_.size() - 1);
    }

    Version normalize(Version v) {
        if ((v.front_len == 0 && v.back_len >= 2) || (v.back_len == 0 && v.front_len >= 2)) {
            const std::vector<T> all = to_vector(v);
            return from_vector(all);
        }
        return v;
    }

    std::vector<Node> nodes_;
};

}  // namespace twocenter

#endif  // TWOCENTER_PERSISTENT_DEQUE_HPP
