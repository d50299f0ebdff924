#include "farey/terminal.hpp"

#include <algorithm>
#include <stdexcept>

namespace farey {

bool canonical_less(const TerminalPair& x, const TerminalPair& y) {
    if (x.m != y.m) return x.m < y.m;
    if (x.n != y.n) return x.n < y.n;
    if (x.s != y.s) return x.s < y.s;
    return x.t < y.t;
}

std::string label(const TerminalPair& p) {
    return "(" + std::to_string(p.s) + "," + std::to_string(p.t) + ",(" + std::to_string(p.m) + "," +
           std::to_string(p.n) + "))";
}

namespace {

void require_shape(const LShape& shape) {
    if (shape.m < 1 || shape.n < 1) throw std::invalid_argument("L-shape sizes must be positive");
    if (std::ssize(shape.bottom) != shape.m || std::ssize(shape.left) != shape.n)
        throw std::invalid_argument("L-shape arm lengths do not match the declared size");
    if (shape.bottom[0] != shape.left[0])
        throw std::invalid_argument("L-shape arms disagree on the shared corner value");
    const std::int64_t cells = shape.m * shape.n;
    for (const auto arm : {&shape.bottom, &shape.left})
        for (const std::int64_t value : *arm)
            if (value < 1 || value > cells) throw std::invalid_argument("L-shape value out of range");
}

void require_pair_range(const TerminalPair& p) {
    if (p.m < 1 || p.n < 1) throw std::domain_error("terminal pair sizes must be positive");
    if (p.s < 1 || p.t < 1 || p.s > p.m * p.n || p.t > p.m * p.n)
        throw std::domain_error("terminal pair values out of range for " + label(p));
}

}  // namespace

bool is_difference_type(const LShape& shape) {
    require_shape(shape);

    std::vector<std::int64_t> values(shape.bottom.begin(), shape.bottom.end());
    values.insert(values.end(), shape.left.begin() + 1, shape.left.end());
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) != values.end()) return false;

    for (std::int64_t i = 0; i + 1 < shape.m; ++i) {
        std::int64_t count = 0;
        for (const std::int64_t value : shape.left) count += value <= shape.bottom[i + 1];
        if (shape.bottom[i + 1] - shape.bottom[i] != count) return false;
    }
    for (std::int64_t j = 0; j + 1 < shape.n; ++j) {
        std::int64_t count = 0;
        for (const std::int64_t value : shape.bottom) count += value <= shape.left[j + 1];
        if (shape.left[j + 1] - shape.left[j] != count) return false;
    }
    return true;
}

TerminalPair parent_pair(const TerminalPair& p) {
    if (p.m == 1 && p.n == 1) throw std::domain_error("the root pair has no parent");
    if (p.m < 1 || p.n < 1) throw std::domain_error("terminal pair sizes must be positive");
    if (p.s == p.t) throw std::domain_error("tied pair " + label(p) + " has no parent");
    if (p.s > p.t) return {p.s - p.n, p.t, p.m - 1, p.n};
    return {p.s, p.t - p.m, p.m, p.n - 1};
}

PairChildren pair_children(const TerminalPair& p) {
    PairChildren out;
    if (p.s - p.t > -p.n) out.horizontal = TerminalPair{p.s + p.n, p.t, p.m + 1, p.n};
    if (p.s - p.t < p.m) out.vertical = TerminalPair{p.s, p.t + p.m, p.m, p.n + 1};
    return out;
}

TerminalPair transpose(const TerminalPair& p) { return {p.t, p.s, p.n, p.m}; }

LShape decompress(const TerminalPair& p) {
    require_pair_range(p);
    LShape shape{p.m, p.n, std::vector<std::int64_t>(p.m), std::vector<std::int64_t>(p.n)};

    TerminalPair cur = p;
    for (;;) {
        require_pair_range(cur);
        shape.bottom[cur.m - 1] = cur.s;
        shape.left[cur.n - 1] = cur.t;
        if (cur.m == 1 && cur.n == 1) {
            if (cur.s != 1) throw std::domain_error(label(p) + " is not reachable from the root pair");
            break;
        }
        if (cur.s == cur.t) throw std::domain_error(label(p) + " is not reachable from the root pair");
        cur = parent_pair(cur);
    }

    if (!is_difference_type(shape) || shape.bottom[0] != 1)
        throw std::logic_error("decompression of " + label(p) + " produced an invalid shape");
    return shape;
}

TerminalPair lshape_terminal(const LShape& shape) {
    require_shape(shape);
    return {shape.bottom[shape.m - 1], shape.left[shape.n - 1], shape.m, shape.n};
}

std::vector<LShape> enumerate_difference_lshapes(std::int64_t m, std::int64_t n, std::int64_t guard) {
    if (m < 1 || n < 1) throw std::invalid_argument("L-shape sizes must be positive");
    if (guard < 2) throw std::invalid_argument("enumeration guard must be at least 2");
    if (m + n > guard)
        throw std::invalid_argument("enumeration of size (" + std::to_string(m) + "," + std::to_string(n) +
                                    ") exceeds the guard bound " + std::to_string(guard));

    const std::int64_t cells = m * n;
    std::vector<LShape> found;
    std::vector<std::int64_t> bottom{1};
    std::vector<std::int64_t> left{1};
    bottom.reserve(m);
    left.reserve(n);

    // Values are visited in increasing order, so when a value lands on an
    // arm, the opposite arm's entries not yet placed are all larger and the
    // difference equation for the new entry reduces to "increment == number
    // of opposite entries placed so far".
    const auto dfs = [&](auto&& self, std::int64_t value) -> void {
        const std::int64_t placed_bottom = std::ssize(bottom);
        const std::int64_t placed_left = std::ssize(left);
        if (placed_bottom == m && placed_left == n) {
            found.push_back(LShape{m, n, bottom, left});
            return;
        }
        if (value > cells) return;
        if (cells - value + 1 < (m - placed_bottom) + (n - placed_left)) return;

        if (placed_bottom < m && value - bottom.back() == placed_left) {
            bottom.push_back(value);
            self(self, value + 1);
            bottom.pop_back();
        }
        if (placed_left < n && value - left.back() == placed_bottom) {
            left.push_back(value);
            self(self, value + 1);
            left.pop_back();
        }
        self(self, value + 1);  // value stays off the shape
    };
    dfs(dfs, 2);

    std::sort(found.begin(), found.end(), [](const LShape& x, const LShape& y) {
        if (x.bottom != y.bottom) return x.bottom < y.bottom;
        return x.left < y.left;
    });
    return found;
}

}  // namespace farey
