#include "gyro/subgyro.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>

#include "gyro/cayley_graph.hpp"

namespace gyro {

namespace {

std::vector<int> closure(const Gyrogroup& g, const std::vector<int>& seeds, bool left) {
    const auto s = normalize_set(g, seeds);
    std::vector<char> in(g.order(), 0);
    std::deque<int> work;
    for (int x : s) {
        in[x] = 1;
        work.push_back(x);
    }
    while (!work.empty()) {
        const int x = work.front();
        work.pop_front();
        for (int gen : s) {
            const int y = left ? g.op(gen, x) : g.op(x, gen);
            if (!in[y]) {
                in[y] = 1;
                work.push_back(y);
            }
        }
    }
    std::vector<int> out;
    for (int x = 0; x < g.order(); ++x)
        if (in[x]) out.push_back(x);
    return out;
}

SubgyroCheck check_carrier(const Gyrogroup& g, const std::vector<int>& carrier, bool l_flavor) {
    if (carrier.empty()) throw GyroError("empty carrier");
    const auto h = normalize_set(g, carrier);
    std::vector<char> in(g.order(), 0);
    for (int x : h) in[x] = 1;

    if (!in[g.identity()])
        return {false, "missing-identity", {g.identity()}};
    for (int a : h)
        if (!in[g.neg(a)]) return {false, "missing-inverse", {a, g.neg(a)}};
    for (int a : h)
        for (int b : h) {
            const int c = g.op(a, b);
            if (!in[c]) return {false, "not-closed", {a, b, c}};
        }
    for (int a : h)
        for (int b : h)
            for (int x : h) {
                const int y = g.gyr_image(a, b, x);
                if (!in[y]) return {false, "gyration-unstable", {a, b, x, y}};
            }
    if (l_flavor) {
        for (int a = 0; a < g.order(); ++a)
            for (int hh : h)
                for (int x : h) {
                    const int y = g.gyr_image(a, hh, x);
                    if (!in[y]) return {false, "l-gyration-unstable", {a, hh, x, y}};
                }
    }
    return {};
}

}  // namespace

std::vector<int> left_closure(const Gyrogroup& g, const std::vector<int>& seeds) {
    return closure(g, seeds, true);
}

std::vector<int> right_closure(const Gyrogroup& g, const std::vector<int>& seeds) {
    return closure(g, seeds, false);
}

SubgyroCheck is_subgyrogroup(const Gyrogroup& g, const std::vector<int>& carrier) {
    return check_carrier(g, carrier, false);
}

SubgyroCheck is_l_subgyrogroup(const Gyrogroup& g, const std::vector<int>& carrier) {
    return check_carrier(g, carrier, true);
}

CosetPartition left_cosets(const Gyrogroup& g, const std::vector<int>& carrier) {
    const auto check = is_l_subgyrogroup(g, carrier);
    if (!check)
        throw GyroError("left_cosets requires an L-subgyrogroup (" + check.reason + ")");
    const auto h = normalize_set(g, carrier);
    const int n = g.order();

    std::vector<std::vector<int>> blocks;
    std::vector<char> placed(n, 0);
    for (int x = 0; x < n; ++x) {
        if (placed[x]) continue;
        std::vector<int> block;
        block.reserve(h.size());
        for (int hh : h) block.push_back(g.op(x, hh));
        std::sort(block.begin(), block.end());
        for (int v : block) {
            if (placed[v])
                throw GyroError("left cosets of the given carrier do not partition the gyrogroup");
            placed[v] = 1;
        }
        if (block.size() != h.size())
            throw GyroError("left coset of " + std::to_string(x) + " has wrong size");
        blocks.push_back(std::move(block));
    }
    // visiting vertices in ascending order makes each block's first
    // element its least, and blocks come out ordered by least element
    CosetPartition part;
    part.carrier = h;
    for (auto& b : blocks) part.representatives.push_back(b.front());
    part.blocks = std::move(blocks);
    return part;
}

LagrangeCheck verify_lagrange(const Gyrogroup& g, const std::vector<int>& carrier) {
    const auto part = left_cosets(g, carrier);
    const int n = g.order();
    const int h = static_cast<int>(part.carrier.size());
    const int index = static_cast<int>(part.blocks.size());
    return {n % h == 0 && index * h == n, index};
}

std::vector<Subgyrogroup> all_subgyrogroups(const Gyrogroup& g, bool l_only, int order_bound) {
    const int n = g.order();
    if (n > order_bound)
        throw GyroError("subgyrogroup enumeration scans 2^n subsets; order " + std::to_string(n) +
                        " exceeds the bound " + std::to_string(order_bound) +
                        " (raise order_bound to force it)");
    if (n > 63) throw GyroError("subgyrogroup enumeration supports order <= 63");

    const int e = g.identity();
    const auto& flat = g.table().flat();
    const auto& inv = g.inverses();
    const auto& gyrt = g.gyrations();
    const int identity_id = 0;

    // Subsets as bitmasks over the n-1 non-identity elements.
    std::vector<int> others;
    for (int x = 0; x < n; ++x)
        if (x != e) others.push_back(x);
    const int m = n - 1;

    std::vector<int> members;
    std::vector<Subgyrogroup> found;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
        std::uint64_t mask = std::uint64_t{1} << e;
        members.clear();
        members.push_back(e);
        for (int i = 0; i < m; ++i)
            if (pick >> i & 1) {
                mask |= std::uint64_t{1} << others[i];
                members.push_back(others[i]);
            }

        bool ok = true;
        for (size_t i = 0; i < members.size() && ok; ++i) {
            const int a = members[i];
            if (!(mask >> inv[a] & 1)) {
                ok = false;
                break;
            }
            for (size_t j = 0; j < members.size() && ok; ++j) {
                const int b = members[j];
                if (!(mask >> flat[a * n + b] & 1)) ok = false;
            }
        }
        for (size_t i = 0; i < members.size() && ok; ++i)
            for (size_t j = 0; j < members.size() && ok; ++j) {
                const int a = members[i], b = members[j];
                if (gyrt.perm_id(a, b) == identity_id) continue;
                const auto& p = gyrt(a, b);
                for (int x : members)
                    if (!(mask >> p(x) & 1)) {
                        ok = false;
                        break;
                    }
            }
        if (!ok) continue;

        bool is_l = true;
        for (int a = 0; a < n && is_l; ++a)
            for (size_t j = 0; j < members.size() && is_l; ++j) {
                const int h = members[j];
                if (gyrt.perm_id(a, h) == identity_id) continue;
                const auto& p = gyrt(a, h);
                for (int x : members)
                    if (!(mask >> p(x) & 1)) {
                        is_l = false;
                        break;
                    }
            }
        if (l_only && !is_l) continue;

        std::sort(members.begin(), members.end());
        found.push_back({members, is_l});
    }

    std::sort(found.begin(), found.end(), [](const Subgyrogroup& a, const Subgyrogroup& b) {
        if (a.carrier.size() != b.carrier.size()) return a.carrier.size() < b.carrier.size();
        return a.carrier < b.carrier;
    });
    return found;
}

}  // namespace gyro
