#pragma once

#include <string>
#include <vector>

#include "gyro/gyrogroup.hpp"

namespace gyro {

struct Subgyrogroup {
    std::vector<int> carrier;  // sorted ascending, contains the identity
    bool is_l = false;
};

struct SubgyroCheck {
    bool ok = true;
    std::string reason;        // short tag, empty when ok
    std::vector<int> witness;  // lexicographically least offending tuple
    explicit operator bool() const { return ok; }
};

struct CosetPartition {
    std::vector<int> carrier;                 // H, sorted
    std::vector<std::vector<int>> blocks;     // ordered by least element, each sorted
    std::vector<int> representatives;         // least element of each block
};

struct LagrangeCheck {
    bool holds = false;
    int index = 0;  // number of left cosets
};

// Least superset of `seeds` closed under x -> s+x for s in seeds.
// The empty seed set yields the empty set.
std::vector<int> left_closure(const Gyrogroup& g, const std::vector<int>& seeds);

// Least superset of `seeds` closed under x -> x+s for s in seeds.
std::vector<int> right_closure(const Gyrogroup& g, const std::vector<int>& seeds);

// True iff carrier contains the identity, is closed under + and negation,
// and gyr[a,b](carrier) = carrier for all a, b in carrier.
// Empty carrier is a domain error.
SubgyroCheck is_subgyrogroup(const Gyrogroup& g, const std::vector<int>& carrier);

// Additionally requires gyr[a,h](carrier) = carrier for every a in G and
// h in carrier.
SubgyroCheck is_l_subgyrogroup(const Gyrogroup& g, const std::vector<int>& carrier);

// The partition {x+H : x in G}. Requires H to be an L-subgyrogroup
// (throws GyroError otherwise); the blocks are structurally re-checked
// to be disjoint, covering, and of equal size |H| on every call.
CosetPartition left_cosets(const Gyrogroup& g, const std::vector<int>& carrier);

// |H| divides |G| and #cosets * |H| = |G|, on the computed partition.
LagrangeCheck verify_lagrange(const Gyrogroup& g, const std::vector<int>& carrier);

// Exhaustive scan of all 2^(n-1) identity-containing subsets. Refuses
// orders above `order_bound` (the scan is exponential). Results sorted
// by carrier size, then lexicographically.
std::vector<Subgyrogroup> all_subgyrogroups(const Gyrogroup& g, bool l_only = false,
                                            int order_bound = 16);

}  // namespace gyro
