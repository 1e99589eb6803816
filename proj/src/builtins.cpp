#include "gyro/builtins.hpp"

#include <map>

#include "gyro/table_io.hpp"

namespace gyro {

namespace {

// Embedded in the canonical serializer form, so serialize_table_file on a
// builtin reproduces its source byte for byte.

constexpr std::string_view kG8 = R"(gyrogroup 8
addition
0 1 2 3 4 5 6 7
1 0 3 2 5 4 7 6
2 3 0 1 6 7 4 5
3 5 6 0 7 1 2 4
4 2 1 7 0 6 5 3
5 4 7 6 1 0 3 2
6 7 4 5 2 3 0 1
7 6 5 4 3 2 1 0
gyration names
I I I I I I I I
I I A A A A I I
I A I A A I A I
I A A I I A A I
I A A I I A A I
I A I A A I A I
I I A A A A I I
I I I I I I I I
perm A = (1 6)(2 5)
)";

constexpr std::string_view kG15 = R"(gyrogroup 15
addition
0 1 2 3 4 5 6 7 8 9 10 11 12 13 14
1 2 0 4 6 11 3 14 13 7 8 12 5 10 9
2 0 1 6 3 12 4 9 10 14 13 5 11 8 7
3 4 5 7 8 9 13 0 1 2 12 6 14 11 10
4 10 8 11 13 1 5 6 14 0 7 2 9 12 3
5 14 12 9 7 8 2 11 0 10 3 4 6 1 13
6 11 4 13 10 3 14 8 12 1 2 9 7 5 0
7 8 9 0 1 2 11 3 4 5 14 13 10 6 12
8 13 6 10 11 0 12 4 5 3 9 7 2 14 1
9 5 11 14 0 6 7 10 2 12 1 3 13 4 8
10 3 13 12 5 14 8 2 9 6 11 0 1 7 4
11 12 7 1 14 4 9 13 6 8 0 10 3 2 5
12 6 3 8 9 7 10 1 11 13 5 14 4 0 2
13 7 14 2 12 10 1 5 3 4 6 8 0 9 11
14 9 10 5 2 13 0 12 7 11 4 1 8 3 6
gyration names
I I I I I I I I I I I I I I I
I I I A A B C D D B A C C D B
I I I D B D B A B A C A D C C
I B C I B A C I D A D B D C A
I B A A I B B B A I B A I I A
I A C B A I B C I B D A C D D
I D A D A A I B C B C B C D I
I C B I A D A I A B B D C D C
I C A C B I D B I A A D D C B
I A B B I A A A B I A B I I B
I B D C A C D A B B I I C D A
I D B A B B A C C A I I D C D
I D C C I D D D C I D C I I C
I C D D I C C C D I C D I I D
I A D B B C I D A A B C D C I
perm A = (1 7 5 10 6)(2 3 8 11 14)
perm B = (1 6 10 5 7)(2 14 11 8 3)
perm C = (1 10 7 6 5)(2 11 3 14 8)
perm D = (1 5 6 7 10)(2 8 14 3 11)
)";

constexpr std::string_view kG16 = R"(gyrogroup 16
addition
0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15
1 0 3 2 5 4 7 6 9 8 11 10 13 12 15 14
2 3 1 0 6 7 5 4 11 10 8 9 15 14 12 13
3 2 0 1 7 6 4 5 10 11 9 8 14 15 13 12
4 5 6 7 3 2 0 1 15 14 12 13 9 8 11 10
5 4 7 6 2 3 1 0 14 15 13 12 8 9 10 11
6 7 5 4 0 1 2 3 13 12 15 14 10 11 9 8
7 6 4 5 1 0 3 2 12 13 14 15 11 10 8 9
8 9 10 11 12 13 14 15 0 1 2 3 4 5 6 7
9 8 11 10 13 12 15 14 1 0 3 2 5 4 7 6
10 11 9 8 14 15 13 12 3 2 0 1 7 6 4 5
11 10 8 9 15 14 12 13 2 3 1 0 6 7 5 4
12 13 14 15 11 10 8 9 6 7 5 4 0 1 2 3
13 12 15 14 10 11 9 8 7 6 4 5 1 0 3 2
14 15 13 12 8 9 10 11 4 5 6 7 3 2 0 1
15 14 12 13 9 8 11 10 5 4 7 6 2 3 1 0
gyration names
I I I I I I I I I I I I I I I I
I I I I I I I I I I I I I I I I
I I I I I I I I I I I I I I I I
I I I I I I I I I I I I I I I I
I I I I I I I I A A A A A A A A
I I I I I I I I A A A A A A A A
I I I I I I I I A A A A A A A A
I I I I I I I I A A A A A A A A
I I I I A A A A I I I I A A A A
I I I I A A A A I I I I A A A A
I I I I A A A A I I I I A A A A
I I I I A A A A I I I I A A A A
I I I I A A A A A A A A I I I I
I I I I A A A A A A A A I I I I
I I I I A A A A A A A A I I I I
I I I I A A A A A A A A I I I I
perm A = (8 9)(10 11)(12 13)(14 15)
)";

const std::map<std::string, std::string_view, std::less<>>& sources() {
    static const std::map<std::string, std::string_view, std::less<>> map = {
        {"g8", kG8},
        {"g15", kG15},
        {"g16", kG16},
    };
    return map;
}

}  // namespace

std::string_view builtin_source(std::string_view name) {
    const auto& map = sources();
    auto it = map.find(name);
    if (it == map.end())
        throw GyroError("unknown builtin '" + std::string(name) + "' (have: g8, g15, g16)");
    return it->second;
}

const Gyrogroup& builtin(std::string_view name) {
    // magic static: all builtins parse and validate once, thread-safely
    static const std::map<std::string, Gyrogroup, std::less<>> cache = [] {
        std::map<std::string, Gyrogroup, std::less<>> built;
        for (const auto& [key, source] : sources()) {
            auto parsed = parse_table_file(source);
            auto result = verify_axioms(parsed.addition, parsed.gyrations, key);
            if (!result.group)
                throw GyroError("builtin '" + key + "' failed validation: " +
                                result.report.violations.front().detail);
            built.emplace(key, std::move(*result.group));
        }
        return built;
    }();

    auto it = cache.find(name);
    if (it == cache.end())
        throw GyroError("unknown builtin '" + std::string(name) + "' (have: g8, g15, g16)");
    return it->second;
}

std::vector<std::string> builtin_names() {
    std::vector<std::string> names;
    for (const auto& [name, _] : sources()) names.push_back(name);
    return names;
}

}  // namespace gyro
