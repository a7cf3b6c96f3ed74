#pragma once

#include "chev/rootsys.hpp"

#include <memory>
#include <string>
#include <vector>

namespace testing_support {

inline std::shared_ptr<const chev::RootSystem> make_system(const std::string& name)
{
    return std::make_shared<const chev::RootSystem>(chev::RootSystem::build(chev::RootSystemType::parse(name)));
}

inline const std::vector<std::string>& rank_le_4()
{
    static const std::vector<std::string> v{"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"};
    return v;
}

// Every subset of {0..n-1}, as sorted index lists.
inline std::vector<std::vector<int>> subsets(int n)
{
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) s.push_back(i);
        out.push_back(s);
    }
    return out;
}

}  // namespace testing_support
