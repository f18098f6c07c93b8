#include "test_support.hpp"

namespace vknot::test {

BiLaurent bi(const std::vector<std::tuple<int, int, long long>>& terms)
{
    BiLaurent p;
    for (const auto& [i, j, c] : terms)
        p.add_term({i, j}, c);
    return p;
}

UniLaurent uni(const std::vector<std::pair<int, long long>>& terms)
{
    UniLaurent p;
    for (const auto& [i, c] : terms)
        p.add_term({i}, c);
    return p;
}

} // namespace vknot::test
