#include "zq/census.hpp"

#include <mutex>
#include <thread>

#include "zq/enumerate.hpp"
#include "zq/tree.hpp"

namespace zq {

std::uint64_t CensusRow::total() const {
    std::uint64_t t = 0;
    for (auto& [k, c] : counts) t += c;
    return t;
}

namespace {

CensusRow census_one(int n, int workers) {
    CensusRow row;
    row.n = n;
    FreeTreeStream stream(n);
    if (workers <= 1) {
        while (auto t = stream.next()) ++row.counts[z1_tree(*t)];
        return row;
    }
    std::mutex pull;
    std::vector<std::map<int, std::uint64_t>> partial(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            while (true) {
                std::optional<Graph> t;
                {
                    std::lock_guard<std::mutex> lock(pull);
                    t = stream.next();
                }
                if (!t) break;
                ++partial[w][z1_tree(*t)];
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& p : partial)
        for (auto& [k, c] : p) row.counts[k] += c;  // commutative merge
    return row;
}

}  // namespace

std::vector<CensusRow> census(int n_min, int n_max, int workers, int cap) {
    if (n_min < 3 || n_min > n_max) throw ContractViolation("census: need 3 <= n_min <= n_max");
    if (n_max > cap)
        throw ResourceLimitError("census: n_max=" + std::to_string(n_max) + " above cap " + std::to_string(cap));
    std::vector<CensusRow> rows;
    for (int n = n_min; n <= n_max; ++n) rows.push_back(census_one(n, workers));
    return rows;
}

void write_census_csv(std::ostream& os, const std::vector<CensusRow>& rows) {
    os << "n,k,count\n";
    for (const CensusRow& row : rows)
        for (auto& [k, c] : row.counts) os << row.n << "," << k << "," << c << "\n";
}

}  // namespace zq
