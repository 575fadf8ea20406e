#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace trgr::cli {

/// Resolved run configuration; every report embeds it together with the
/// library version so identical configs reproduce byte-identical output.
struct RunConfig {
    int n = 4;
    int d = 2;
    int r = -1;  // -1: command default (all r where a range makes sense)
    bool r_list_given = false;
    std::vector<int> r_list;
    std::vector<std::uint64_t> seeds{1, 2, 3};
    int samples = 200;
    int curves = 20;
    long budget = 100000;
    int var_cap = 12;
    std::string format = "json";  // json | tsv (tsv for tabular commands)
    std::string out_path;         // empty = stdout
};

/// Exit codes: 0 pass, 1 check failure, 2 usage error, 3 budget divergence.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trgr::cli
