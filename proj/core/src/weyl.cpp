#include "trgr/weyl.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace trgr {

Int weyl_dim(int N, const GLWeight& mu) {
    if (static_cast<int>(mu.size()) != N)
        throw std::invalid_argument("weyl_dim: weight length must equal N");
    Int num = 1, den = 1;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            num *= Int(mu.entry(i) - mu.entry(j) + j - i);
            den *= Int(j - i);
        }
    return num / den;
}

Int weyl_dim(int N, const Partition& lam) {
    if (static_cast<int>(lam.length()) > N) return 0;
    return weyl_dim(N, GLWeight::from_partition(lam, static_cast<std::size_t>(N)));
}

Int ssyt_count(int N, const Partition& lam) {
    if (static_cast<int>(lam.length()) > N) return 0;
    if (lam.empty()) return 1;

    const std::size_t rows = lam.length();
    std::vector<std::vector<int>> fill(rows);
    for (std::size_t i = 0; i < rows; ++i)
        fill[i].assign(static_cast<std::size_t>(lam.parts()[i]), 0);

    Int count = 0;
    // Fill cells row by row: weakly increasing along rows, strictly down columns.
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t r, std::size_t c) {
        if (r == rows) {
            ++count;
            return;
        }
        if (c == fill[r].size()) {
            rec(r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, fill[r][c - 1]);
        if (r > 0 && c < fill[r - 1].size()) lo = std::max(lo, fill[r - 1][c] + 1);
        for (int v = lo; v <= N; ++v) {
            fill[r][c] = v;
            rec(r, c + 1);
        }
    };
    rec(0, 0);
    return count;
}

std::vector<Partition> pieri_column(const Partition& lam, int k, int N) {
    if (static_cast<int>(lam.length()) > N)
        throw std::invalid_argument("pieri_column: lam has more than N parts");
    if (k < 0 || k > N) throw std::invalid_argument("pieri_column: need 0 <= k <= N");

    std::vector<long> base(static_cast<std::size_t>(N), 0);
    for (std::size_t i = 0; i < lam.length(); ++i) base[i] = lam.parts()[i];

    std::vector<Partition> out;
    std::vector<long> cur(base);
    // Choose the set of rows receiving one box each; keep weak decrease.
    std::function<void(int, int)> rec = [&](int row, int left) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        if (row == N || N - row < left) return;
        rec(row + 1, left);
        const std::size_t i = static_cast<std::size_t>(row);
        if (row == 0 || cur[i] + 1 <= cur[i - 1]) {
            ++cur[i];
            rec(row + 1, left - 1);
            --cur[i];
        }
    };
    rec(0, k);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace trgr
