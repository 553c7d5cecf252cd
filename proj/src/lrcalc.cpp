#include "lrb/lrcalc.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace lrb {

namespace {

// Skew cell list of nu/lambda in reverse reading order: rows top to bottom,
// cells right to left within a row. Filling in this order lets the lattice
// condition be checked one letter at a time.
struct SkewCell {
    int row;  // 1-based
    int col;  // 1-based
};

Int count_lattice_tableaux(const Partition& lambda, const Partition& mu,
                           const Partition& nu) {
    const int rows = nu.length();
    std::vector<SkewCell> cells;
    for (int i = 1; i <= rows; ++i) {
        for (int j = nu.part(i); j > lambda.part(i); --j) {
            cells.push_back({i, j});
        }
    }
    const int letters = mu.length();

    // grid[i][j] = entry at (i+1, j+1), 0 = empty/outside
    std::vector<std::vector<int>> grid(rows, std::vector<int>(nu.part(1), 0));
    std::vector<long long> used(letters + 1, 0);

    Int count = 0;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            ++count;
            return;
        }
        const auto [i, j] = cells[k];
        // In an LR tableau the entry at row i never exceeds i.
        int hi = std::min(i, letters);
        if (j < nu.part(i)) hi = std::min(hi, grid[i - 1][j]);  // row weakly increasing
        int lo = 1;
        if (i > 1 && j <= nu.part(i - 1) && j > lambda.part(i - 1)) {
            lo = grid[i - 2][j - 1] + 1;  // column strictly increasing
        }
        for (int e = lo; e <= hi; ++e) {
            if (used[e] >= mu.part(e)) continue;
            if (e > 1 && used[e] >= used[e - 1]) continue;  // lattice word
            ++used[e];
            grid[i - 1][j - 1] = e;
            self(self, k + 1);
            grid[i - 1][j - 1] = 0;
            --used[e];
        }
    };
    rec(rec, 0);
    return count;
}

struct TripleKey {
    std::vector<int> flat;
    friend bool operator==(const TripleKey&, const TripleKey&) = default;
};

struct TripleKeyHash {
    std::size_t operator()(const TripleKey& k) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : k.flat) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

TripleKey make_key(const Partition& a, const Partition& b, const Partition& c) {
    TripleKey k;
    k.flat.reserve(a.length() + b.length() + c.length() + 2);
    k.flat.insert(k.flat.end(), a.parts().begin(), a.parts().end());
    k.flat.push_back(-1);
    k.flat.insert(k.flat.end(), b.parts().begin(), b.parts().end());
    k.flat.push_back(-1);
    k.flat.insert(k.flat.end(), c.parts().begin(), c.parts().end());
    return k;
}

}  // namespace

Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() + mu.size() != nu.size()) return 0;
    if (!nu.contains(lambda)) return 0;

    static std::unordered_map<TripleKey, Int, TripleKeyHash> cache;
    static std::mutex cache_mutex;
    const TripleKey key = make_key(lambda, mu, nu);
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    Int value = count_lattice_tableaux(lambda, mu, nu);
    {
        std::lock_guard lock(cache_mutex);
        cache.emplace(key, value);
    }
    return value;
}

TripleCoefficient triple_coefficient(const Weight& lambda, const Weight& mu,
                                     const Weight& nu, int n) {
    if (lambda.rank() != n || mu.rank() != n || nu.rank() != n) {
        throw std::invalid_argument("triple_coefficient: weight ranks must equal n");
    }
    TripleCoefficient result{0, n, lambda, mu, nu};
    if (lambda.sum() + mu.sum() + nu.sum() != 0) return result;  // determinant character

    // Fixed normalization: a = -lambda_n, b = -mu_n, target = nu^* + (a+b).
    const int a = -lambda.entry(n);
    const int b = -mu.entry(n);
    Weight lam = lambda.shifted(a);
    Weight m = mu.shifted(b);
    Weight target = nu.dual().shifted(a + b);
    // Compensated shift: push both lambda and the target up by the same
    // amount (a determinant twist) until the target is a partition.
    if (target.entry(n) < 0) {
        const int d = -target.entry(n);
        lam = lam.shifted(d);
        target = target.shifted(d);
    }
    result.value = lr_coefficient(partition_from_weight(lam), partition_from_weight(m),
                                  partition_from_weight(target));
    return result;
}

namespace {

// Content statistics of all semistandard tableaux of the given shape with
// entries in 1..n: composition -> number of tableaux. This is the weight
// multiplicity table of the GL_n irreducible attached to the shape.
std::map<std::vector<int>, long long> ssyt_contents(const Partition& shape, int n) {
    std::map<std::vector<int>, long long> mults;
    const int rows = shape.length();
    std::vector<int> content(n, 0);
    if (rows == 0) {
        mults[content] = 1;
        return mults;
    }
    std::vector<std::vector<int>> grid(rows, std::vector<int>(shape.part(1), 0));
    auto rec = [&](auto&& self, int i, int j) -> void {
        if (i == rows) {
            ++mults[content];
            return;
        }
        if (j > shape.part(i + 1)) {
            self(self, i + 1, 1);
            return;
        }
        int lo = 1;
        if (j > 1) lo = std::max(lo, grid[i][j - 2]);
        if (i > 0 && j <= shape.part(i)) lo = std::max(lo, grid[i - 1][j - 1] + 1);
        for (int e = lo; e <= n; ++e) {
            grid[i][j - 1] = e;
            ++content[e - 1];
            self(self, i, j + 1);
            --content[e - 1];
        }
        grid[i][j - 1] = 0;
    };
    rec(rec, 0, 1);
    return mults;
}

int permutation_sign(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) {
            if (perm[i] > perm[j]) ++inversions;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

Int oracle_triple_coefficient(const Weight& lambda, const Weight& mu,
                              const Weight& nu, int n,
                              const OracleLimits& limits) {
    if (lambda.rank() != n || mu.rank() != n || nu.rank() != n) {
        throw std::invalid_argument("oracle_triple_coefficient: weight ranks must equal n");
    }
    if (n > limits.max_rank) {
        throw std::invalid_argument("oracle_triple_coefficient: rank exceeds the oracle bound");
    }
    for (const Weight* w : {&lambda, &mu, &nu}) {
        if (w->entry(1) - w->entry(n) > limits.max_spread) {
            throw std::invalid_argument("oracle_triple_coefficient: entry spread exceeds the oracle bound");
        }
    }

    // Multiplicity of V_{nu^*} in V_lambda ox V_mu by the alternating-sum
    // contraction over the Weyl group S_n:
    //   sum_w sign(w) m_mu( w(kappa + delta) - delta - lambda ),  kappa = nu^*.
    // m_mu is read off the semistandard content table of mu shifted to a
    // partition; the trace obstruction falls out automatically.
    const Weight kappa = nu.dual();
    const int b = -mu.entry(n);
    const auto mults = ssyt_contents(partition_from_weight(mu.shifted(b)), n);

    std::vector<int> kappa_delta(n);
    for (int i = 1; i <= n; ++i) kappa_delta[i - 1] = kappa.entry(i) + (n - i);

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    Int total = 0;
    std::vector<int> arg(n);
    do {
        for (int i = 0; i < n; ++i) {
            // w(kappa+delta) - delta - lambda, then the det^b twist moving
            // weights of V_mu to weights of the shifted partition.
            arg[i] = kappa_delta[idx[i]] - (n - 1 - i) - lambda.entry(i + 1) + b;
        }
        auto it = mults.find(arg);
        if (it != mults.end()) {
            total += permutation_sign(idx) * Int(it->second);
        }
    } while (std::next_permutation(idx.begin(), idx.end()));

    if (total < 0) {
        throw TheoremViolation("oracle_triple_coefficient: negative multiplicity");
    }
    return total;
}

}  // namespace lrb
