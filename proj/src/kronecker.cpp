#include "lrb/kronecker.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

#include "lrb/lrcalc.hpp"

namespace lrb {

namespace {

int find_partition(const std::vector<Partition>& list, const Partition& p) {
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (list[i] == p) return static_cast<int>(i);
    }
    throw std::invalid_argument("partition not found in table index");
}

// Beta-set of a partition padded to the given length: distinct values
// p_i + (len - i), i = 1..len.
std::vector<int> beta_set(const Partition& p, int len) {
    std::vector<int> beta(len);
    for (int i = 1; i <= len; ++i) beta[i - 1] = p.part(i) + (len - i);
    return beta;
}

Partition partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int len = static_cast<int>(beta.size());
    std::vector<int> parts(len);
    for (int i = 1; i <= len; ++i) parts[i - 1] = beta[i - 1] - (len - i);
    return Partition(std::move(parts));
}

long long z_order(const Partition& cls) {
    // |centralizer| = prod_i i^{m_i} m_i!
    long long z = 1;
    int run_value = 0, run_length = 0;
    auto flush = [&]() {
        for (int c = 1; c <= run_length; ++c) z *= static_cast<long long>(run_value) * c;
    };
    for (int part : cls.parts()) {
        if (part == run_value) {
            ++run_length;
        } else {
            flush();
            run_value = part;
            run_length = 1;
        }
    }
    flush();
    return z;
}

// Tables for all sizes up to the largest requested so far, built in order;
// table m only reads tables m - (first part of the class).
class TableStore {
public:
    const CharacterTable& get(int n) {
        std::lock_guard lock(mutex_);
        while (static_cast<int>(tables_.size()) <= n) {
            build_next();
        }
        return tables_[n];
    }

private:
    void build_next() {
        const int m = static_cast<int>(tables_.size());
        CharacterTable t;
        t.n = m;
        t.irreps = partitions_of(m);
        t.classes = t.irreps;
        t.factorial = 1;
        for (int i = 2; i <= m; ++i) t.factorial *= i;
        t.class_sizes.resize(t.classes.size());
        for (std::size_t c = 0; c < t.classes.size(); ++c) {
            t.class_sizes[c] = t.factorial / z_order(t.classes[c]);
        }
        t.values.assign(t.irreps.size(), std::vector<long long>(t.classes.size(), 0));
        if (m == 0) {
            t.values = {{1}};
            tables_.push_back(std::move(t));
            return;
        }
        for (std::size_t a = 0; a < t.irreps.size(); ++a) {
            for (std::size_t c = 0; c < t.classes.size(); ++c) {
                t.values[a][c] = evaluate(t.irreps[a], t.classes[c]);
            }
        }
        tables_.push_back(std::move(t));
    }

    // Border-strip recursion over beta-sets: removing a strip of length s
    // moves one beta value down by s onto a free spot; the sign is the
    // number of occupied values passed over.
    long long evaluate(const Partition& irrep, const Partition& cls) const {
        const int s = cls.part(1);
        const Partition rest(std::vector<int>(cls.parts().begin() + 1, cls.parts().end()));
        const CharacterTable& sub = tables_[irrep.size() - s];
        const int rest_idx = find_partition(sub.classes, rest);

        const int len = irrep.length();
        std::vector<int> beta = beta_set(irrep, len);
        long long total = 0;
        for (int i = 0; i < len; ++i) {
            const int target = beta[i] - s;
            if (target < 0) continue;
            bool occupied = false;
            int passed = 0;
            for (int j = 0; j < len; ++j) {
                if (j == i) continue;
                if (beta[j] == target) occupied = true;
                if (beta[j] < beta[i] && beta[j] > target) ++passed;
            }
            if (occupied) continue;
            std::vector<int> moved = beta;
            moved[i] = target;
            const Partition smaller = partition_from_beta(std::move(moved));
            const int row = find_partition(sub.irreps, smaller);
            const long long sign = (passed % 2 == 0) ? 1 : -1;
            total += sign * sub.values[row][rest_idx];
        }
        return total;
    }

    std::mutex mutex_;
    std::deque<CharacterTable> tables_;  // stable references while growing
};

TableStore& store() {
    static TableStore s;
    return s;
}

}  // namespace

long long CharacterTable::value(const Partition& irrep, const Partition& cls) const {
    return values[find_partition(irreps, irrep)][find_partition(classes, cls)];
}

long long CharacterTable::class_size(const Partition& cls) const {
    return class_sizes[find_partition(classes, cls)];
}

const CharacterTable& character_table(int n, int bound) {
    if (n < 1) throw std::invalid_argument("character_table: n must be at least 1");
    if (n > bound) throw std::invalid_argument("character_table: n exceeds the configured bound");
    return store().get(n);
}

KroneckerCoefficient kronecker_coefficient(const Partition& alpha, const Partition& beta,
                                           const Partition& gamma, int bound) {
    const long long n = alpha.size();
    if (beta.size() != n || gamma.size() != n) {
        throw std::invalid_argument("kronecker_coefficient: partitions must have equal size");
    }
    KroneckerCoefficient result{0, alpha, beta, gamma};
    if (n == 0) {
        result.value = 1;
        return result;
    }
    const CharacterTable& t = character_table(static_cast<int>(n), bound);
    const int a = find_partition(t.irreps, alpha);
    const int b = find_partition(t.irreps, beta);
    const int c = find_partition(t.irreps, gamma);
    Int sum = 0;
    for (std::size_t cls = 0; cls < t.classes.size(); ++cls) {
        sum += Int(t.class_sizes[cls]) * t.values[a][cls] * t.values[b][cls] *
               t.values[c][cls];
    }
    if (sum % t.factorial != 0) {
        throw TheoremViolation("kronecker_coefficient: inexact character sum");
    }
    result.value = sum / t.factorial;
    if (result.value < 0) {
        throw TheoremViolation("kronecker_coefficient: negative multiplicity");
    }
    return result;
}

Partition strip_first_row(const Partition& p) {
    if (p.empty()) return p;
    return Partition(std::vector<int>(p.parts().begin() + 1, p.parts().end()));
}

MurnaghanLittlewoodReport murnaghan_littlewood_check(const Partition& alpha,
                                                     const Partition& beta,
                                                     const Partition& gamma, int bound) {
    const long long n = alpha.size();
    if (beta.size() != n || gamma.size() != n) {
        throw std::invalid_argument("murnaghan_littlewood_check: partitions must have equal size");
    }
    MurnaghanLittlewoodReport rep;
    rep.k = kronecker_coefficient(alpha, beta, gamma, bound).value;
    rep.depth_lhs = (n - alpha.part(1)) + (n - beta.part(1));
    rep.depth_rhs = n - gamma.part(1);
    rep.equality_case = rep.depth_lhs == rep.depth_rhs;
    if (rep.k != 0 && rep.depth_lhs < rep.depth_rhs) {
        throw TheoremViolation("depth inequality failed for nonzero Kronecker coefficient");
    }
    if (rep.equality_case) {
        rep.lr = lr_coefficient(strip_first_row(alpha), strip_first_row(beta),
                                strip_first_row(gamma));
        if (*rep.lr != rep.k) {
            throw TheoremViolation("first-row reduction failed: k != lr");
        }
    }
    return rep;
}

Int dimension(const Partition& p) {
    // n! / product of hook lengths
    const long long n = p.size();
    Int fact = 1;
    for (long long i = 2; i <= n; ++i) fact *= i;
    // conjugate column lengths
    std::vector<int> col(p.part(1), 0);
    for (int i = 1; i <= p.length(); ++i) {
        for (int j = 0; j < p.part(i); ++j) ++col[j];
    }
    Int hooks = 1;
    for (int i = 1; i <= p.length(); ++i) {
        for (int j = 1; j <= p.part(i); ++j) {
            hooks *= (p.part(i) - j) + (col[j - 1] - i) + 1;
        }
    }
    if (fact % hooks != 0) {
        throw TheoremViolation("dimension: hook product does not divide n!");
    }
    return fact / hooks;
}

}  // namespace lrb
