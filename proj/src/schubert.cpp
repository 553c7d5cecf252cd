#include "lrb/schubert.hpp"

#include <algorithm>
#include <functional>

#include "lrb/lrcalc.hpp"

namespace lrb {

Partition box_complement(const Partition& p, int r, int n) {
    if (p.length() > r || p.part(1) > n - r) {
        throw std::invalid_argument("box_complement: partition does not fit the r x (n-r) box");
    }
    std::vector<int> parts(r);
    for (int j = 1; j <= r; ++j) {
        parts[j - 1] = (n - r) - p.part(r + 1 - j);
    }
    return Partition(std::move(parts));
}

namespace {

void check_same_grassmannian(const SchubertIndex& I, const SchubertIndex& J,
                             const SchubertIndex& K) {
    if (I.r() != J.r() || I.r() != K.r() || I.n() != J.n() || I.n() != K.n()) {
        throw std::invalid_argument("schubert: indices must share (r,n)");
    }
}

}  // namespace

IntersectionDegree triple_degree(const SchubertIndex& I, const SchubertIndex& J,
                                 const SchubertIndex& K) {
    check_same_grassmannian(I, J, K);
    const int r = I.r(), n = I.n();
    IntersectionDegree deg{0, I, J, K, r, n};
    const Partition a = index_to_partition(I);
    const Partition b = index_to_partition(J);
    const Partition c = index_to_partition(K);
    if (a.size() + b.size() + c.size() != static_cast<long long>(r) * (n - r)) {
        return deg;  // product lands below the top degree
    }
    deg.d = lr_coefficient(a, b, box_complement(c, r, n));
    return deg;
}

namespace {

std::vector<IndexTriple> enumerate_by_filter(int r, int n,
                                             const std::function<bool(const Int&)>& keep) {
    if (r < 1 || r >= n) {
        throw std::invalid_argument("enumerate: need 1 <= r <= n-1");
    }
    struct Entry {
        SchubertIndex index;
        Partition partition;
        long long codim;
    };
    std::vector<Entry> all;
    for (auto& elems : subsets(n, r)) {
        SchubertIndex idx(elems, n);
        Partition p = index_to_partition(idx);
        long long codim = p.size();
        all.push_back({std::move(idx), std::move(p), codim});
    }
    const long long top = static_cast<long long>(r) * (n - r);

    std::vector<IndexTriple> out;
    for (const Entry& ei : all) {
        for (const Entry& ej : all) {
            const long long need = top - ei.codim - ej.codim;
            if (need < 0) continue;
            for (const Entry& ek : all) {  // K last, pruned by the grading
                if (ek.codim != need) continue;
                Int d = lr_coefficient(ei.partition, ej.partition,
                                       box_complement(ek.partition, r, n));
                if (keep(d)) out.push_back({ei.index, ej.index, ek.index});
            }
        }
    }
    return out;
}

}  // namespace

std::vector<IndexTriple> enumerate_pt_triples(int r, int n, const Int& d) {
    return enumerate_by_filter(r, n, [&](const Int& got) { return got == d; });
}

std::vector<IndexTriple> enumerate_positive_triples(int r, int n) {
    return enumerate_by_filter(r, n, [](const Int& got) { return got > 0; });
}

std::map<SchubertIndex, Int> product_expansion(const SchubertIndex& I,
                                               const SchubertIndex& J) {
    if (I.r() != J.r() || I.n() != J.n()) {
        throw std::invalid_argument("product_expansion: indices must share (r,n)");
    }
    const int r = I.r(), n = I.n();
    const Partition a = index_to_partition(I);
    const Partition b = index_to_partition(J);
    const long long grade = a.size() + b.size();

    std::map<SchubertIndex, Int> terms;
    if (grade > static_cast<long long>(r) * (n - r)) return terms;  // past the top
    for (auto& elems : subsets(n, r)) {
        SchubertIndex idx(elems, n);
        Partition p = index_to_partition(idx);
        if (p.size() != grade) continue;
        Int coeff = lr_coefficient(a, b, p);
        if (coeff != 0) terms.emplace(std::move(idx), std::move(coeff));
    }
    return terms;
}

}  // namespace lrb
