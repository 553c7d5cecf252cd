#include "lrb/weights.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace lrb {

namespace {

bool weakly_decreasing(const std::vector<int>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i - 1] < v[i]) return false;
    }
    return true;
}

}  // namespace

Weight::Weight(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw std::invalid_argument("Weight: rank must be at least 1");
    }
    if (!weakly_decreasing(entries_)) {
        throw std::invalid_argument("Weight: entries must be weakly decreasing");
    }
}

long long Weight::sum() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

Weight Weight::dual() const {
    std::vector<int> d(entries_.rbegin(), entries_.rend());
    for (int& x : d) x = -x;
    return Weight(std::move(d));
}

Weight Weight::shifted(int c) const {
    std::vector<int> s = entries_;
    for (int& x : s) x += c;
    return Weight(std::move(s));
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    if (!weakly_decreasing(parts_)) {
        throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    if (!parts_.empty() && parts_.back() < 0) {
        throw std::invalid_argument("Partition: parts must be nonnegative");
    }
}

long long Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int Partition::part(int i) const {
    if (i < 1) throw std::invalid_argument("Partition::part: index is 1-based");
    return i <= length() ? parts_[static_cast<std::size_t>(i) - 1] : 0;
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int j = 1; j <= inner.length(); ++j) {
        if (inner.part(j) > part(j)) return false;
    }
    return true;
}

SchubertIndex::SchubertIndex(std::vector<int> elements, int n)
    : elements_(std::move(elements)), n_(n) {
    const int r = static_cast<int>(elements_.size());
    if (n_ < 2 || r < 1 || r > n_ - 1) {
        throw std::invalid_argument("SchubertIndex: need 1 <= r <= n-1");
    }
    for (int i = 0; i < r; ++i) {
        if (elements_[i] < 1 || elements_[i] > n_ ||
            (i > 0 && elements_[i] <= elements_[i - 1])) {
            throw std::invalid_argument(
                "SchubertIndex: elements must be strictly increasing in [1,n]");
        }
    }
}

bool SchubertIndex::contains(int i) const {
    return std::binary_search(elements_.begin(), elements_.end(), i);
}

Weight restrict(const Weight& w, const SchubertIndex& I) {
    if (w.rank() != I.n()) {
        throw std::invalid_argument("restrict: weight rank does not match subset ambient size");
    }
    std::vector<int> picked;
    picked.reserve(I.elements().size());
    for (int i : I.elements()) picked.push_back(w.entry(i));
    return Weight(std::move(picked));
}

SchubertIndex complement(const SchubertIndex& I) {
    std::vector<int> rest;
    rest.reserve(I.n() - I.r());
    for (int i = 1; i <= I.n(); ++i) {
        if (!I.contains(i)) rest.push_back(i);
    }
    return SchubertIndex(std::move(rest), I.n());
}

Partition index_to_partition(const SchubertIndex& I) {
    const int r = I.r();
    std::vector<int> parts(r);
    for (int j = 1; j <= r; ++j) {
        parts[j - 1] = I.elements()[r - j] - (r + 1 - j);
    }
    return Partition(std::move(parts));
}

SchubertIndex partition_to_index(const Partition& p, int r, int n) {
    if (p.length() > r || p.part(1) > n - r) {
        throw std::invalid_argument("partition_to_index: partition does not fit the r x (n-r) box");
    }
    std::vector<int> elems(r);
    for (int j = 1; j <= r; ++j) {
        elems[r - j] = p.part(j) + (r + 1 - j);
    }
    return SchubertIndex(std::move(elems), n);
}

Partition partition_from_weight(const Weight& w) {
    if (w.entry(w.rank()) < 0) {
        throw std::invalid_argument("partition_from_weight: negative entries");
    }
    return Partition(w.entries());
}

namespace {

std::vector<int> parse_int_list(std::string_view text, const char* what) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string_view::npos) next = text.size();
        std::string_view tok = text.substr(pos, next - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
            throw ParseError(std::string(what) + ": bad integer '" + std::string(tok) + "'");
        }
        out.push_back(value);
        pos = next + 1;
        if (next == text.size()) break;
    }
    return out;
}

}  // namespace

Weight parse_weight(std::string_view text) {
    if (text.empty()) throw ParseError("weight: empty string");
    try {
        return Weight(parse_int_list(text, "weight"));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("weight: ") + e.what());
    }
}

Partition parse_partition(std::string_view text) {
    if (text.empty()) return Partition();
    try {
        return Partition(parse_int_list(text, "partition"));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("partition: ") + e.what());
    }
}

SchubertIndex parse_subset(std::string_view text, int n) {
    if (text.empty()) throw ParseError("subset: empty string");
    try {
        return SchubertIndex(parse_int_list(text, "subset"), n);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("subset: ") + e.what());
    }
}

namespace {

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace

std::string to_string(const Weight& w) { return join(w.entries()); }
std::string to_string(const Partition& p) { return join(p.parts()); }
std::string to_string(const SchubertIndex& I) { return join(I.elements()); }

std::vector<Partition> partitions_of(int m) {
    if (m < 0) throw std::invalid_argument("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Descending lex: pick the first part largest-first, recurse.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, m, m);
    return out;
}

std::vector<std::vector<int>> subsets(int n, int r) {
    std::vector<std::vector<int>> out;
    if (r < 0 || r > n) return out;
    std::vector<int> cur(r);
    for (int i = 0; i < r; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = r - 1;
        while (i >= 0 && cur[i] == n - r + i + 1) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<Weight> weights_in_box(int rank, int bound) {
    if (rank < 1 || bound < 0) {
        throw std::invalid_argument("weights_in_box: need rank >= 1 and bound >= 0");
    }
    std::vector<Weight> out;
    std::vector<int> cur(rank);
    auto rec = [&](auto&& self, int pos, int max_entry) -> void {
        if (pos == rank) {
            out.emplace_back(cur);
            return;
        }
        for (int v = max_entry; v >= -bound; --v) {
            cur[pos] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, bound);
    return out;
}

}  // namespace lrb
