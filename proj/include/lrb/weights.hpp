#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lrb {

// All multiplicities and intersection numbers are exact; they grow fast,
// so they live in an arbitrary-precision integer.
using Int = boost::multiprecision::cpp_int;

// A textual encoding that cannot be turned into a domain value.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mechanically verified identity failed. Never expected to fire.
struct TheoremViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// Dominant GL_n weight: a weakly decreasing integer vector of rank n >= 1.
/// Trailing zeros are significant: (1,0) and (1,0,0) index representations
/// of different groups.
class Weight {
public:
    explicit Weight(std::vector<int> entries);

    int rank() const { return static_cast<int>(entries_.size()); }
    /// 1-based access, i in [1, rank()].
    int entry(int i) const { return entries_.at(static_cast<std::size_t>(i) - 1); }
    const std::vector<int>& entries() const { return entries_; }
    long long sum() const;

    /// The dual weight (-w_n, ..., -w_1); dominant again.
    Weight dual() const;
    /// Entrywise w + c*(1,...,1).
    Weight shifted(int c) const;

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;

private:
    std::vector<int> entries_;
};

/// Partition: weakly decreasing positive parts, trailing zeros stripped.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int length() const { return static_cast<int>(parts_.size()); }
    long long size() const;
    /// 1-based part access; returns 0 past the last part.
    int part(int i) const;
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    /// inner_j <= outer_j for all j (with zero padding).
    bool contains(const Partition& inner) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// An r-element subset of {1,...,n} with 1 <= r <= n-1, indexing a Schubert
/// class of Gr(r,n). Elements are kept sorted increasing and 1-based.
class SchubertIndex {
public:
    SchubertIndex(std::vector<int> elements, int n);

    int r() const { return static_cast<int>(elements_.size()); }
    int n() const { return n_; }
    const std::vector<int>& elements() const { return elements_; }
    bool contains(int i) const;

    friend bool operator==(const SchubertIndex&, const SchubertIndex&) = default;
    friend auto operator<=>(const SchubertIndex&, const SchubertIndex&) = default;

private:
    std::vector<int> elements_;
    int n_;
};

/// (w_{i_1}, ..., w_{i_r}): the restriction of w to the positions in I.
Weight restrict(const Weight& w, const SchubertIndex& I);

/// {1..n} \ I, sorted increasing.
SchubertIndex complement(const SchubertIndex& I);

/// The one partition dictionary of the whole project:
///   lambda(I)_j = i_{r+1-j} - (r+1-j),  j = 1..r.
/// {1..r} maps to the empty partition, {n-r+1..n} to the full box (n-r)^r.
/// No other translation between subsets and partitions may be used anywhere.
Partition index_to_partition(const SchubertIndex& I);

/// Inverse of index_to_partition for partitions inside the r x (n-r) box.
SchubertIndex partition_to_index(const Partition& p, int r, int n);

/// Partition from a weight with nonnegative entries (strips trailing zeros).
Partition partition_from_weight(const Weight& w);

// Text encodings. Weights and partitions are comma-separated integers,
// subsets comma-separated 1-based indices. The empty string is the empty
// partition; weights and subsets must be nonempty.
Weight parse_weight(std::string_view text);
Partition parse_partition(std::string_view text);
SchubertIndex parse_subset(std::string_view text, int n);

std::string to_string(const Weight& w);
std::string to_string(const Partition& p);
std::string to_string(const SchubertIndex& I);

// Enumeration helpers shared by the other modules and the test suites.

/// All partitions of m, in descending lexicographic order; (m) first.
std::vector<Partition> partitions_of(int m);

/// All r-element subsets of {1..n} in lexicographic order, 1-based.
std::vector<std::vector<int>> subsets(int n, int r);

/// All weakly decreasing integer vectors of the given rank with entries in
/// [-bound, bound], in lexicographic order (largest first entry first).
std::vector<Weight> weights_in_box(int rank, int bound);

}  // namespace lrb
