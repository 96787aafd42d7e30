#pragma once

#include "iqinv/qfield.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace iqinv {

using Key = std::uint64_t;

// Sparse vector: entries sorted by key, no zero coefficients.
class SparseVec {
public:
    using Entry = std::pair<Key, Scalar>;

    SparseVec() = default;
    static SparseVec unit(Key k, Scalar c = Scalar(1));
    // sums duplicate keys and drops zeros
    static SparseVec from_entries(std::vector<Entry> entries);
    static SparseVec from_map(const std::map<Key, Scalar>& m);

    bool empty() const { return e_.empty(); }
    std::size_t size() const { return e_.size(); }
    const std::vector<Entry>& entries() const { return e_; }
    auto begin() const { return e_.begin(); }
    auto end() const { return e_.end(); }
    Key lead_key() const { return e_.front().first; }
    const Scalar& lead() const { return e_.front().second; }
    Scalar get(Key k) const;

    SparseVec scaled(const Scalar& c) const;
    // this += c * o
    void axpy(const Scalar& c, const SparseVec& o);
    SparseVec operator+(const SparseVec& o) const;
    SparseVec operator-(const SparseVec& o) const;
    friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.e_ == b.e_; }

    // push an entry with key larger than all present keys
    void push_back(Key k, Scalar c);

private:
    std::vector<Entry> e_;
};

// Accumulates sparse combinations with arbitrary key order.
class SparseAccumulator {
public:
    void add(Key k, const Scalar& c);
    void add(const SparseVec& v, const Scalar& c = Scalar(1));
    SparseVec take();

private:
    std::map<Key, Scalar> m_;
};

// Row space in reduced row-echelon form over keys 0..ambient-1.
struct Subspace {
    std::size_t ambient = 0;
    std::vector<SparseVec> basis;  // sorted by pivot
    std::vector<Key> pivots;

    std::size_t dim() const { return basis.size(); }
    long pivot_index(Key k) const;  // -1 if k is not a pivot
    SparseVec reduce(const SparseVec& v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
};

class EchelonBuilder {
public:
    explicit EchelonBuilder(std::size_t ambient) : ambient_(ambient) {}
    bool add(const SparseVec& v);  // true iff rank grew
    std::size_t rank() const { return rows_.size(); }
    bool in_span(const SparseVec& v) const;
    Subspace finish() const;

private:
    SparseVec forward_reduce(const SparseVec& v) const;
    std::size_t ambient_;
    std::map<Key, SparseVec> rows_;
};

Subspace echelonize(const std::vector<SparseVec>& vs, std::size_t ambient);
Subspace kernel(const std::vector<SparseVec>& rows, std::size_t unknowns);
// same result as kernel(), solved separately on each connected block of unknowns
Subspace block_kernel(const std::vector<SparseVec>& rows, std::size_t unknowns);
// RREF rows with pairwise disjoint supports, reordered by pivot
Subspace merge_blocks(std::size_t ambient, std::vector<SparseVec> rows);
Subspace full_space(std::size_t ambient);
Subspace zero_space(std::size_t ambient);

bool subspace_equals(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& a, const Subspace& b);  // b ⊆ a
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

// Linear map stored by columns: column c is the image of unit vector c.
struct LinearMap {
    std::size_t rows = 0;
    std::vector<SparseVec> cols;

    SparseVec apply(const SparseVec& v) const;
    Subspace image() const { return echelonize(cols, rows); }
    Subspace kernel() const;
    std::vector<SparseVec> transposed_rows() const;
    Scalar entry(Key row, Key col) const { return cols.at(col).get(row); }
    friend bool operator==(const LinearMap& a, const LinearMap& b) { return a.rows == b.rows && a.cols == b.cols; }
};

LinearMap identity_map(std::size_t n);
LinearMap zero_map(std::size_t rows, std::size_t cols);
LinearMap compose(const LinearMap& a, const LinearMap& b);  // a∘b
LinearMap add(const LinearMap& a, const LinearMap& b, const Scalar& cb = Scalar(1));
LinearMap scale(const LinearMap& a, const Scalar& c);
// a⊗b on keys ka*dim_b + kb
LinearMap kron(const LinearMap& a, const LinearMap& b);
LinearMap transpose(const LinearMap& a);
// flattens a map into a vector with key row*cols + col
SparseVec flatten(const LinearMap& a);

// The quotient ambient / ideal with basis the non-pivot keys.
struct QuotientSection {
    std::size_t ambient = 0;
    Subspace ideal;
    std::vector<Key> basis_keys;  // ascending non-pivot keys
    std::vector<long> coord;      // key -> quotient index, -1 on pivots

    std::size_t dim() const { return basis_keys.size(); }
    // coordinates (keys 0..dim-1) of the class of an ambient vector
    SparseVec project(const SparseVec& v) const;
    // the ambient vector on basis keys representing given coordinates
    SparseVec lift(const SparseVec& coords) const;
};

QuotientSection quotient_coords(std::size_t ambient, Subspace ideal);

}  // namespace iqinv
