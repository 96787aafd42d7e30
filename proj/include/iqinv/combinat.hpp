#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace iqinv {

// Half-integer stored as twice its value.
struct HalfInt {
    int doubled = 0;

    static constexpr HalfInt from_doubled(int d) { return HalfInt{d}; }
    static constexpr HalfInt from_int(int v) { return HalfInt{2 * v}; }
    static HalfInt parse(std::string_view text);  // "k/2" or "k"

    constexpr bool is_integer() const { return doubled % 2 == 0; }
    constexpr HalfInt operator-() const { return HalfInt{-doubled}; }
    constexpr HalfInt operator+(HalfInt o) const { return HalfInt{doubled + o.doubled}; }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt{doubled - o.doubled}; }
    constexpr auto operator<=>(const HalfInt&) const = default;
    std::string str() const;
};

inline constexpr HalfInt kHalf{1};

using Tuple = std::vector<HalfInt>;
std::string tuple_str(const Tuple& t);

struct IndexScheme {
    HalfInt n;
    int N = 1;
    int n_plus = 1;
    int n_minus = 0;
    std::vector<HalfInt> underline;  // -n..n step 1
    std::vector<HalfInt> i_set;      // -n+1/2..n-1/2 step 1
    std::vector<HalfInt> i_pos;      // positive part of i_set

    bool contains(HalfInt a) const;
    int position(HalfInt a) const;  // index into underline; throws if absent
};

IndexScheme index_scheme(HalfInt n);

struct SignedPerm {
    int d = 0;
    std::vector<int> images;        // (1..d)·w, signed
    int length = 0;
    int zero_count = 0;
    std::vector<int> reduced_word;  // generator indices, s_0 = 0
};

// right action of a simple reflection on a tuple
Tuple act_tuple(const Tuple& t, int g);
std::vector<int> act_signed(const std::vector<int>& t, int g);

struct WeylBOptions {
    int cap = 5;
};

// all of W_{B_d} in BFS order from the identity
std::vector<SignedPerm> weyl_b(int d, WeylBOptions opts = {});
// every reduced word of w (exhaustive; meant for small d)
std::vector<std::vector<int>> all_reduced_words(const SignedPerm& w);

struct Perm {
    std::vector<int> images;  // 0-based; (j·w)_a = j_{images[a]}
    int length = 0;           // inversions
};

std::vector<Perm> sym_group(int n, int cap = 6);
int inversions(const std::vector<int>& seq);
Tuple permute_tuple(const Tuple& t, const Perm& w);

struct Bipartition {
    std::vector<int> plus;
    std::vector<int> minus;
    int size() const;
    std::string str() const;
    auto operator<=>(const Bipartition&) const = default;
};

std::vector<std::vector<int>> partitions(int d, int max_parts);
std::vector<Bipartition> bipartitions(HalfInt n, int d);
bool fits(const Bipartition& lam, HalfInt n);
mpz_class weyl_dim(const std::vector<int>& lam, int k);
mpz_class irrep_dim(const Bipartition& lam, HalfInt n);

enum class Sign { Plus, Minus };
std::string sign_str(Sign s);

// strictly increasing d-tuples over the underline of m
std::vector<Tuple> admissible_increasing(int d, HalfInt m);
// strictly increasing n^±-tuples with entries >= 0 (Plus) or > 0 (Minus), <= m
std::vector<Tuple> admissible_i(Sign s, HalfInt n, HalfInt m);

// size of the ı-tuples for a sign: n^+ or n^-
int sign_size(Sign s, HalfInt n);

// all tuples in underline(n)^d in lexicographic order
std::vector<Tuple> all_tuples(HalfInt n, int d);

}  // namespace iqinv
