#include "iqinv/combinat.hpp"

#include "iqinv/errors.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

namespace iqinv {

namespace {

int parse_int(std::string_view s, std::string_view whole) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty())
        throw DomainError("half-integer must be written k/2 or k, got '" + std::string(whole) + "'");
    return v;
}

}  // namespace

HalfInt HalfInt::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return from_int(parse_int(text, text));
    if (text.substr(slash + 1) != "2")
        throw DomainError("half-integer must be written k/2 or k, got '" + std::string(text) + "'");
    return from_doubled(parse_int(text.substr(0, slash), text));
}

std::string HalfInt::str() const {
    if (is_integer()) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

std::string tuple_str(const Tuple& t) {
    std::string s = "(";
    for (std::size_t a = 0; a < t.size(); ++a) {
        if (a) s += ",";
        s += t[a].str();
    }
    return s + ")";
}

bool IndexScheme::contains(HalfInt a) const {
    return std::abs(a.doubled) <= n.doubled && (a.doubled - n.doubled) % 2 == 0;
}

int IndexScheme::position(HalfInt a) const {
    if (!contains(a)) throw DomainError("index " + a.str() + " not in scheme n=" + n.str());
    return (a.doubled + n.doubled) / 2;
}

IndexScheme index_scheme(HalfInt n) {
    if (n.doubled < 0) throw DomainError("index_scheme: negative n");
    IndexScheme s;
    s.n = n;
    s.N = n.doubled + 1;
    int x2 = n.doubled + 1;  // 2(n + 1/2)
    s.n_plus = (x2 + 1) / 2;
    s.n_minus = x2 / 2;
    for (int v = -n.doubled; v <= n.doubled; v += 2) s.underline.push_back(HalfInt::from_doubled(v));
    for (int v = -n.doubled + 1; v < n.doubled; v += 2) {
        s.i_set.push_back(HalfInt::from_doubled(v));
        if (v > 0) s.i_pos.push_back(HalfInt::from_doubled(v));
    }
    return s;
}

Tuple act_tuple(const Tuple& t, int g) {
    int d = static_cast<int>(t.size());
    if (g < 0 || g >= std::max(d, 1) || d == 0) throw DomainError("act_tuple: generator out of range");
    Tuple r(t);
    if (g == 0)
        r[0] = -r[0];
    else
        std::swap(r[g - 1], r[g]);
    return r;
}

std::vector<int> act_signed(const std::vector<int>& t, int g) {
    int d = static_cast<int>(t.size());
    if (g < 0 || g >= d) throw DomainError("act_signed: generator out of range");
    std::vector<int> r(t);
    if (g == 0)
        r[0] = -r[0];
    else
        std::swap(r[g - 1], r[g]);
    return r;
}

std::vector<SignedPerm> weyl_b(int d, WeylBOptions opts) {
    if (d < 0 || d > opts.cap) throw CapExceeded("weyl_b: d=" + std::to_string(d) + " exceeds cap");
    std::vector<SignedPerm> out;
    std::map<std::vector<int>, std::size_t> seen;
    SignedPerm e;
    e.d = d;
    e.images.resize(d);
    std::iota(e.images.begin(), e.images.end(), 1);
    seen.emplace(e.images, 0);
    out.push_back(e);
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (int g = 0; g < d; ++g) {
            auto img = act_signed(out[head].images, g);
            if (seen.count(img)) continue;
            SignedPerm w;
            w.d = d;
            w.images = img;
            w.reduced_word = out[head].reduced_word;
            w.reduced_word.push_back(g);
            w.length = out[head].length + 1;
            w.zero_count = out[head].zero_count + (g == 0 ? 1 : 0);
            seen.emplace(std::move(img), out.size());
            out.push_back(std::move(w));
        }
    }
    return out;
}

std::vector<std::vector<int>> all_reduced_words(const SignedPerm& w) {
    auto group = weyl_b(w.d, {.cap = std::max(5, w.d)});
    std::map<std::vector<int>, int> len;
    for (const auto& x : group) len[x.images] = x.length;
    // words[img] for every element, built layer by layer
    std::map<std::vector<int>, std::vector<std::vector<int>>> words;
    words[group.front().images] = {{}};
    for (const auto& x : group) {
        if (x.length == 0) continue;
        auto& mine = words[x.images];
        for (int g = 0; g < x.d; ++g) {
            auto u = act_signed(x.images, g);
            if (len[u] != x.length - 1) continue;
            for (auto word : words[u]) {
                word.push_back(g);
                mine.push_back(std::move(word));
            }
        }
        if (x.images == w.images) return mine;
    }
    return words[w.images];
}

int inversions(const std::vector<int>& seq) {
    int c = 0;
    for (std::size_t a = 0; a < seq.size(); ++a)
        for (std::size_t b = a + 1; b < seq.size(); ++b)
            if (seq[a] > seq[b]) ++c;
    return c;
}

std::vector<Perm> sym_group(int n, int cap) {
    if (n < 0 || n > cap) throw CapExceeded("sym_group: N=" + std::to_string(n) + " exceeds cap");
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> out;
    do {
        out.push_back(Perm{p, inversions(p)});
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Tuple permute_tuple(const Tuple& t, const Perm& w) {
    Tuple r(t.size());
    for (std::size_t a = 0; a < t.size(); ++a) r[a] = t[w.images[a]];
    return r;
}

int Bipartition::size() const {
    return std::accumulate(plus.begin(), plus.end(), 0) + std::accumulate(minus.begin(), minus.end(), 0);
}

std::string Bipartition::str() const {
    auto side = [](const std::vector<int>& p) {
        std::string s = "(";
        for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + std::to_string(p[k]);
        return s + ")";
    };
    return "(" + side(plus) + "," + side(minus) + ")";
}

namespace {

void partitions_rec(int d, int max_parts, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (d == 0) {
        out.push_back(cur);
        return;
    }
    if (max_parts == 0) return;
    for (int first = std::min(d, max_part); first >= 1; --first) {
        cur.push_back(first);
        partitions_rec(d - first, max_parts - 1, first, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> partitions(int d, int max_parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(d, max_parts, d, cur, out);
    return out;
}

std::vector<Bipartition> bipartitions(HalfInt n, int d) {
    auto s = index_scheme(n);
    std::vector<Bipartition> out;
    for (int l = d; l >= 0; --l)
        for (const auto& lp : partitions(l, s.n_plus))
            for (const auto& lm : partitions(d - l, s.n_minus)) out.push_back({lp, lm});
    return out;
}

bool fits(const Bipartition& lam, HalfInt n) {
    auto s = index_scheme(n);
    return static_cast<int>(lam.plus.size()) <= s.n_plus && static_cast<int>(lam.minus.size()) <= s.n_minus;
}

mpz_class weyl_dim(const std::vector<int>& lam, int k) {
    if (static_cast<int>(lam.size()) > k) throw DomainError("weyl_dim: too many parts");
    std::vector<int> l(lam);
    l.resize(k, 0);
    mpz_class num = 1, den = 1;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            num *= l[i] - l[j] + j - i;
            den *= j - i;
        }
    return num / den;
}

mpz_class irrep_dim(const Bipartition& lam, HalfInt n) {
    if (!fits(lam, n)) throw DomainError("irrep_dim: " + lam.str() + " does not fit n=" + n.str());
    auto s = index_scheme(n);
    return weyl_dim(lam.plus, s.n_plus) * weyl_dim(lam.minus, s.n_minus);
}

std::string sign_str(Sign s) { return s == Sign::Plus ? "+" : "-"; }

int sign_size(Sign s, HalfInt n) {
    auto sc = index_scheme(n);
    return s == Sign::Plus ? sc.n_plus : sc.n_minus;
}

namespace {

void increasing_rec(const std::vector<HalfInt>& pool, std::size_t from, int left, Tuple& cur, std::vector<Tuple>& out) {
    if (left == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t k = from; k < pool.size(); ++k) {
        cur.push_back(pool[k]);
        increasing_rec(pool, k + 1, left - 1, cur, out);
        cur.pop_back();
    }
}

std::vector<Tuple> increasing(const std::vector<HalfInt>& pool, int d) {
    std::vector<Tuple> out;
    Tuple cur;
    if (d >= 0) increasing_rec(pool, 0, d, cur, out);
    return out;
}

}  // namespace

std::vector<Tuple> admissible_increasing(int d, HalfInt m) { return increasing(index_scheme(m).underline, d); }

std::vector<Tuple> admissible_i(Sign s, HalfInt n, HalfInt m) {
    std::vector<HalfInt> pool;
    for (HalfInt a : index_scheme(m).underline)
        if (s == Sign::Plus ? a.doubled >= 0 : a.doubled > 0) pool.push_back(a);
    return increasing(pool, sign_size(s, n));
}

std::vector<Tuple> all_tuples(HalfInt n, int d) {
    auto s = index_scheme(n);
    std::vector<Tuple> out;
    Tuple cur(d);
    std::size_t total = 1;
    for (int a = 0; a < d; ++a) total *= s.underline.size();
    out.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (int a = d - 1; a >= 0; --a) {
            cur[a] = s.underline[c % s.underline.size()];
            c /= s.underline.size();
        }
        out.push_back(cur);
    }
    return out;
}

}  // namespace iqinv
