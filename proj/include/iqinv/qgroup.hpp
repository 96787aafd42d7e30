#pragma once

#include "iqinv/combinat.hpp"
#include "iqinv/exactla.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace iqinv {

// Basis {v_i : i in underline(n)^d}, indexed lexicographically.
struct TensorSpace {
    IndexScheme scheme;
    int d = 0;
    std::size_t size = 1;

    TensorSpace(HalfInt n, int d);
    Key index(const Tuple& t) const;
    Tuple tuple(Key k) const;
};

struct TensorOperator {
    HalfInt n;
    int d = 0;
    LinearMap map;  // column j = image of v_j

    Scalar entry(const Tuple& i, const Tuple& j) const;
    TensorOperator then(const TensorOperator& o) const;  // o∘this
    friend bool operator==(const TensorOperator& a, const TensorOperator& b) {
        return a.n == b.n && a.d == b.d && a.map == b.map;
    }
};

TensorOperator operator*(const TensorOperator& a, const TensorOperator& b);  // a∘b
TensorOperator operator+(const TensorOperator& a, const TensorOperator& b);
TensorOperator operator-(const TensorOperator& a, const TensorOperator& b);
TensorOperator operator*(const Scalar& c, const TensorOperator& a);
TensorOperator identity_operator(HalfInt n, int d);

enum class UKind { E, F, Dpos, Dneg };

struct UNGenerator {
    UKind kind;
    HalfInt index;
    std::string str() const;
    auto operator<=>(const UNGenerator&) const = default;
};

using UWord = std::vector<UNGenerator>;
std::string word_str(const UWord& w);

bool legal(const UNGenerator& g, const IndexScheme& s);
// E_i, F_i over the i-set, then D_a^{±1}
std::vector<UNGenerator> un_generators(HalfInt n);
UWord k_word(HalfInt i, bool inverse);  // K_i or K_i^{-1} as a D-word

TensorOperator fundamental_action(const UNGenerator& g, HalfInt n);
TensorOperator generator_action(const UNGenerator& g, HalfInt n, int d);  // cached
TensorOperator tensor_action_UN(const UWord& w, HalfInt n, int d);
Scalar matrix_coeff(const UWord& w, HalfInt n, const Tuple& i, const Tuple& j);
Scalar counit(const UWord& w);

enum class IKind { e, f, d, t };

struct IGenerator {
    IKind kind;
    HalfInt index;
    std::string str() const;
    auto operator<=>(const IGenerator&) const = default;
};

using IWord = std::vector<IGenerator>;

bool legal(const IGenerator& g, const IndexScheme& s);
std::vector<IGenerator> i_generators(HalfInt n);
// the generator as a combination of U_N words
std::vector<std::pair<Scalar, UWord>> expand(const IGenerator& g, HalfInt n);
TensorOperator tensor_action_iU(const IGenerator& g, HalfInt n, int d);  // cached
TensorOperator tensor_action_iword(const IWord& w, HalfInt n, int d);

// Left action of U_N on A given by word matrices, right action on B likewise
// (right matrix of y sends basis b to b·y). Returns the action of g on A⊗B
// with keys a*dim(B)+b, following x(a⊗b) = x_(1)a ⊗ b S(x_(2)).
using WordAction = std::function<LinearMap(const UWord&)>;
LinearMap mixed_tensor_action(const UNGenerator& g, const WordAction& left, const WordAction& right);

}  // namespace iqinv
