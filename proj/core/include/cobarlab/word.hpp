#pragma once

#include "cobarlab/koszul.hpp"
#include "cobarlab/scalar.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cobarlab {

/// Ordered table of generator names with degrees. Words over a table are the
/// basis elements of a free tensor algebra; a plain graded space is the
/// special case where only length-1 words are used.
class LetterTable {
public:
    int add(const std::string& name, int degree);
    int id_of(const std::string& name) const;  // -1 when absent
    const std::string& name(int id) const { return names_[id]; }
    int degree(int id) const { return degrees_[id]; }
    int size() const { return static_cast<int>(names_.size()); }

private:
    std::vector<std::string> names_;
    std::vector<int> degrees_;
    std::map<std::string, int> ids_;
};

/// A basis word: a list of letters. The empty word is the algebra unit.
using Word = std::vector<int32_t>;

int word_degree(const Word& w, const LetterTable& t);
std::vector<int> letter_degrees(const Word& w, const LetterTable& t);
std::string word_str(const Word& w, const LetterTable& t, const char* sep = "|");

/// Canonical word order: by length, then lexicographically on letter names.
struct WordOrder {
    const LetterTable* table;
    bool operator()(const Word& a, const Word& b) const;
};

/// Sparse linear combination of words, kept sorted in the canonical order.
class WordSum {
public:
    WordSum() = default;
    WordSum(Field f, const LetterTable* t) : field_(f), terms_(WordOrder{t}) {}

    Field field() const { return field_; }
    const LetterTable* table() const { return terms_.key_comp().table; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::map<Word, Scalar, WordOrder>& terms() const& { return terms_; }
    void terms() && = delete;  // guards against iterating a temporary's guts
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    void add(const Word& w, const Scalar& c);
    void add_sum(const WordSum& o, const Scalar& c);
    void scale(const Scalar& c);
    Scalar coeff(const Word& w) const;
    bool operator==(const WordSum& o) const { return terms_ == o.terms_; }

    static WordSum unit(Field f, const LetterTable* t) {
        WordSum s(f, t);
        s.add({}, Scalar::one(f));
        return s;
    }
    static WordSum single(Field f, const LetterTable* t, const Word& w) {
        WordSum s(f, t);
        s.add(w, Scalar::one(f));
        return s;
    }

private:
    Field field_ = Field::Q;
    std::map<Word, Scalar, WordOrder> terms_;
};

/// Sparse element of the r-fold tensor power of the free algebra: terms are
/// r-tuples of words.
class WordTensor {
public:
    WordTensor() = default;
    WordTensor(Field f, const LetterTable* t, int arity)
        : field_(f), table_(t), arity_(arity) {}

    Field field() const { return field_; }
    const LetterTable* table() const { return table_; }
    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::map<std::vector<Word>, Scalar>& terms() const& { return terms_; }
    void terms() && = delete;
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    void add(const std::vector<Word>& slots, const Scalar& c);
    void add_tensor(const WordTensor& o, const Scalar& c);
    bool operator==(const WordTensor& o) const { return terms_ == o.terms_; }

private:
    Field field_ = Field::Q;
    const LetterTable* table_ = nullptr;
    int arity_ = 1;
    std::map<std::vector<Word>, Scalar> terms_;
};

// -- Koszul-signed word calculus -------------------------------------------

/// Product of two word sums (concatenation; no signs, the grading is on
/// basis words themselves).
WordSum concat(const WordSum& a, const WordSum& b);

/// Product in the tensor-square algebra:
/// (x ⊗ y)(x' ⊗ y') = (−1)^{|y||x'|} xx' ⊗ yy'.
WordTensor tensor_algebra_mul(const WordTensor& a, const WordTensor& b, const LetterTable& t);

/// n-fold unshuffle of one word: sum over ordered partitions of its letter
/// set into n (possibly empty) blocks, with the Koszul sign of the sorting
/// permutation. n = 2 is the coproduct of the tensor Hopf algebra on
/// primitive letters, extended multiplicatively.
WordTensor unshuffle(const Word& w, int n, Field f, const LetterTable& t);

/// Tensor product of independently given word sums (slotwise, no sign: the
/// factors are elements, not operators).
WordTensor outer(const std::vector<WordSum>& factors, const LetterTable& t);

}  // namespace cobarlab
