#pragma once

// Braid words and the faithful Artin action on a free group, used as the
// equality oracle everywhere (x_i: y_i -> y_i y_{i+1} y_i^-1, y_{i+1} -> y_i,
// other generators fixed). Also the standard pure generators A_ij and the
// Garside word.

#include <string>
#include <vector>

#include "rcs/exact.hpp"

namespace rcs {

// a letter is (generator index, +1/-1); free words over any alphabet
using Letter = std::pair<int, int>;
using Word = std::vector<Letter>;

Word free_reduce(Word w);
Word inverse_word(const Word& w);
Word concat_words(const Word& a, const Word& b);

struct BraidWord {
    int n = 2;       // strand count
    Word letters;    // generator indices 1..n-1

    BraidWord() = default;
    BraidWord(int strands, Word w);

    BraidWord reduced() const { return BraidWord(n, free_reduce(letters)); }
    BraidWord inverse() const { return BraidWord(n, inverse_word(letters)); }
    friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
};

// Serialization: space-separated tokens "x1 x2^-1".
std::string to_string(const BraidWord& w);
BraidWord parse_braid(int n, const std::string& text);

struct FreeAutomorphism {
    int rank = 0;
    std::vector<Word> images;  // images[k] = image of y_{k+1}, freely reduced

    static FreeAutomorphism identity(int rank);
    friend bool operator==(const FreeAutomorphism& a, const FreeAutomorphism& b) {
        return a.rank == b.rank && a.images == b.images;
    }
};

// substitute a's images into w (generators of w index into a.images)
Word apply_automorphism(const FreeAutomorphism& a, const Word& w);
FreeAutomorphism compose(const FreeAutomorphism& a, const FreeAutomorphism& b);

FreeAutomorphism artin_act(const BraidWord& w);
bool braid_equal(const BraidWord& a, const BraidWord& b);

// image in the symmetric group; perm[i] = final position of strand i (0-based)
std::vector<int> permutation(const BraidWord& w);

// A_ij = (x_{j-1} ... x_{i+1}) x_i^2 (x_{i+1}^-1 ... x_{j-1}^-1), 1 <= i < j <= n
BraidWord aij_word(int i, int j, int n);

// Delta_n = x_1 (x_2 x_1) ... (x_{n-1} ... x_1)
BraidWord garside(int n);

// abelianized image: exponent sum per generator x_1..x_{n-1}
std::vector<long> exponent_sum(const BraidWord& w);

}  // namespace rcs
