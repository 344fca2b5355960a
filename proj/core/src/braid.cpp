#include "rcs/braid.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rcs {

Word free_reduce(Word w) {
    Word out;
    out.reserve(w.size());
    for (const Letter& l : w) {
        if (l.second == 0) continue;
        if (!out.empty() && out.back().first == l.first && out.back().second == -l.second)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word inverse_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.emplace_back(it->first, -it->second);
    return out;
}

Word concat_words(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return free_reduce(std::move(out));
}

BraidWord::BraidWord(int strands, Word w) : n(strands), letters(std::move(w)) {
    if (n < 2) throw std::invalid_argument("BraidWord: need at least 2 strands");
    for (const Letter& l : letters)
        if (l.first < 1 || l.first > n - 1 || (l.second != 1 && l.second != -1))
            throw std::invalid_argument("BraidWord: letter out of range");
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
    if (a.n != b.n) throw std::invalid_argument("BraidWord: strand count mismatch");
    Word w = a.letters;
    w.insert(w.end(), b.letters.begin(), b.letters.end());
    return BraidWord(a.n, free_reduce(std::move(w)));
}

std::string to_string(const BraidWord& w) {
    std::ostringstream os;
    for (size_t k = 0; k < w.letters.size(); ++k) {
        if (k) os << ' ';
        os << 'x' << w.letters[k].first;
        if (w.letters[k].second < 0) os << "^-1";
    }
    return os.str();
}

BraidWord parse_braid(int n, const std::string& text) {
    Word w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok.size() < 2 || tok[0] != 'x')
            throw std::invalid_argument("parse_braid: bad token '" + tok + "'");
        size_t caret = tok.find('^');
        int idx = std::stoi(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
        int e = 1;
        if (caret != std::string::npos) {
            e = std::stoi(tok.substr(caret + 1));
            if (e != 1 && e != -1) {
                int mag = e < 0 ? -e : e;
                for (int k = 0; k < mag; ++k) w.emplace_back(idx, e < 0 ? -1 : 1);
                continue;
            }
        }
        w.emplace_back(idx, e);
    }
    return BraidWord(n, std::move(w));
}

FreeAutomorphism FreeAutomorphism::identity(int rank) {
    FreeAutomorphism a;
    a.rank = rank;
    a.images.resize(rank);
    for (int k = 0; k < rank; ++k) a.images[k] = {{k + 1, 1}};
    return a;
}

Word apply_automorphism(const FreeAutomorphism& a, const Word& w) {
    Word out;
    for (const Letter& l : w) {
        const Word& img = a.images[l.first - 1];
        if (l.second > 0)
            out.insert(out.end(), img.begin(), img.end());
        else {
            Word inv = inverse_word(img);
            out.insert(out.end(), inv.begin(), inv.end());
        }
    }
    return free_reduce(std::move(out));
}

FreeAutomorphism compose(const FreeAutomorphism& a, const FreeAutomorphism& b) {
    FreeAutomorphism out;
    out.rank = a.rank;
    out.images.resize(a.rank);
    for (int k = 0; k < a.rank; ++k) out.images[k] = apply_automorphism(a, b.images[k]);
    return out;
}

namespace {

FreeAutomorphism artin_generator(int n, int i, int sign) {
    FreeAutomorphism a = FreeAutomorphism::identity(n);
    if (sign > 0) {
        a.images[i - 1] = {{i, 1}, {i + 1, 1}, {i, -1}};
        a.images[i] = {{i, 1}};
    } else {
        a.images[i - 1] = {{i + 1, 1}};
        a.images[i] = {{i + 1, -1}, {i, 1}, {i + 1, 1}};
    }
    return a;
}

}  // namespace

FreeAutomorphism artin_act(const BraidWord& w) {
    FreeAutomorphism acc = FreeAutomorphism::identity(w.n);
    for (const Letter& l : w.letters)
        acc = compose(acc, artin_generator(w.n, l.first, l.second));
    return acc;
}

bool braid_equal(const BraidWord& a, const BraidWord& b) {
    if (a.n != b.n) throw std::invalid_argument("braid_equal: strand count mismatch");
    return artin_act(a) == artin_act(b);
}

std::vector<int> permutation(const BraidWord& w) {
    std::vector<int> pos(w.n);
    std::iota(pos.begin(), pos.end(), 0);  // pos[rank] = strand occupying that rank
    for (const Letter& l : w.letters) std::swap(pos[l.first - 1], pos[l.first]);
    std::vector<int> perm(w.n);
    for (int rank = 0; rank < w.n; ++rank) perm[pos[rank]] = rank;
    return perm;
}

BraidWord aij_word(int i, int j, int n) {
    if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("aij_word: need 1 <= i < j <= n");
    Word w;
    for (int k = j - 1; k >= i + 1; --k) w.emplace_back(k, 1);
    w.emplace_back(i, 1);
    w.emplace_back(i, 1);
    for (int k = i + 1; k <= j - 1; ++k) w.emplace_back(k, -1);
    return BraidWord(n, std::move(w));
}

BraidWord garside(int n) {
    if (n < 2) throw std::invalid_argument("garside: n must be >= 2");
    Word w;
    for (int block = 1; block <= n - 1; ++block)
        for (int k = block; k >= 1; --k) w.emplace_back(k, 1);
    return BraidWord(n, std::move(w));
}

std::vector<long> exponent_sum(const BraidWord& w) {
    std::vector<long> out(w.n - 1, 0);
    for (const Letter& l : w.letters) out[l.first - 1] += l.second;
    return out;
}

}  // namespace rcs
