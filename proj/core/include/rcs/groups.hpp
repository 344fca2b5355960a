#pragma once

// Equality deciders for the auxiliary groups: free groups (free
// reduction), braid groups (Artin action), and semidirect products of two
// free groups given by rewriting rules that migrate the acting letters to
// the right (normal form u(normal) * w(acting)).

#include <map>
#include <string>
#include <vector>

#include "rcs/braid.hpp"

namespace rcs {

struct GroupSpec {
    enum class Kind { FreeGroup, BraidGroup, SemidirectFreeByFree };
    Kind kind = Kind::FreeGroup;
    std::vector<std::string> generators;  // names; braid groups use x1..x_{n-1}
    int braid_strands = 0;

    // semidirect data: generators[0..normal_count) are the normal free part,
    // the rest act; sigma[g] maps each normal index to its image word under
    // conjugation by acting generator g (words over normal indices).
    int normal_count = 0;
    std::map<int, std::vector<Word>> sigma;      // acting gen -> images
    std::map<int, std::vector<Word>> sigma_inv;  // its inverse automorphism

    static GroupSpec free_group(std::vector<std::string> gens);
    static GroupSpec braid_group(int n);
    static GroupSpec semidirect(std::vector<std::string> normal_gens,
                                std::vector<std::string> acting_gens,
                                std::map<int, std::vector<Word>> sigma,
                                std::map<int, std::vector<Word>> sigma_inv);

    // named presets: "F2", "B3", "RB3"
    static GroupSpec preset(const std::string& name);

    int generator_index(const std::string& name) const;  // 1-based
    Word parse_word(const std::string& text) const;
    std::string word_to_string(const Word& w) const;
};

// normal form of a word in a semidirect-product spec: (normal part, acting part)
std::pair<Word, Word> semidirect_normal_form(const GroupSpec& g, const Word& w);

bool decide_equal(const GroupSpec& g, const Word& w1, const Word& w2);
bool decide_equal(const GroupSpec& g, const std::string& w1, const std::string& w2);

}  // namespace rcs
