#pragma once

// Reidemeister-Schreier rewriting for subgroups given as kernels of maps
// onto finite permutation groups, plus the single-occurrence Tietze
// elimination that mirrors a by-hand elimination order.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rcs/braid.hpp"

namespace rcs {

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    int generator_index(const std::string& name) const;  // 1-based
    Word parse_word(const std::string& text) const;
    std::string word_to_string(const Word& w) const;
};

// permutation on {0..degree-1}; composition acts left to right (p then q)
struct Perm {
    std::vector<int> map;

    static Perm identity(int degree);
    static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);  // 1-based
    int degree() const { return static_cast<int>(map.size()); }
    Perm inverse() const;
    friend Perm operator*(const Perm& p, const Perm& q);  // apply p first, then q
    friend bool operator==(const Perm& p, const Perm& q) { return p.map == q.map; }
    friend bool operator<(const Perm& p, const Perm& q) { return p.map < q.map; }
    bool is_identity() const;
};

struct FiniteQuotient {
    int degree = 0;
    std::vector<Perm> images;  // one per presentation generator

    Perm image_of(const Word& w) const;
};

struct Transversal {
    std::vector<Word> reps;        // reps[coset id]; id 0 = identity coset
    std::vector<Perm> elements;    // elements[coset id]
    std::map<std::vector<int>, int> index;  // perm.map -> coset id

    int coset_of(const Perm& p) const;
    int size() const { return static_cast<int>(reps.size()); }
};

// Breadth-first (shortlex) Schreier transversal; a user-supplied list of
// representative words is accepted after validating the Schreier property
// (prefix closed, all cosets hit exactly once). Throws when the images do
// not generate the target group.
Transversal schreier_transversal(const Presentation& p, const FiniteQuotient& q,
                                 const std::optional<std::vector<Word>>& user = std::nullopt);

// Presentation of the kernel subgroup, with the ambient expansion of each
// Schreier generator s_{r,x} = r x (rx-bar)^-1 kept alongside.
struct SubgroupPresentation {
    std::vector<std::string> generators;
    std::vector<Word> definitions;  // ambient words, aligned with generators
    std::vector<Word> relators;     // words over the subgroup generators
    bool simplification_complete = true;

    std::string word_to_string(const Word& w) const;
};

// The rewriting map tau: word (which must map to the identity permutation)
// -> word over the Schreier generators, trivial generators dropped.
// Returned letters index into the generator table built for (p, q, t).
struct SchreierRewriter {
    const Presentation* ambient = nullptr;
    const FiniteQuotient* quotient = nullptr;
    const Transversal* transversal = nullptr;
    std::vector<std::string> gen_names;           // nontrivial s_{r,x} names
    std::vector<Word> gen_definitions;            // ambient expansions
    std::map<std::pair<int, int>, int> gen_table; // (coset, ambient gen) -> 1-based index, 0 = trivial

    Word rewrite(const Word& ambient_word) const;
};

SchreierRewriter make_rewriter(const Presentation& p, const FiniteQuotient& q,
                               const Transversal& t);

// Schreier generators plus the rewritten conjugates t r t^-1 of every
// relator r by every transversal element t.
SubgroupPresentation subgroup_presentation(const Presentation& p, const FiniteQuotient& q,
                                           const Transversal& t);

// Repeatedly eliminates a generator that occurs exactly once in some
// relator (shortest relator first, lexicographic ties; within a relator the
// highest-numbered single-occurrence generator goes), substituting
// everywhere and freely reducing. Definitions of survivors are preserved.
SubgroupPresentation tietze_simplify(const SubgroupPresentation& p, int budget = 1 << 20);

}  // namespace rcs
