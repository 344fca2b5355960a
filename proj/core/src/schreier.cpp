#include "rcs/schreier.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace rcs {

int Presentation::generator_index(const std::string& name) const {
    for (size_t k = 0; k < generators.size(); ++k)
        if (generators[k] == name) return static_cast<int>(k) + 1;
    throw std::invalid_argument("Presentation: unknown generator '" + name + "'");
}

Word Presentation::parse_word(const std::string& text) const {
    Word w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        int e = 1;
        size_t caret = tok.find('^');
        std::string name = tok.substr(0, caret);
        if (caret != std::string::npos) e = std::stoi(tok.substr(caret + 1));
        int idx = generator_index(name);
        int mag = e < 0 ? -e : e;
        for (int k = 0; k < mag; ++k) w.emplace_back(idx, e < 0 ? -1 : 1);
    }
    return w;
}

std::string Presentation::word_to_string(const Word& w) const {
    std::ostringstream os;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) os << ' ';
        os << generators[w[k].first - 1];
        if (w[k].second < 0) os << "^-1";
    }
    return os.str();
}

Perm Perm::identity(int degree) {
    Perm p;
    p.map.resize(degree);
    for (int k = 0; k < degree; ++k) p.map[k] = k;
    return p;
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    Perm p = identity(degree);
    for (const auto& cyc : cycles) {
        for (size_t k = 0; k < cyc.size(); ++k) {
            int from = cyc[k] - 1;
            int to = cyc[(k + 1) % cyc.size()] - 1;
            if (from < 0 || from >= degree || to < 0 || to >= degree)
                throw std::invalid_argument("Perm::from_cycles: point out of range");
            p.map[from] = to;
        }
    }
    return p;
}

Perm Perm::inverse() const {
    Perm p;
    p.map.resize(map.size());
    for (size_t k = 0; k < map.size(); ++k) p.map[map[k]] = static_cast<int>(k);
    return p;
}

Perm operator*(const Perm& p, const Perm& q) {
    Perm out;
    out.map.resize(p.map.size());
    for (size_t k = 0; k < p.map.size(); ++k) out.map[k] = q.map[p.map[k]];
    return out;
}

bool Perm::is_identity() const {
    for (size_t k = 0; k < map.size(); ++k)
        if (map[k] != static_cast<int>(k)) return false;
    return true;
}

Perm FiniteQuotient::image_of(const Word& w) const {
    Perm acc = Perm::identity(degree);
    for (const Letter& l : w) {
        const Perm& g = images[l.first - 1];
        acc = acc * (l.second > 0 ? g : g.inverse());
    }
    return acc;
}

int Transversal::coset_of(const Perm& p) const {
    auto it = index.find(p.map);
    if (it == index.end()) throw std::logic_error("Transversal: permutation outside the group");
    return it->second;
}

namespace {

// closure of the generator images: the full target group, discovery order
std::vector<Perm> group_closure(const FiniteQuotient& q) {
    std::vector<Perm> elems{Perm::identity(q.degree)};
    std::map<std::vector<int>, int> seen{{elems[0].map, 0}};
    for (size_t head = 0; head < elems.size(); ++head) {
        for (const Perm& g : q.images) {
            Perm next = elems[head] * g;
            if (seen.emplace(next.map, elems.size()).second) elems.push_back(next);
        }
    }
    return elems;
}

}  // namespace

Transversal schreier_transversal(const Presentation& p, const FiniteQuotient& q,
                                 const std::optional<std::vector<Word>>& user) {
    if (q.images.size() != p.generators.size())
        throw std::invalid_argument("schreier_transversal: one image per generator required");
    for (const Word& r : p.relators)
        if (!q.image_of(r).is_identity())
            throw std::invalid_argument("schreier_transversal: images do not satisfy a relator");

    std::vector<Perm> all = group_closure(q);
    Transversal t;

    if (user) {
        if (user->size() != all.size())
            throw std::invalid_argument("schreier_transversal: transversal size != group order");
        std::map<std::vector<int>, int> idx;
        std::vector<Word> reduced;
        for (const Word& w : *user) reduced.push_back(free_reduce(w));
        for (size_t k = 0; k < reduced.size(); ++k) {
            Perm e = q.image_of(reduced[k]);
            if (!idx.emplace(e.map, k).second)
                throw std::invalid_argument("schreier_transversal: two representatives hit one coset");
        }
        // Schreier property: every proper prefix is also a representative
        for (const Word& w : reduced) {
            for (size_t len = 0; len < w.size(); ++len) {
                Word prefix(w.begin(), w.begin() + len);
                if (std::find(reduced.begin(), reduced.end(), free_reduce(prefix)) == reduced.end())
                    throw std::invalid_argument(
                        "schreier_transversal: user transversal is not prefix closed");
            }
        }
        t.reps = reduced;
        for (const Word& w : reduced) t.elements.push_back(q.image_of(w));
        for (size_t k = 0; k < t.elements.size(); ++k) t.index[t.elements[k].map] = k;
        return t;
    }

    // BFS over positive generators, shortlex representatives
    t.reps.push_back({});
    t.elements.push_back(Perm::identity(q.degree));
    t.index[t.elements[0].map] = 0;
    for (size_t head = 0; head < t.reps.size(); ++head) {
        for (size_t g = 0; g < q.images.size(); ++g) {
            Perm next = t.elements[head] * q.images[g];
            if (t.index.count(next.map)) continue;
            Word w = t.reps[head];
            w.emplace_back(static_cast<int>(g) + 1, 1);
            t.index[next.map] = static_cast<int>(t.reps.size());
            t.reps.push_back(std::move(w));
            t.elements.push_back(std::move(next));
        }
    }
    if (t.reps.size() != all.size())
        throw std::invalid_argument("schreier_transversal: images do not generate the target");
    return t;
}

std::string SubgroupPresentation::word_to_string(const Word& w) const {
    std::ostringstream os;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) os << ' ';
        os << generators[w[k].first - 1];
        if (w[k].second < 0) os << "^-1";
    }
    return os.str();
}

SchreierRewriter make_rewriter(const Presentation& p, const FiniteQuotient& q,
                               const Transversal& t) {
    SchreierRewriter rw;
    rw.ambient = &p;
    rw.quotient = &q;
    rw.transversal = &t;
    for (int coset = 0; coset < t.size(); ++coset) {
        for (size_t g = 0; g < p.generators.size(); ++g) {
            Perm target = t.elements[coset] * q.images[g];
            int next = t.coset_of(target);
            // s_{r,x} = r x (rx-bar)^-1, trivial iff it freely reduces away
            Word def = t.reps[coset];
            def.emplace_back(static_cast<int>(g) + 1, 1);
            def = concat_words(def, inverse_word(t.reps[next]));
            if (def.empty()) {
                rw.gen_table[{coset, static_cast<int>(g) + 1}] = 0;
            } else {
                rw.gen_names.push_back("s[" + (coset == 0 ? std::string("1") : p.word_to_string(t.reps[coset])) +
                                       "," + p.generators[g] + "]");
                rw.gen_definitions.push_back(def);
                rw.gen_table[{coset, static_cast<int>(g) + 1}] =
                    static_cast<int>(rw.gen_names.size());
            }
        }
    }
    return rw;
}

Word SchreierRewriter::rewrite(const Word& ambient_word) const {
    if (!quotient->image_of(ambient_word).is_identity())
        throw std::invalid_argument("rewrite: word is not in the subgroup");
    Word out;
    int coset = 0;
    for (const Letter& l : ambient_word) {
        const Perm& g = quotient->images[l.first - 1];
        if (l.second > 0) {
            int s = gen_table.at({coset, l.first});
            if (s != 0) out.emplace_back(s, 1);
            coset = transversal->coset_of(transversal->elements[coset] * g);
        } else {
            int prev = transversal->coset_of(transversal->elements[coset] * g.inverse());
            int s = gen_table.at({prev, l.first});
            if (s != 0) out.emplace_back(s, -1);
            coset = prev;
        }
    }
    return free_reduce(std::move(out));
}

SubgroupPresentation subgroup_presentation(const Presentation& p, const FiniteQuotient& q,
                                           const Transversal& t) {
    SchreierRewriter rw = make_rewriter(p, q, t);
    SubgroupPresentation out;
    out.generators = rw.gen_names;
    out.definitions = rw.gen_definitions;
    for (int coset = 0; coset < t.size(); ++coset) {
        for (const Word& r : p.relators) {
            Word conj = concat_words(concat_words(t.reps[coset], r), inverse_word(t.reps[coset]));
            Word rewritten = rw.rewrite(conj);
            if (!rewritten.empty()) out.relators.push_back(std::move(rewritten));
        }
    }
    return out;
}

namespace {

// substitute gen -> replacement inside w (negative letters get the inverse)
Word substitute(const Word& w, int gen, const Word& replacement) {
    Word out;
    for (const Letter& l : w) {
        if (l.first != gen) {
            out.push_back(l);
        } else if (l.second > 0) {
            out.insert(out.end(), replacement.begin(), replacement.end());
        } else {
            Word inv = inverse_word(replacement);
            out.insert(out.end(), inv.begin(), inv.end());
        }
    }
    return free_reduce(std::move(out));
}

}  // namespace

SubgroupPresentation tietze_simplify(const SubgroupPresentation& input, int budget) {
    SubgroupPresentation cur = input;
    for (Word& r : cur.relators) r = free_reduce(r);
    cur.relators.erase(std::remove_if(cur.relators.begin(), cur.relators.end(),
                                      [](const Word& w) { return w.empty(); }),
                       cur.relators.end());
    cur.simplification_complete = true;

    int used = 0;
    while (true) {
        // deterministic relator order: shortest first, lexicographic ties
        std::vector<size_t> order(cur.relators.size());
        for (size_t k = 0; k < order.size(); ++k) order[k] = k;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            if (cur.relators[a].size() != cur.relators[b].size())
                return cur.relators[a].size() < cur.relators[b].size();
            return cur.relators[a] < cur.relators[b];
        });

        int pick_rel = -1, pick_gen = 0;
        for (size_t k : order) {
            std::map<int, int> occ;
            for (const Letter& l : cur.relators[k]) occ[l.first]++;
            int best = 0;
            for (const auto& [g, c] : occ)
                if (c == 1 && g > best) best = g;  // highest-numbered single occurrence
            if (best != 0) {
                pick_rel = static_cast<int>(k);
                pick_gen = best;
                break;
            }
        }
        if (pick_rel < 0) break;
        if (used >= budget) {
            cur.simplification_complete = false;
            break;
        }
        ++used;

        // relator = u g^e v = 1  =>  g = (v u)^-1 for e = +1, g = v u for e = -1
        const Word& r = cur.relators[pick_rel];
        size_t at = 0;
        while (r[at].first != pick_gen) ++at;
        Word u(r.begin(), r.begin() + at);
        Word v(r.begin() + at + 1, r.end());
        Word vu = concat_words(v, u);
        Word replacement = r[at].second > 0 ? inverse_word(vu) : vu;

        std::vector<Word> next_relators;
        for (size_t k = 0; k < cur.relators.size(); ++k) {
            if (static_cast<int>(k) == pick_rel) continue;
            Word s = substitute(cur.relators[k], pick_gen, replacement);
            if (!s.empty()) next_relators.push_back(std::move(s));
        }

        // drop the generator, renumber everything above it
        std::vector<std::string> next_gen_names;
        std::vector<Word> next_defs;
        for (size_t k = 0; k < cur.generators.size(); ++k) {
            if (static_cast<int>(k) + 1 == pick_gen) continue;
            next_gen_names.push_back(cur.generators[k]);
            next_defs.push_back(cur.definitions[k]);
        }
        auto renumber = [&](Word& w) {
            for (Letter& l : w)
                if (l.first > pick_gen) --l.first;
        };
        for (Word& w : next_relators) renumber(w);
        cur.generators = std::move(next_gen_names);
        cur.definitions = std::move(next_defs);
        cur.relators = std::move(next_relators);
    }
    return cur;
}

}  // namespace rcs
