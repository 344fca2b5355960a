#include "rcs/groups.hpp"

#include <sstream>
#include <stdexcept>

namespace rcs {

GroupSpec GroupSpec::free_group(std::vector<std::string> gens) {
    GroupSpec g;
    g.kind = Kind::FreeGroup;
    g.generators = std::move(gens);
    return g;
}

GroupSpec GroupSpec::braid_group(int n) {
    GroupSpec g;
    g.kind = Kind::BraidGroup;
    g.braid_strands = n;
    for (int k = 1; k <= n - 1; ++k) g.generators.push_back("x" + std::to_string(k));
    return g;
}

GroupSpec GroupSpec::semidirect(std::vector<std::string> normal_gens,
                                std::vector<std::string> acting_gens,
                                std::map<int, std::vector<Word>> sigma,
                                std::map<int, std::vector<Word>> sigma_inv) {
    GroupSpec g;
    g.kind = Kind::SemidirectFreeByFree;
    g.normal_count = static_cast<int>(normal_gens.size());
    g.generators = std::move(normal_gens);
    for (auto& a : acting_gens) g.generators.push_back(std::move(a));
    g.sigma = std::move(sigma);
    g.sigma_inv = std::move(sigma_inv);

    // construction-time confluence check on the generator critical pairs:
    // the two rules for g g^-1 x and g^-1 g x reduce to x iff the maps are
    // mutually inverse automorphisms on every normal generator
    for (const auto& [act, images] : g.sigma) {
        auto itv = g.sigma_inv.find(act);
        if (itv == g.sigma_inv.end() || images.size() != size_t(g.normal_count) ||
            itv->second.size() != size_t(g.normal_count))
            throw std::invalid_argument("semidirect: incomplete rewriting rules");
        FreeAutomorphism fwd{g.normal_count, images};
        FreeAutomorphism bwd{g.normal_count, itv->second};
        for (int k = 0; k < g.normal_count; ++k) {
            Word idw{{k + 1, 1}};
            if (apply_automorphism(fwd, bwd.images[k]) != idw ||
                apply_automorphism(bwd, fwd.images[k]) != idw)
                throw std::invalid_argument(
                    "semidirect: rewriting rules are not confluent (sigma not invertible)");
        }
    }
    return g;
}

GroupSpec GroupSpec::preset(const std::string& name) {
    if (name == "F2") return free_group({"a", "b"});
    if (name == "B3") return braid_group(3);
    if (name == "RB3") {
        // F<a,b> |x F<g>, g a g^-1 = b, g b g^-1 = a
        std::vector<Word> swap_images = {{{2, 1}}, {{1, 1}}};
        return semidirect({"a", "b"}, {"g"}, {{3, swap_images}}, {{3, swap_images}});
    }
    throw std::invalid_argument("GroupSpec::preset: unknown preset '" + name + "'");
}

int GroupSpec::generator_index(const std::string& name) const {
    for (size_t k = 0; k < generators.size(); ++k)
        if (generators[k] == name) return static_cast<int>(k) + 1;
    throw std::invalid_argument("unknown generator '" + name + "'");
}

Word GroupSpec::parse_word(const std::string& text) const {
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

std::string GroupSpec::word_to_string(const Word& w) const {
    std::ostringstream os;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) os << ' ';
        os << generators[w[k].first - 1];
        if (w[k].second < 0) os << "^-1";
    }
    return os.str();
}

std::pair<Word, Word> semidirect_normal_form(const GroupSpec& g, const Word& w) {
    if (g.kind != GroupSpec::Kind::SemidirectFreeByFree)
        throw std::invalid_argument("semidirect_normal_form: wrong group kind");
    Word normal, acting;
    for (const Letter& l : w) {
        if (l.first > g.normal_count) {
            acting.push_back(l);
            acting = free_reduce(std::move(acting));
            continue;
        }
        // migrate the normal letter left through the accumulated acting word:
        // acting * x = sigma_{acting}(x) * acting, applying per-letter maps
        // right to left
        Word img{l};
        for (auto it = acting.rbegin(); it != acting.rend(); ++it) {
            const auto& table = it->second > 0 ? g.sigma : g.sigma_inv;
            FreeAutomorphism f{g.normal_count, table.at(it->first)};
            img = apply_automorphism(f, img);
        }
        normal.insert(normal.end(), img.begin(), img.end());
        normal = free_reduce(std::move(normal));
    }
    return {free_reduce(std::move(normal)), free_reduce(std::move(acting))};
}

bool decide_equal(const GroupSpec& g, const Word& w1, const Word& w2) {
    for (const Word* w : {&w1, &w2})
        for (const Letter& l : *w)
            if (l.first < 1 || l.first > (int)g.generators.size())
                throw std::invalid_argument("decide_equal: unknown generator index");
    switch (g.kind) {
        case GroupSpec::Kind::FreeGroup:
            return free_reduce(w1) == free_reduce(w2);
        case GroupSpec::Kind::BraidGroup:
            return braid_equal(BraidWord(g.braid_strands, w1), BraidWord(g.braid_strands, w2));
        case GroupSpec::Kind::SemidirectFreeByFree:
            return semidirect_normal_form(g, w1) == semidirect_normal_form(g, w2);
    }
    return false;
}

bool decide_equal(const GroupSpec& g, const std::string& w1, const std::string& w2) {
    return decide_equal(g, g.parse_word(w1), g.parse_word(w2));
}

}  // namespace rcs
